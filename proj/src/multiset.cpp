#include "msm/multiset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "msm/test_hooks.hpp"

namespace msm {

namespace {

void require_same_space(const Multiset& a, const Multiset& b) {
    if (a.space() == b.space()) return;
    if (a.space() && b.space() && *a.space() == *b.space()) return;
    throw ValidationError("multisets live over different ground spaces");
}

// Entries sequences are key-sorted, so lexicographic comparison gives a total
// order on canonical forms. Used to normalize argument order for symmetry.
bool lex_less(const Multiset& a, const Multiset& b) {
    const auto& x = a.entries();
    const auto& y = b.entries();
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (x[i].first != y[i].first) return x[i].first < y[i].first;
        if (x[i].second != y[i].second) return x[i].second < y[i].second;
    }
    return x.size() < y.size();
}

}  // namespace

Multiset Multiset::canonicalize(GroundSpacePtr space, const std::vector<Entry>& raw) {
    if (!space) throw ValidationError("multiset requires a ground space");
    std::map<Element, std::int64_t> merged;
    for (const auto& [element, multiplicity] : raw) {
        if (multiplicity < 0) {
            std::ostringstream msg;
            msg << "multiplicity " << multiplicity << " for element " << element.describe()
                << " is negative";
            throw ValidationError(msg.str());
        }
        space->validate_element(element);
        if (multiplicity == 0 || element == space->basepoint()) continue;
        merged[element] += multiplicity;
    }
    std::vector<Entry> entries;
    entries.reserve(merged.size());
    std::int64_t total = 0;
    for (auto& [element, multiplicity] : merged) {
        entries.emplace_back(element, multiplicity);
        total += multiplicity;
    }
    return Multiset(std::move(space), std::move(entries), total);
}

Multiset Multiset::empty(GroundSpacePtr space) { return canonicalize(std::move(space), {}); }

bool Multiset::operator==(const Multiset& other) const {
    if (space_ != other.space_ && !(space_ && other.space_ && *space_ == *other.space_)) return false;
    return entries_ == other.entries_;
}

PaddedList make_padded_list(const Multiset& a, std::size_t n) {
    PaddedList list;
    list.elements.reserve(n);
    for (const auto& [element, multiplicity] : a.entries()) {
        for (std::int64_t k = 0; k < multiplicity; ++k) list.elements.push_back(element);
    }
    if (list.elements.size() > n) {
        std::ostringstream msg;
        msg << "padding size " << n << " is smaller than the multiset size " << list.elements.size();
        throw ValidationError(msg.str());
    }
    while (list.elements.size() < n) list.elements.push_back(a.space()->basepoint());
    return list;
}

Multiset add(const Multiset& a, const Multiset& b) {
    require_same_space(a, b);
    std::vector<Multiset::Entry> merged(a.entries());
    merged.insert(merged.end(), b.entries().begin(), b.entries().end());
    return Multiset::canonicalize(a.space(), merged);
}

double matching_distance(const Multiset& a, const Multiset& b, std::size_t size_cap) {
    require_same_space(a, b);
    if (a.is_empty() && b.is_empty()) return 0.0;
    const std::size_t n = static_cast<std::size_t>(std::max(a.total_size(), b.total_size()));
    return matching_distance_padded(a, b, n, size_cap);
}

double matching_distance_padded(const Multiset& a, const Multiset& b, std::size_t n_padded,
                                std::size_t size_cap) {
    require_same_space(a, b);
    const std::size_t min_n =
        static_cast<std::size_t>(std::max<std::int64_t>(std::max(a.total_size(), b.total_size()), 1));
    if (n_padded < min_n) {
        std::ostringstream msg;
        msg << "padding size " << n_padded << " is below the required minimum " << min_n;
        throw ValidationError(msg.str());
    }
    if (n_padded > size_cap) {
        std::ostringstream msg;
        msg << "padded size " << n_padded << " exceeds the solver size cap " << size_cap;
        throw SizeCapError(msg.str());
    }

    const Multiset* lo = &a;
    const Multiset* hi = &b;
    if (lex_less(*hi, *lo)) std::swap(lo, hi);

    const PaddedList rows = make_padded_list(*lo, n_padded);
    const PaddedList cols = make_padded_list(*hi, n_padded);
    const GroundSpace& space = *lo->space();

    std::vector<double> costs;
    costs.reserve(n_padded * n_padded);
    for (const Element& x : rows.elements) {
        for (const Element& y : cols.elements) {
            costs.push_back(dist(space, x, y));
        }
    }
    if (const double delta = testing::cost_perturbation();
        delta != 0.0 && n_padded % 2 == 1 && costs[0] > 0.0) {
        costs[0] += delta;
    }
    return solve_assignment(CostMatrix(n_padded, std::move(costs)), size_cap).total_cost;
}

Multiset embed_point(GroundSpacePtr space, const Element& x) {
    return Multiset::canonicalize(std::move(space), {{x, 1}});
}

}  // namespace msm
