#include "msm/signed_multiset.hpp"

#include <map>

namespace msm {

namespace {

void require_same_space(const SignedMultiset& x, const SignedMultiset& y) {
    if (x.space() == y.space()) return;
    if (x.space() && y.space() && *x.space() == *y.space()) return;
    throw ValidationError("signed multisets live over different ground spaces");
}

Multiset signed_part(const SignedMultiset& x, int sign) {
    std::vector<Multiset::Entry> entries;
    for (const auto& [element, coefficient] : x.entries()) {
        if (sign > 0 && coefficient > 0) entries.emplace_back(element, coefficient);
        if (sign < 0 && coefficient < 0) entries.emplace_back(element, -coefficient);
    }
    return Multiset::canonicalize(x.space(), entries);
}

}  // namespace

SignedMultiset SignedMultiset::canonicalize(GroundSpacePtr space, const std::vector<Entry>& raw) {
    if (!space) throw ValidationError("signed multiset requires a ground space");
    std::map<Element, std::int64_t> merged;
    for (const auto& [element, coefficient] : raw) {
        space->validate_element(element);
        if (coefficient == 0 || element == space->basepoint()) continue;
        merged[element] += coefficient;
    }
    std::vector<Entry> entries;
    entries.reserve(merged.size());
    for (const auto& [element, coefficient] : merged) {
        if (coefficient != 0) entries.emplace_back(element, coefficient);
    }
    return SignedMultiset(std::move(space), std::move(entries));
}

SignedMultiset SignedMultiset::zero(GroundSpacePtr space) { return canonicalize(std::move(space), {}); }

bool SignedMultiset::operator==(const SignedMultiset& other) const {
    if (space_ != other.space_ && !(space_ && other.space_ && *space_ == *other.space_)) return false;
    return entries_ == other.entries_;
}

Multiset pos_part(const SignedMultiset& x) { return signed_part(x, +1); }

Multiset neg_part(const SignedMultiset& x) { return signed_part(x, -1); }

Multiset abs_parts_sum(const SignedMultiset& x) { return add(pos_part(x), neg_part(x)); }

SignedMultiset group_add(const SignedMultiset& x, const SignedMultiset& y) {
    require_same_space(x, y);
    std::vector<SignedMultiset::Entry> merged(x.entries());
    merged.insert(merged.end(), y.entries().begin(), y.entries().end());
    return SignedMultiset::canonicalize(x.space(), merged);
}

SignedMultiset group_neg(const SignedMultiset& x) {
    std::vector<SignedMultiset::Entry> negated;
    negated.reserve(x.entries().size());
    for (const auto& [element, coefficient] : x.entries()) {
        negated.emplace_back(element, -coefficient);
    }
    return SignedMultiset::canonicalize(x.space(), negated);
}

SignedMultiset group_sub(const SignedMultiset& x, const SignedMultiset& y) {
    return group_add(x, group_neg(y));
}

double group_distance(const SignedMultiset& x, const SignedMultiset& y, std::size_t size_cap) {
    require_same_space(x, y);
    return matching_distance(add(pos_part(x), neg_part(y)), add(pos_part(y), neg_part(x)), size_cap);
}

SignedMultiset embed_multiset(const Multiset& a) {
    std::vector<SignedMultiset::Entry> entries(a.entries().begin(), a.entries().end());
    return SignedMultiset::canonicalize(a.space(), entries);
}

}  // namespace msm
