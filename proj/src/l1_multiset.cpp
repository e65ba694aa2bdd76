#include "msm/l1_multiset.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "msm/errors.hpp"

namespace msm {

DistanceInterval::DistanceInterval(double center, double radius) : center_(center), radius_(radius) {
    if (!std::isfinite(center) || center < 0.0) {
        throw ValidationError("distance interval center must be finite and nonnegative");
    }
    if (!std::isfinite(radius) || radius < 0.0) {
        throw ValidationError("distance interval radius must be finite and nonnegative");
    }
}

double DistanceInterval::lower() const { return std::max(0.0, center_ - radius_); }

double DistanceInterval::upper() const { return center_ + radius_; }

double DistanceInterval::width() const {
    if (center_ - radius_ > 0.0) return 2.0 * radius_;
    return center_ + radius_;
}

bool DistanceInterval::contains(double value, double slack) const {
    return value >= lower() - slack && value <= upper() + slack;
}

TruncatedL1Multiset::TruncatedL1Multiset(Multiset head, double tail_mass)
    : head_(std::move(head)), tail_mass_(tail_mass) {
    if (!std::isfinite(tail_mass) || tail_mass < 0.0) {
        throw ValidationError("tail_mass must be finite and nonnegative");
    }
}

TruncatedL1Multiset TruncatedL1Multiset::exact(Multiset head) {
    return TruncatedL1Multiset(std::move(head), 0.0);
}

DistanceInterval l1_distance(const TruncatedL1Multiset& a, const TruncatedL1Multiset& b,
                             std::size_t size_cap) {
    const double head_distance = matching_distance(a.head(), b.head(), size_cap);
    return DistanceInterval(head_distance, a.tail_mass() + b.tail_mass());
}

TruncatedL1Multiset truncate(const TruncatedL1Multiset& a, std::int64_t budget) {
    if (budget < 0) throw ValidationError("truncation budget must be nonnegative");
    const Multiset& head = a.head();
    if (budget >= head.total_size()) return a;

    const GroundSpacePtr& space = head.space();
    struct Ranked {
        const Multiset::Entry* entry;
        double distance;
    };
    std::vector<Ranked> ranked;
    ranked.reserve(head.entries().size());
    for (const auto& entry : head.entries()) {
        ranked.push_back({&entry, dist(*space, entry.first, space->basepoint())});
    }
    // Keep the farthest elements; among equidistant elements keep the ones
    // earliest in element order.  Entries are already key-sorted, so a stable
    // sort on distance alone preserves that tie-break.
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const Ranked& x, const Ranked& y) { return x.distance > y.distance; });

    std::vector<Multiset::Entry> kept;
    double dropped_mass = 0.0;
    std::int64_t remaining = budget;
    for (const Ranked& r : ranked) {
        const std::int64_t multiplicity = r.entry->second;
        const std::int64_t keep = std::min(multiplicity, remaining);
        remaining -= keep;
        if (keep > 0) kept.emplace_back(r.entry->first, keep);
        const std::int64_t drop = multiplicity - keep;
        if (drop > 0) dropped_mass += static_cast<double>(drop) * r.distance;
    }
    return TruncatedL1Multiset(Multiset::canonicalize(space, kept), a.tail_mass() + dropped_mass);
}

std::vector<CauchyGapRow> cauchy_gap_table(int prefix_count) {
    if (prefix_count < 1 || prefix_count > 40) {
        throw ValidationError("prefix_count must lie in [1, 40]");
    }
    const GroundSpacePtr line = GroundSpace::euclidean(1, Element({0.0}));

    std::vector<Multiset> prefixes;
    prefixes.reserve(static_cast<std::size_t>(prefix_count));
    std::vector<Multiset::Entry> entries;
    for (int n = 1; n <= prefix_count; ++n) {
        entries.emplace_back(Element({std::ldexp(1.0, -n)}), 1);
        prefixes.push_back(Multiset::canonicalize(line, entries));
    }

    std::vector<CauchyGapRow> table;
    table.reserve(static_cast<std::size_t>(prefix_count) * (prefix_count - 1) / 2);
    for (int m = 2; m <= prefix_count; ++m) {
        for (int n = 1; n < m; ++n) {
            CauchyGapRow row;
            row.m = m;
            row.n = n;
            row.gap = matching_distance(prefixes[static_cast<std::size_t>(m - 1)],
                                        prefixes[static_cast<std::size_t>(n - 1)]);
            double bound = 0.0;
            for (int k = n + 1; k <= m; ++k) bound += std::ldexp(1.0, -k);
            row.bound = bound;
            table.push_back(row);
        }
    }
    return table;
}

}  // namespace msm
