#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "msm/assignment.hpp"
#include "msm/multiset.hpp"

namespace msm {

// Certified enclosure of the extended matching distance between two truncated
// l1-multisets.  Stored in midpoint-radius form (as in ball arithmetic): the
// mathematical interval is [max(0, center - radius), center + radius], and
// keeping the radius explicit means width() is exact even when the rounded
// endpoints could not represent it.
class DistanceInterval {
public:
    DistanceInterval(double center, double radius);

    double center() const { return center_; }
    double radius() const { return radius_; }

    // Endpoints of the enclosure, clamped below at zero.
    double lower() const;
    double upper() const;

    // Exact width of the enclosure: 2*radius unless the lower endpoint is
    // clamped at zero, in which case the interval is [0, center + radius].
    double width() const;

    // True when value lies in [lower - slack, upper + slack].
    bool contains(double value, double slack = 0.0) const;

private:
    double center_;
    double radius_;
};

// A finitely-represented l1-multiset: an explicitly stored finite head plus a
// certified upper bound tail_mass on the total ground distance from every
// dropped element to the basepoint.
class TruncatedL1Multiset {
public:
    TruncatedL1Multiset(Multiset head, double tail_mass);

    // A finite multiset represented exactly (tail mass zero).
    static TruncatedL1Multiset exact(Multiset head);

    const Multiset& head() const { return head_; }
    double tail_mass() const { return tail_mass_; }
    const GroundSpacePtr& space() const { return head_.space(); }

private:
    Multiset head_;
    double tail_mass_;
};

// Enclosure of the extended matching distance: with m the matching distance of
// the heads, returns [max(0, m - tail_a - tail_b), m + tail_a + tail_b].
DistanceInterval l1_distance(const TruncatedL1Multiset& a, const TruncatedL1Multiset& b,
                             std::size_t size_cap = kDefaultSizeCap);

// Keeps the `budget` head elements farthest from the basepoint (counting
// multiplicity, ties broken by element order) and folds the exact mass of the
// dropped elements into the tail bound.
TruncatedL1Multiset truncate(const TruncatedL1Multiset& a, std::int64_t budget);

// One entry of the prefix-sequence gap table: the matching distance between
// x_m = {2^-1, ..., 2^-m} and x_n for m > n, together with the geometric-sum
// bound sum_{k=n+1}^{m} 2^-k that the gap can never exceed.
struct CauchyGapRow {
    int m = 0;
    int n = 0;
    double gap = 0.0;
    double bound = 0.0;
};

// Pairwise matching distances between the prefixes x_1, ..., x_prefix_count of
// the sequence x_n = {2^-1, ..., 2^-n} over the real line with basepoint 0.
// The gaps shrink geometrically, exhibiting a Cauchy sequence with no finite
// multiset as its limit.  prefix_count must lie in [1, 40] so every power of
// two involved is exactly representable.
std::vector<CauchyGapRow> cauchy_gap_table(int prefix_count);

}  // namespace msm
