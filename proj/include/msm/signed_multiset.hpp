#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "msm/multiset.hpp"

namespace msm {

// An element of the free abelian group over a ground space: a canonical map
// from elements to nonzero integer coefficients (basepoint never a key).
// The positive and negative parts therefore have disjoint supports, which
// makes the pos/neg decomposition unique.
class SignedMultiset {
public:
    using Entry = std::pair<Element, std::int64_t>;

    // Merges duplicate keys, drops zero coefficients and basepoint entries.
    static SignedMultiset canonicalize(GroundSpacePtr space, const std::vector<Entry>& raw);

    static SignedMultiset zero(GroundSpacePtr space);

    const GroundSpacePtr& space() const { return space_; }
    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    bool operator==(const SignedMultiset& other) const;
    bool operator!=(const SignedMultiset& other) const { return !(*this == other); }

private:
    SignedMultiset(GroundSpacePtr space, std::vector<Entry> entries)
        : space_(std::move(space)), entries_(std::move(entries)) {}

    GroundSpacePtr space_;
    std::vector<Entry> entries_;   // key-sorted, coefficients != 0, no basepoint
};

// The disjoint-support decomposition x = pos_part(x) - neg_part(x).
Multiset pos_part(const SignedMultiset& x);
Multiset neg_part(const SignedMultiset& x);

Multiset abs_parts_sum(const SignedMultiset& x);  // pos_part + neg_part, used for size checks

SignedMultiset group_add(const SignedMultiset& x, const SignedMultiset& y);
SignedMultiset group_neg(const SignedMultiset& x);
SignedMultiset group_sub(const SignedMultiset& x, const SignedMultiset& y);

// The group metric d(x, y) = matching_distance(x+ + y-, y+ + x-). Well
// defined independently of how x and y are decomposed into differences of
// ordinary multisets.
double group_distance(const SignedMultiset& x, const SignedMultiset& y,
                      std::size_t size_cap = kDefaultSizeCap);

// Inclusion of the multiset monoid into the group; an isometric embedding
// and a monoid homomorphism.
SignedMultiset embed_multiset(const Multiset& a);

}  // namespace msm
