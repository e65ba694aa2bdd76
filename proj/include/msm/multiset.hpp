#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "msm/assignment.hpp"
#include "msm/ground_space.hpp"

namespace msm {

// A canonical finite multiset over a ground space: entries map elements to
// positive multiplicities, sorted by key, with the basepoint never stored
// (padding with the basepoint is the identity, so the empty multiset plays
// the role of [e]). Immutable once built; all operations are pure.
class Multiset {
public:
    using Entry = std::pair<Element, std::int64_t>;

    // The canonical representative of a raw (element, multiplicity) list:
    // merges duplicate keys, drops zero multiplicities, drops every basepoint
    // entry. Negative multiplicities are rejected.
    static Multiset canonicalize(GroundSpacePtr space, const std::vector<Entry>& raw);

    static Multiset empty(GroundSpacePtr space);

    const GroundSpacePtr& space() const { return space_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::int64_t total_size() const { return total_size_; }
    bool is_empty() const { return entries_.empty(); }

    // Structural equality of canonical forms (requires equal spaces).
    bool operator==(const Multiset& other) const;
    bool operator!=(const Multiset& other) const { return !(*this == other); }

private:
    Multiset(GroundSpacePtr space, std::vector<Entry> entries, std::int64_t total_size)
        : space_(std::move(space)), entries_(std::move(entries)), total_size_(total_size) {}

    GroundSpacePtr space_;
    std::vector<Entry> entries_;   // key-sorted, multiplicities >= 1, no basepoint
    std::int64_t total_size_;      // sum of multiplicities
};

// A multiset's elements expanded by multiplicity in key order, followed by
// copies of the basepoint up to length n.
struct PaddedList {
    std::vector<Element> elements;
};

PaddedList make_padded_list(const Multiset& a, std::size_t n);

// Pointwise multiplicity sum. Associative and commutative; the empty multiset
// is the identity. Both arguments must live over the same ground space.
Multiset add(const Multiset& a, const Multiset& b);

// The matching distance: pad both multisets with basepoint copies to a common
// length, then take the minimum over all pairings of the summed ground
// distances. Padding to N = max(total sizes) already attains the minimum, so
// that is the size solved here; matching_distance_padded exposes the padding
// size for verification.
//
// The argument pair is normalized to a canonical order before solving, which
// makes the result exactly symmetric.
double matching_distance(const Multiset& a, const Multiset& b, std::size_t size_cap = kDefaultSizeCap);

double matching_distance_padded(const Multiset& a, const Multiset& b, std::size_t n_padded,
                                std::size_t size_cap = kDefaultSizeCap);

// The singleton multiset {x}; the empty multiset when x is the basepoint.
// An isometric embedding of the ground space.
Multiset embed_point(GroundSpacePtr space, const Element& x);

}  // namespace msm
