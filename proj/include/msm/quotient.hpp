#pragma once

#include <optional>
#include <vector>

#include "msm/ground_space.hpp"

namespace msm {

// A ground space together with a nonempty finite subset H that is identified
// to a single point.  Finiteness makes H closed in every ground metric and
// keeps the distance-to-H computation a plain minimum.
class QuotientSpace {
public:
    QuotientSpace(GroundSpacePtr base, std::vector<Element> collapsed_subset);

    const GroundSpacePtr& base() const { return base_; }
    // The members of H, deduplicated and in element order.
    const std::vector<Element>& collapsed_subset() const { return collapsed_; }
    // Exact-key membership test; nearby-but-distinct elements stay uncollapsed.
    bool in_collapsed_subset(const Element& x) const;

private:
    GroundSpacePtr base_;
    std::vector<Element> collapsed_;
};

// A point of the quotient: either the single class [H] or the class of an
// element outside H.  Instances are produced by collapse(), which guarantees a
// stored representative never lies in H.
class QuotientPoint {
public:
    // The distinguished class that H collapses to.
    static QuotientPoint collapsed_class();

    bool is_collapsed() const { return !representative_.has_value(); }
    const Element& representative() const;

private:
    QuotientPoint() = default;
    explicit QuotientPoint(Element representative);

    friend QuotientPoint collapse(const QuotientSpace& qs, const Element& x);

    std::optional<Element> representative_;
};

// The quotient map: sends members of H to [H] and any other element to its own
// class.
QuotientPoint collapse(const QuotientSpace& qs, const Element& x);

// The defining formula min{ d(x,y), d(x,H) + d(y,H) } applied directly to two
// elements of the base space.  On the quotient this induces a metric; applied
// to distinct members of H it yields 0, which is exactly why those points must
// be identified for the axioms to hold.
double quotient_formula(const QuotientSpace& qs, const Element& x, const Element& y);

// Distance between two quotient classes: 0 if both are [H], d(x,H) if exactly
// one is, and the min formula otherwise.
double quotient_distance(const QuotientSpace& qs, const QuotientPoint& p, const QuotientPoint& r);

}  // namespace msm
