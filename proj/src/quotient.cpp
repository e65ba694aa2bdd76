#include "msm/quotient.hpp"

#include <algorithm>
#include <utility>

#include "msm/errors.hpp"

namespace msm {

QuotientSpace::QuotientSpace(GroundSpacePtr base, std::vector<Element> collapsed_subset)
    : base_(std::move(base)), collapsed_(std::move(collapsed_subset)) {
    if (!base_) throw ValidationError("quotient space requires a ground space");
    if (collapsed_.empty()) throw ValidationError("collapsed subset must be nonempty");
    for (const Element& x : collapsed_) base_->validate_element(x);
    std::sort(collapsed_.begin(), collapsed_.end());
    collapsed_.erase(std::unique(collapsed_.begin(), collapsed_.end()), collapsed_.end());
}

bool QuotientSpace::in_collapsed_subset(const Element& x) const {
    return std::binary_search(collapsed_.begin(), collapsed_.end(), x);
}

QuotientPoint::QuotientPoint(Element representative) : representative_(std::move(representative)) {}

QuotientPoint QuotientPoint::collapsed_class() { return QuotientPoint(); }

const Element& QuotientPoint::representative() const {
    if (!representative_) throw ValidationError("the collapsed class has no representative");
    return *representative_;
}

QuotientPoint collapse(const QuotientSpace& qs, const Element& x) {
    qs.base()->validate_element(x);
    if (qs.in_collapsed_subset(x)) return QuotientPoint::collapsed_class();
    return QuotientPoint(x);
}

double quotient_formula(const QuotientSpace& qs, const Element& x, const Element& y) {
    const GroundSpace& base = *qs.base();
    const double direct = dist(base, x, y);
    const double via_subset =
        dist_to_set(base, x, qs.collapsed_subset()) + dist_to_set(base, y, qs.collapsed_subset());
    return std::min(direct, via_subset);
}

double quotient_distance(const QuotientSpace& qs, const QuotientPoint& p, const QuotientPoint& r) {
    if (p.is_collapsed() && r.is_collapsed()) return 0.0;
    if (p.is_collapsed()) return dist_to_set(*qs.base(), r.representative(), qs.collapsed_subset());
    if (r.is_collapsed()) return dist_to_set(*qs.base(), p.representative(), qs.collapsed_subset());
    return quotient_formula(qs, p.representative(), r.representative());
}

}  // namespace msm
