#include "msm/element.hpp"

#include <cmath>
#include <sstream>

#include "msm/errors.hpp"

namespace msm {

namespace {

Element::Coords normalized(Element::Coords coords) {
    for (double& c : coords) {
        if (!std::isfinite(c)) {
            throw ValidationError("element coordinate is not a finite number");
        }
        if (c == 0.0) c = 0.0;  // collapse -0.0 so equal keys have one representation
    }
    return coords;
}

}  // namespace

Element::Element(Coords coords) : key_(normalized(std::move(coords))) {}

Element::Element(std::string label) : key_(std::move(label)) {}

Element::Element(std::initializer_list<double> coords) : Element(Coords(coords)) {}

const Element::Coords& Element::coords() const {
    if (!is_coords()) throw ValidationError("element key is a label, expected coordinates");
    return std::get<Coords>(key_);
}

const std::string& Element::label() const {
    if (!is_label()) throw ValidationError("element key is coordinates, expected a label");
    return std::get<std::string>(key_);
}

bool Element::operator<(const Element& other) const {
    if (key_.index() != other.key_.index()) return key_.index() < other.key_.index();
    if (is_coords()) {
        const Coords& a = std::get<Coords>(key_);
        const Coords& b = std::get<Coords>(other.key_);
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
    return std::get<std::string>(key_) < std::get<std::string>(other.key_);
}

std::string Element::describe() const {
    if (is_label()) return label();
    std::ostringstream out;
    out << "(";
    const Coords& c = coords();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) out << ", ";
        out << c[i];
    }
    out << ")";
    return out.str();
}

}  // namespace msm
