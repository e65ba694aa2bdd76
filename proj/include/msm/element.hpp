#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace msm {

// A point of a ground space. The key is either a coordinate tuple (euclidean
// and l1 spaces) or a label string (discrete and finite-matrix spaces).
// Keys support exact equality and a total order; both are used to keep
// multiset representations canonical, so coordinates must be finite and
// negative zero is normalized to positive zero on construction.
class Element {
public:
    using Coords = std::vector<double>;

    Element() = default;
    explicit Element(Coords coords);                 // throws ValidationError on non-finite entries
    explicit Element(std::string label);
    Element(std::initializer_list<double> coords);

    bool is_coords() const { return std::holds_alternative<Coords>(key_); }
    bool is_label() const { return std::holds_alternative<std::string>(key_); }

    const Coords& coords() const;        // throws ValidationError if the key is a label
    const std::string& label() const;    // throws ValidationError if the key is coordinates

    bool operator==(const Element& other) const { return key_ == other.key_; }
    bool operator!=(const Element& other) const { return !(*this == other); }
    bool operator<(const Element& other) const;

    // Human-readable key, e.g. "(1, 2)" or "a". Used in error messages and
    // counterexample dumps.
    std::string describe() const;

private:
    std::variant<Coords, std::string> key_;
};

}  // namespace msm
