#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "msm/element.hpp"
#include "msm/errors.hpp"

namespace msm {

enum class MetricKind { Euclidean, L1, Discrete, FiniteMatrix };

std::string to_string(MetricKind kind);

// Result of checking a user-supplied distance matrix against the metric
// axioms. `indices` identifies the offending entry or triple.
struct MetricViolation {
    enum class Axiom { Shape, Nonnegative, ZeroDiagonal, PositiveOffDiagonal, Symmetry, Triangle };
    Axiom axiom;
    std::vector<std::size_t> indices;
    std::string message;
};

// Accepts iff the matrix is square, symmetric, zero on the diagonal,
// strictly positive off the diagonal, and satisfies all n^3 triangle
// inequalities. Returns the first violated axiom otherwise.
std::optional<MetricViolation> validate_finite_metric(const std::vector<std::vector<double>>& matrix);

class GroundSpace;
using GroundSpacePtr = std::shared_ptr<const GroundSpace>;

// A pointed metric space: a distance rule, a basepoint, and an element-key
// discipline. Immutable after construction; all queries are pure, so a single
// instance can be shared freely across threads. Factories hand out shared
// pointers because every multiset built over the space keeps a reference.
//
// Construction validates the basepoint against the space and, for
// finite-matrix spaces, checks every metric axiom on the supplied matrix
// (matrices that encode pseudometrics are rejected).
class GroundSpace {
public:
    static GroundSpacePtr euclidean(std::size_t dimension, Element basepoint);
    static GroundSpacePtr l1(std::size_t dimension, Element basepoint);
    static GroundSpacePtr discrete(Element basepoint);
    static GroundSpacePtr finite_matrix(std::vector<std::vector<double>> matrix,
                                        std::vector<std::string> labels, Element basepoint);

    MetricKind kind() const { return kind_; }
    std::size_t dimension() const { return dimension_; }
    const Element& basepoint() const { return basepoint_; }
    const std::vector<std::vector<double>>& matrix() const { return matrix_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Throws ValidationError if the element's key does not fit this space
    // (wrong key flavor, wrong dimension, unknown label).
    void validate_element(const Element& p) const;

    bool operator==(const GroundSpace& other) const;
    bool operator!=(const GroundSpace& other) const { return !(*this == other); }

private:
    GroundSpace() = default;

    MetricKind kind_ = MetricKind::Euclidean;
    std::size_t dimension_ = 0;
    Element basepoint_;
    std::vector<std::vector<double>> matrix_;   // finite_matrix only
    std::vector<std::string> labels_;           // finite_matrix only

    friend double dist(const GroundSpace&, const Element&, const Element&);
    std::size_t label_index(const std::string& label) const;
};

// Exact formula evaluation of the ground distance. Deterministic; symmetric
// bit-for-bit because every formula is evaluated the same way in both
// argument orders.
double dist(const GroundSpace& space, const Element& p, const Element& q);

// min over h in H of dist(p, h). H must be nonempty.
double dist_to_set(const GroundSpace& space, const Element& p, const std::vector<Element>& H);

}  // namespace msm
