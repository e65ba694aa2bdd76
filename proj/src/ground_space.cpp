#include "msm/ground_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace msm {

std::string to_string(MetricKind kind) {
    switch (kind) {
        case MetricKind::Euclidean: return "euclidean";
        case MetricKind::L1: return "l1";
        case MetricKind::Discrete: return "discrete";
        case MetricKind::FiniteMatrix: return "finite_matrix";
    }
    return "?";
}

std::optional<MetricViolation> validate_finite_metric(const std::vector<std::vector<double>>& m) {
    using Axiom = MetricViolation::Axiom;
    const std::size_t n = m.size();
    if (n == 0) {
        return MetricViolation{Axiom::Shape, {}, "matrix is empty"};
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) {
            std::ostringstream msg;
            msg << "matrix row " << i << " has " << m[i].size() << " entries, expected " << n;
            return MetricViolation{Axiom::Shape, {i}, msg.str()};
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = m[i][j];
            if (!std::isfinite(v) || v < 0.0) {
                std::ostringstream msg;
                msg << "matrix[" << i << "][" << j << "] = " << v << " is not a finite nonnegative number";
                return MetricViolation{Axiom::Nonnegative, {i, j}, msg.str()};
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i] != 0.0) {
            std::ostringstream msg;
            msg << "matrix[" << i << "][" << i << "] = " << m[i][i] << ", diagonal must be zero";
            return MetricViolation{Axiom::ZeroDiagonal, {i, i}, msg.str()};
        }
    }
    // Zero off-diagonal entries encode a pseudometric: two labels at distance
    // zero would break key-based equality, so they are rejected outright.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && m[i][j] == 0.0) {
                std::ostringstream msg;
                msg << "matrix[" << i << "][" << j << "] = 0 off the diagonal (pseudometric not allowed)";
                return MetricViolation{Axiom::PositiveOffDiagonal, {i, j}, msg.str()};
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m[i][j] != m[j][i]) {
                std::ostringstream msg;
                msg << "matrix[" << i << "][" << j << "] = " << m[i][j] << " but matrix[" << j << "]["
                    << i << "] = " << m[j][i] << " (symmetry)";
                return MetricViolation{Axiom::Symmetry, {i, j}, msg.str()};
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (m[i][k] > m[i][j] + m[j][k]) {
                    std::ostringstream msg;
                    msg << "triangle inequality fails: matrix[" << i << "][" << k << "] = " << m[i][k]
                        << " > " << m[i][j] << " + " << m[j][k] << " through " << j;
                    return MetricViolation{Axiom::Triangle, {i, j, k}, msg.str()};
                }
            }
        }
    }
    return std::nullopt;
}

GroundSpacePtr GroundSpace::euclidean(std::size_t dimension, Element basepoint) {
    if (dimension == 0) throw ValidationError("dimension must be a positive integer");
    GroundSpace s;
    s.kind_ = MetricKind::Euclidean;
    s.dimension_ = dimension;
    s.basepoint_ = std::move(basepoint);
    s.validate_element(s.basepoint_);
    return std::make_shared<GroundSpace>(std::move(s));
}

GroundSpacePtr GroundSpace::l1(std::size_t dimension, Element basepoint) {
    if (dimension == 0) throw ValidationError("dimension must be a positive integer");
    GroundSpace s;
    s.kind_ = MetricKind::L1;
    s.dimension_ = dimension;
    s.basepoint_ = std::move(basepoint);
    s.validate_element(s.basepoint_);
    return std::make_shared<GroundSpace>(std::move(s));
}

GroundSpacePtr GroundSpace::discrete(Element basepoint) {
    GroundSpace s;
    s.kind_ = MetricKind::Discrete;
    s.basepoint_ = std::move(basepoint);
    s.validate_element(s.basepoint_);
    return std::make_shared<GroundSpace>(std::move(s));
}

GroundSpacePtr GroundSpace::finite_matrix(std::vector<std::vector<double>> matrix,
                                          std::vector<std::string> labels, Element basepoint) {
    if (auto violation = validate_finite_metric(matrix)) {
        throw ValidationError("matrix: " + violation->message);
    }
    if (labels.size() != matrix.size()) {
        std::ostringstream msg;
        msg << "labels has " << labels.size() << " entries but matrix is " << matrix.size() << "x"
            << matrix.size();
        throw ValidationError(msg.str());
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            if (labels[i] == labels[j]) {
                throw ValidationError("labels: duplicate label \"" + labels[i] + "\"");
            }
        }
    }
    GroundSpace s;
    s.kind_ = MetricKind::FiniteMatrix;
    s.matrix_ = std::move(matrix);
    s.labels_ = std::move(labels);
    s.basepoint_ = std::move(basepoint);
    s.validate_element(s.basepoint_);
    return std::make_shared<GroundSpace>(std::move(s));
}

void GroundSpace::validate_element(const Element& p) const {
    switch (kind_) {
        case MetricKind::Euclidean:
        case MetricKind::L1:
            if (!p.is_coords()) {
                throw ValidationError("element: expected a coordinate tuple for a " + to_string(kind_) +
                                      " space");
            }
            if (p.coords().size() != dimension_) {
                std::ostringstream msg;
                msg << "element " << p.describe() << ": dimension " << p.coords().size()
                    << " does not match space dimension " << dimension_;
                throw ValidationError(msg.str());
            }
            return;
        case MetricKind::Discrete:
            if (!p.is_label()) {
                throw ValidationError("element: expected a label string for a discrete space");
            }
            return;
        case MetricKind::FiniteMatrix:
            if (!p.is_label()) {
                throw ValidationError("element: expected a label string for a finite_matrix space");
            }
            label_index(p.label());
            return;
    }
}

std::size_t GroundSpace::label_index(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw ValidationError("element \"" + label + "\" is not in the matrix label index");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

bool GroundSpace::operator==(const GroundSpace& other) const {
    return kind_ == other.kind_ && dimension_ == other.dimension_ && basepoint_ == other.basepoint_ &&
           matrix_ == other.matrix_ && labels_ == other.labels_;
}

double dist(const GroundSpace& space, const Element& p, const Element& q) {
    space.validate_element(p);
    space.validate_element(q);
    switch (space.kind()) {
        case MetricKind::Euclidean: {
            const auto& a = p.coords();
            const auto& b = q.coords();
            double sum = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                const double d = a[i] - b[i];
                sum += d * d;
            }
            return std::sqrt(sum);
        }
        case MetricKind::L1: {
            const auto& a = p.coords();
            const auto& b = q.coords();
            double sum = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                sum += std::fabs(a[i] - b[i]);
            }
            return sum;
        }
        case MetricKind::Discrete:
            return p == q ? 0.0 : 1.0;
        case MetricKind::FiniteMatrix:
            return space.matrix()[space.label_index(p.label())][space.label_index(q.label())];
    }
    return 0.0;
}

double dist_to_set(const GroundSpace& space, const Element& p, const std::vector<Element>& H) {
    if (H.empty()) throw ValidationError("H: distance to an empty set is undefined");
    double best = dist(space, p, H.front());
    for (std::size_t i = 1; i < H.size(); ++i) {
        best = std::min(best, dist(space, p, H[i]));
    }
    return best;
}

}  // namespace msm
