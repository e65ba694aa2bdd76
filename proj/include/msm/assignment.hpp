#pragma once

#include <cstddef>
#include <vector>

#include "msm/errors.hpp"

namespace msm {

// Largest matrix the exact solver accepts by default. O(n^3) keeps worst-case
// runtime at this size in the tens of seconds on a desktop core.
inline constexpr std::size_t kDefaultSizeCap = 2000;

// Square matrix of nonnegative finite matching costs, row-major.
class CostMatrix {
public:
    CostMatrix(std::size_t n, std::vector<double> entries);  // entries.size() must equal n*n
    explicit CostMatrix(const std::vector<std::vector<double>>& rows);

    std::size_t size() const { return n_; }
    double at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
    double& at(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }

private:
    std::size_t n_;
    std::vector<double> entries_;
};

// A perfect matching: row_to_col is a bijection on {0..n-1}, and total_cost is
// the sum of matrix entries along it (recomputed from the matrix, so the two
// fields always agree).
struct Assignment {
    std::vector<std::size_t> row_to_col;
    double total_cost = 0.0;
};

// Exact minimum-cost perfect matching via shortest augmenting paths with dual
// potentials, O(n^3). Comparisons on reduced costs are exact (no epsilon);
// which optimal permutation is returned may vary at the last bit, but the
// optimal value is exact up to floating-point accumulation.
Assignment solve_assignment(const CostMatrix& m, std::size_t size_cap = kDefaultSizeCap);

// Exhaustive minimum over all n! permutations. Ground truth for the solver;
// n must be at most 8.
Assignment brute_force_assignment(const CostMatrix& m);

}  // namespace msm
