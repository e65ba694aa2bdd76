#include "msm/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace msm {

namespace {

void check_entries(const std::vector<double>& entries) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!std::isfinite(entries[i]) || entries[i] < 0.0) {
            std::ostringstream msg;
            msg << "cost matrix entry " << i << " = " << entries[i]
                << " is not a finite nonnegative number";
            throw ValidationError(msg.str());
        }
    }
}

double cost_along(const CostMatrix& m, const std::vector<std::size_t>& row_to_col) {
    double total = 0.0;
    for (std::size_t i = 0; i < row_to_col.size(); ++i) {
        total += m.at(i, row_to_col[i]);
    }
    return total;
}

}  // namespace

CostMatrix::CostMatrix(std::size_t n, std::vector<double> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ == 0) throw ValidationError("cost matrix must have positive size");
    if (entries_.size() != n_ * n_) {
        std::ostringstream msg;
        msg << "cost matrix: expected " << n_ * n_ << " entries for n = " << n_ << ", got "
            << entries_.size();
        throw ValidationError(msg.str());
    }
    check_entries(entries_);
}

CostMatrix::CostMatrix(const std::vector<std::vector<double>>& rows) : n_(rows.size()) {
    if (n_ == 0) throw ValidationError("cost matrix must have positive size");
    entries_.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_) {
            std::ostringstream msg;
            msg << "cost matrix row " << i << " has " << rows[i].size() << " entries, expected " << n_;
            throw ValidationError(msg.str());
        }
        entries_.insert(entries_.end(), rows[i].begin(), rows[i].end());
    }
    check_entries(entries_);
}

Assignment solve_assignment(const CostMatrix& m, std::size_t size_cap) {
    const std::size_t n = m.size();
    if (n > size_cap) {
        std::ostringstream msg;
        msg << "cost matrix size " << n << " exceeds the solver size cap " << size_cap;
        throw SizeCapError(msg.str());
    }

    constexpr double inf = std::numeric_limits<double>::infinity();
    // 1-based with a sentinel column 0; col_to_row[j] is the row matched to
    // column j, 0 meaning unmatched.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), min_reduced(n + 1);
    std::vector<std::size_t> col_to_row(n + 1, 0), parent_col(n + 1, 0);
    std::vector<char> visited(n + 1);

    for (std::size_t row = 1; row <= n; ++row) {
        col_to_row[0] = row;
        std::size_t j0 = 0;
        std::fill(min_reduced.begin(), min_reduced.end(), inf);
        std::fill(visited.begin(), visited.end(), 0);
        do {
            visited[j0] = 1;
            const std::size_t i0 = col_to_row[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (visited[j]) continue;
                const double reduced = m.at(i0 - 1, j - 1) - u[i0] - v[j];
                if (reduced < min_reduced[j]) {
                    min_reduced[j] = reduced;
                    parent_col[j] = j0;
                }
                if (min_reduced[j] < delta) {
                    delta = min_reduced[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (visited[j]) {
                    u[col_to_row[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_reduced[j] -= delta;
                }
            }
            j0 = j1;
        } while (col_to_row[j0] != 0);
        // Walk the augmenting path backwards, flipping matched edges.
        while (j0 != 0) {
            const std::size_t j1 = parent_col[j0];
            col_to_row[j0] = col_to_row[j1];
            j0 = j1;
        }
    }

    Assignment result;
    result.row_to_col.assign(n, 0);
    for (std::size_t j = 1; j <= n; ++j) {
        result.row_to_col[col_to_row[j] - 1] = j - 1;
    }
    result.total_cost = cost_along(m, result.row_to_col);
    return result;
}

Assignment brute_force_assignment(const CostMatrix& m) {
    const std::size_t n = m.size();
    if (n > 8) {
        std::ostringstream msg;
        msg << "brute-force oracle supports n <= 8, got " << n;
        throw ValidationError(msg.str());
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Assignment best;
    best.row_to_col = perm;
    best.total_cost = cost_along(m, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        const double total = cost_along(m, perm);
        if (total < best.total_cost) {
            best.total_cost = total;
            best.row_to_col = perm;
        }
    }
    return best;
}

}  // namespace msm
