#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "msm/assignment.hpp"
#include "msm/errors.hpp"
#include "msm/rng.hpp"

using msm::Assignment;
using msm::CostMatrix;
using msm::SizeCapError;
using msm::ValidationError;

namespace {

bool is_permutation_of_indices(const std::vector<std::size_t>& row_to_col) {
    std::vector<char> seen(row_to_col.size(), 0);
    for (const std::size_t c : row_to_col) {
        if (c >= row_to_col.size() || seen[c]) return false;
        seen[c] = 1;
    }
    return true;
}

}  // namespace

TEST_CASE("one by one matrix returns its single entry") {
    const Assignment a = msm::solve_assignment(CostMatrix(1, {2.5}));
    CHECK(a.total_cost == 2.5);
    REQUIRE(a.row_to_col.size() == 1);
    CHECK(a.row_to_col[0] == 0);
    CHECK(msm::solve_assignment(CostMatrix(1, {0.0})).total_cost == 0.0);
}

TEST_CASE("zero diagonal with large off-diagonal picks the diagonal") {
    const CostMatrix m({{0.0, 9.0, 9.0}, {9.0, 0.0, 9.0}, {9.0, 9.0, 0.0}});
    const Assignment a = msm::solve_assignment(m);
    CHECK(a.total_cost == 0.0);
    CHECK(a.row_to_col == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("three by three example with a non-identity optimum") {
    const CostMatrix m({{4.0, 1.0, 3.0}, {2.0, 0.0, 5.0}, {3.0, 2.0, 2.0}});
    CHECK(msm::solve_assignment(m).total_cost == 5.0);
    CHECK(msm::brute_force_assignment(m).total_cost == 5.0);
}

TEST_CASE("brute force handles small fixed cases") {
    CHECK(msm::brute_force_assignment(CostMatrix({{1.0, 2.0}, {2.0, 1.0}})).total_cost == 2.0);
    CHECK(msm::brute_force_assignment(CostMatrix(1, {0.0})).total_cost == 0.0);
    const CostMatrix nine(9, std::vector<double>(81, 1.0));
    CHECK_THROWS_AS(msm::brute_force_assignment(nine), ValidationError);
}

TEST_CASE("solver agrees with the brute force oracle on random matrices") {
    msm::Rng rng(20240811u, "assignment-unit-oracle");
    for (int iteration = 0; iteration < 150; ++iteration) {
        const std::size_t n = rng.uniform_index(6) + 1;
        std::vector<double> entries(n * n);
        for (double& e : entries) e = rng.uniform_double(0.0, 10.0);
        const CostMatrix m(n, entries);
        const Assignment fast = msm::solve_assignment(m);
        const Assignment slow = msm::brute_force_assignment(m);
        CHECK(std::fabs(fast.total_cost - slow.total_cost) <= 1e-9);
        CHECK(is_permutation_of_indices(fast.row_to_col));
        CHECK(is_permutation_of_indices(slow.row_to_col));
    }
}

TEST_CASE("reported cost matches the reported permutation") {
    msm::Rng rng(20240811u, "assignment-unit-consistency");
    for (int iteration = 0; iteration < 50; ++iteration) {
        const std::size_t n = rng.uniform_index(12) + 1;
        std::vector<double> entries(n * n);
        for (double& e : entries) e = rng.uniform_double(0.0, 5.0);
        const CostMatrix m(n, entries);
        const Assignment a = msm::solve_assignment(m);
        REQUIRE(is_permutation_of_indices(a.row_to_col));
        double recomputed = 0.0;
        for (std::size_t i = 0; i < n; ++i) recomputed += m.at(i, a.row_to_col[i]);
        CHECK(a.total_cost == recomputed);
    }
}

TEST_CASE("cost matrices validate their entries") {
    CHECK_THROWS_AS(CostMatrix(2, {1.0, 2.0, 3.0}), ValidationError);          // wrong count
    CHECK_THROWS_AS(CostMatrix(0, {}), ValidationError);                       // empty
    CHECK_THROWS_AS(CostMatrix({{1.0, 2.0}, {1.0}}), ValidationError);         // ragged rows
    CHECK_THROWS_AS(CostMatrix(1, {-1.0}), ValidationError);                   // negative
    CHECK_THROWS_AS(CostMatrix(1, {std::numeric_limits<double>::infinity()}), ValidationError);
    CHECK_THROWS_AS(CostMatrix(1, {std::numeric_limits<double>::quiet_NaN()}), ValidationError);
}

TEST_CASE("solver refuses matrices beyond the size cap") {
    const CostMatrix m(3, std::vector<double>(9, 1.0));
    CHECK_THROWS_AS(msm::solve_assignment(m, 2), SizeCapError);
    CHECK_NOTHROW(msm::solve_assignment(m, 3));
}
