#include <doctest.h>

#include <cmath>
#include <limits>

#include "msm/element.hpp"
#include "msm/errors.hpp"
#include "msm/ground_space.hpp"

using msm::Element;
using msm::GroundSpace;
using msm::MetricViolation;
using msm::ValidationError;

TEST_CASE("element keys validate and normalize") {
    CHECK_THROWS_AS(Element({std::numeric_limits<double>::quiet_NaN()}), ValidationError);
    CHECK_THROWS_AS(Element({std::numeric_limits<double>::infinity()}), ValidationError);
    CHECK_THROWS_AS(Element({0.0, -std::numeric_limits<double>::infinity()}), ValidationError);
    // Negative zero normalizes to positive zero so equal points get equal keys.
    CHECK(Element({-0.0}) == Element({0.0}));
    CHECK(Element({1.0, -0.0}) == Element({1.0, 0.0}));
    CHECK(Element("a") == Element("a"));
    CHECK(Element("a") != Element("b"));
    CHECK(Element({1.0}) != Element({2.0}));
}

TEST_CASE("element ordering is total and stable") {
    CHECK(Element({0.0}) < Element({1.0}));
    CHECK(Element({0.0, 1.0}) < Element({1.0, 0.0}));
    CHECK(Element({1.0}) < Element({1.0, 0.0}));  // shorter coordinate list first
    CHECK(Element("a") < Element("b"));
    CHECK_FALSE(Element("a") < Element("a"));
    CHECK(Element({1.0}).is_coords());
    CHECK(Element("a").is_label());
    CHECK_THROWS_AS(Element("a").coords(), ValidationError);
    CHECK_THROWS_AS(Element({1.0}).label(), ValidationError);
}

TEST_CASE("euclidean distance in one dimension") {
    const auto space = GroundSpace::euclidean(1, Element({0.0}));
    CHECK(msm::dist(*space, Element({0.25}), Element({0.0})) == 0.25);
    CHECK(msm::dist(*space, Element({0.0}), Element({0.25})) == 0.25);
    CHECK(msm::dist(*space, Element({0.5}), Element({0.5})) == 0.0);
}

TEST_CASE("euclidean distance in two dimensions") {
    const auto space = GroundSpace::euclidean(2, Element({0.0, 0.0}));
    CHECK(msm::dist(*space, Element({3.0, 0.0}), Element({0.0, 4.0})) == 5.0);
}

TEST_CASE("l1 distance sums coordinate gaps") {
    const auto space = GroundSpace::l1(3, Element({0.0, 0.0, 0.0}));
    CHECK(msm::dist(*space, Element({1.0, 2.0, 3.0}), Element({0.0, 0.0, 0.0})) == 6.0);
    CHECK(msm::dist(*space, Element({1.0, -2.0, 0.0}), Element({-1.0, 2.0, 0.0})) == 6.0);
}

TEST_CASE("discrete distance is the equality indicator") {
    const auto space = GroundSpace::discrete(Element("e"));
    CHECK(msm::dist(*space, Element("a"), Element("a")) == 0.0);
    CHECK(msm::dist(*space, Element("a"), Element("b")) == 1.0);
    CHECK(msm::dist(*space, Element("e"), Element("b")) == 1.0);
}

TEST_CASE("finite matrix space looks up tabulated distances") {
    const std::vector<std::vector<double>> matrix = {
        {0.0, 1.0, 2.0}, {1.0, 0.0, 1.5}, {2.0, 1.5, 0.0}};
    const auto space = GroundSpace::finite_matrix(matrix, {"e", "p", "q"}, Element("e"));
    CHECK(msm::dist(*space, Element("e"), Element("p")) == 1.0);
    CHECK(msm::dist(*space, Element("p"), Element("q")) == 1.5);
    CHECK(msm::dist(*space, Element("q"), Element("q")) == 0.0);
    CHECK_THROWS_AS(msm::dist(*space, Element("p"), Element("zz")), ValidationError);
}

TEST_CASE("finite matrix construction rejects bad inputs") {
    const std::vector<std::vector<double>> ok = {{0.0, 1.0}, {1.0, 0.0}};
    CHECK_THROWS_AS(GroundSpace::finite_matrix(ok, {"a", "a"}, Element("a")), ValidationError);
    CHECK_THROWS_AS(GroundSpace::finite_matrix(ok, {"a"}, Element("a")), ValidationError);
    CHECK_THROWS_AS(GroundSpace::finite_matrix(ok, {"a", "b"}, Element("zz")), ValidationError);
    const std::vector<std::vector<double>> asym = {{0.0, 3.0}, {2.0, 0.0}};
    CHECK_THROWS_AS(GroundSpace::finite_matrix(asym, {"a", "b"}, Element("a")), ValidationError);
}

TEST_CASE("validate_finite_metric accepts a genuine metric") {
    CHECK_FALSE(msm::validate_finite_metric({{0.0, 1.0}, {1.0, 0.0}}).has_value());
    CHECK_FALSE(
        msm::validate_finite_metric({{0.0, 1.0, 2.0}, {1.0, 0.0, 1.5}, {2.0, 1.5, 0.0}}).has_value());
}

TEST_CASE("validate_finite_metric reports the violated axiom") {
    using Axiom = MetricViolation::Axiom;

    const auto symmetry = msm::validate_finite_metric({{0.0, 3.0}, {2.0, 0.0}});
    REQUIRE(symmetry.has_value());
    CHECK(symmetry->axiom == Axiom::Symmetry);

    const auto triangle =
        msm::validate_finite_metric({{0.0, 1.0, 5.0}, {1.0, 0.0, 1.0}, {5.0, 1.0, 0.0}});
    REQUIRE(triangle.has_value());
    CHECK(triangle->axiom == Axiom::Triangle);

    const auto diagonal = msm::validate_finite_metric({{0.5, 1.0}, {1.0, 0.0}});
    REQUIRE(diagonal.has_value());
    CHECK(diagonal->axiom == Axiom::ZeroDiagonal);

    const auto degenerate = msm::validate_finite_metric({{0.0, 0.0}, {0.0, 0.0}});
    REQUIRE(degenerate.has_value());
    CHECK(degenerate->axiom == Axiom::PositiveOffDiagonal);

    const auto negative = msm::validate_finite_metric({{0.0, -1.0}, {-1.0, 0.0}});
    REQUIRE(negative.has_value());
    CHECK(negative->axiom == Axiom::Nonnegative);

    const auto ragged = msm::validate_finite_metric({{0.0, 1.0}, {1.0}});
    REQUIRE(ragged.has_value());
    CHECK(ragged->axiom == Axiom::Shape);

    const auto empty = msm::validate_finite_metric({});
    REQUIRE(empty.has_value());
    CHECK(empty->axiom == Axiom::Shape);
}

TEST_CASE("dist_to_set takes the closest member") {
    const auto space = GroundSpace::euclidean(1, Element({0.0}));
    const std::vector<Element> h14 = {Element({1.0}), Element({4.0})};
    CHECK(msm::dist_to_set(*space, Element({1.0}), h14) == 0.0);
    CHECK(msm::dist_to_set(*space, Element({2.0}), h14) == 1.0);
    const std::vector<Element> h101 = {Element({-1.0}), Element({0.0}), Element({1.0})};
    CHECK(msm::dist_to_set(*space, Element({5.0}), h101) == 4.0);
    CHECK_THROWS_AS(msm::dist_to_set(*space, Element({5.0}), {}), ValidationError);
}

TEST_CASE("spaces enforce their element key discipline") {
    const auto plane = GroundSpace::euclidean(2, Element({0.0, 0.0}));
    CHECK_NOTHROW(plane->validate_element(Element({1.0, 2.0})));
    CHECK_THROWS_AS(plane->validate_element(Element({1.0})), ValidationError);
    CHECK_THROWS_AS(plane->validate_element(Element("a")), ValidationError);

    const auto tags = GroundSpace::discrete(Element("e"));
    CHECK_NOTHROW(tags->validate_element(Element("anything")));
    CHECK_THROWS_AS(tags->validate_element(Element({1.0})), ValidationError);

    CHECK_THROWS_AS(GroundSpace::euclidean(2, Element({0.0})), ValidationError);
    CHECK_THROWS_AS(GroundSpace::euclidean(0, Element({0.0})), ValidationError);
}

TEST_CASE("space equality is structural") {
    const auto a = GroundSpace::euclidean(1, Element({0.0}));
    const auto b = GroundSpace::euclidean(1, Element({0.0}));
    const auto c = GroundSpace::euclidean(1, Element({1.0}));
    const auto d = GroundSpace::l1(1, Element({0.0}));
    CHECK(*a == *b);
    CHECK(*a != *c);
    CHECK(*a != *d);
}
