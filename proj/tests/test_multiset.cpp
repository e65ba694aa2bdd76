#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "msm/errors.hpp"
#include "msm/ground_space.hpp"
#include "msm/multiset.hpp"
#include "msm/rng.hpp"
#include "oracle_helpers.hpp"

using msm::Element;
using msm::GroundSpace;
using msm::GroundSpacePtr;
using msm::Multiset;
using msm::SizeCapError;
using msm::ValidationError;

namespace {

GroundSpacePtr line() { return GroundSpace::euclidean(1, Element({0.0})); }

Multiset points(const GroundSpacePtr& space, const std::vector<double>& xs) {
    std::vector<Multiset::Entry> entries;
    for (const double x : xs) entries.emplace_back(Element({x}), 1);
    return Multiset::canonicalize(space, entries);
}

}  // namespace

TEST_CASE("canonicalize merges duplicates and drops the basepoint") {
    const auto space = GroundSpace::discrete(Element("e"));
    const Multiset merged =
        Multiset::canonicalize(space, {{Element("a"), 2}, {Element("a"), 1}});
    REQUIRE(merged.entries().size() == 1);
    CHECK(merged.entries()[0].first == Element("a"));
    CHECK(merged.entries()[0].second == 3);
    CHECK(merged.total_size() == 3);

    const Multiset only_base = Multiset::canonicalize(space, {{Element("e"), 5}});
    CHECK(only_base.is_empty());
    CHECK(only_base.total_size() == 0);

    const Multiset mixed = Multiset::canonicalize(
        space, {{Element("a"), 0}, {Element("b"), 1}, {Element("e"), 2}});
    REQUIRE(mixed.entries().size() == 1);
    CHECK(mixed.entries()[0].first == Element("b"));
    CHECK(mixed.entries()[0].second == 1);

    CHECK_THROWS_AS(Multiset::canonicalize(space, {{Element("a"), -1}}), ValidationError);
    CHECK_THROWS_AS(Multiset::canonicalize(space, {{Element({1.0}), 1}}), ValidationError);
    CHECK_THROWS_AS(Multiset::canonicalize(nullptr, {}), ValidationError);
}

TEST_CASE("entries come out in key order") {
    const auto space = line();
    const Multiset m = Multiset::canonicalize(
        space, {{Element({3.0}), 1}, {Element({-1.0}), 2}, {Element({0.5}), 1}});
    REQUIRE(m.entries().size() == 3);
    CHECK(m.entries()[0].first == Element({-1.0}));
    CHECK(m.entries()[1].first == Element({0.5}));
    CHECK(m.entries()[2].first == Element({3.0}));
    CHECK(m.total_size() == 4);
}

TEST_CASE("addition merges multiplicities") {
    const auto space = GroundSpace::discrete(Element("e"));
    const Multiset a = Multiset::canonicalize(space, {{Element("a"), 1}});
    const Multiset zero = Multiset::empty(space);
    CHECK(msm::add(a, zero) == a);
    CHECK(msm::add(zero, a) == a);

    const Multiset ab = Multiset::canonicalize(space, {{Element("a"), 1}, {Element("b"), 2}});
    const Multiset bc = Multiset::canonicalize(space, {{Element("b"), 1}, {Element("c"), 1}});
    const Multiset sum = msm::add(ab, bc);
    const Multiset expected = Multiset::canonicalize(
        space, {{Element("a"), 1}, {Element("b"), 3}, {Element("c"), 1}});
    CHECK(sum == expected);

    const Multiset c = Multiset::canonicalize(space, {{Element("c"), 2}});
    CHECK(msm::add(msm::add(ab, bc), c) == msm::add(ab, msm::add(bc, c)));
    CHECK(msm::add(ab, bc) == msm::add(bc, ab));
}

TEST_CASE("addition requires a common ground space") {
    const Multiset a = points(line(), {1.0});
    const Multiset b = points(line(), {2.0});  // distinct instance, same structure
    CHECK(msm::add(a, b).total_size() == 2);
    const auto plane = GroundSpace::euclidean(2, Element({0.0, 0.0}));
    const Multiset c = Multiset::canonicalize(plane, {{Element({1.0, 0.0}), 1}});
    CHECK_THROWS_AS(msm::add(a, c), ValidationError);
    CHECK_THROWS_AS(msm::matching_distance(a, c), ValidationError);
}

TEST_CASE("matching distance of two empty multisets is zero") {
    const auto space = line();
    CHECK(msm::matching_distance(Multiset::empty(space), Multiset::empty(space)) == 0.0);
}

TEST_CASE("distance from a singleton to the empty multiset is the basepoint gap") {
    const auto space = line();
    const std::vector<std::int64_t> ns = {1, 2, 3, 7, 10, 97, 1000, 999983};
    for (const std::int64_t n : ns) {
        const double x = 1.0 / static_cast<double>(n);
        const Multiset singleton = points(space, {x});
        CHECK(msm::matching_distance(singleton, Multiset::empty(space)) == x);
        CHECK(msm::matching_distance(Multiset::empty(space), singleton) == x);
    }
}

TEST_CASE("unequal sizes are padded with the basepoint") {
    const auto space = line();
    const Multiset ab = points(space, {1.0, 2.0});
    const Multiset c = points(space, {4.0});
    // Optimal: 2 -> 4 (cost 2), 1 -> basepoint (cost 1).
    CHECK(msm::matching_distance(ab, c) == 3.0);
    CHECK(msm::matching_distance(c, ab) == 3.0);
}

TEST_CASE("discrete multisets pay one per uncancelled element") {
    const auto space = GroundSpace::discrete(Element("e"));
    const Multiset pq = Multiset::canonicalize(space, {{Element("p"), 1}, {Element("q"), 1}});
    const Multiset qr = Multiset::canonicalize(space, {{Element("q"), 1}, {Element("r"), 1}});
    CHECK(msm::matching_distance(pq, qr) == 1.0);
}

TEST_CASE("padding size does not change the distance") {
    const auto space = line();
    const Multiset ab = points(space, {1.0, 2.0});
    const Multiset c = points(space, {4.0});
    const double reference = msm::matching_distance(ab, c);
    CHECK(msm::matching_distance_padded(ab, c, 2) == reference);
    CHECK(msm::matching_distance_padded(ab, c, 3) == reference);
    CHECK(msm::matching_distance_padded(ab, c, 8) == reference);
    CHECK(msm::matching_distance_padded(Multiset::empty(space), Multiset::empty(space), 4) == 0.0);
    CHECK_THROWS_AS(msm::matching_distance_padded(ab, c, 1), ValidationError);
    CHECK_THROWS_AS(msm::matching_distance_padded(Multiset::empty(space), Multiset::empty(space), 0),
                    ValidationError);
}

TEST_CASE("padded list expands in key order and pads at the tail") {
    const auto space = line();
    const Multiset m = Multiset::canonicalize(space, {{Element({2.0}), 2}, {Element({1.0}), 1}});
    const msm::PaddedList list = msm::make_padded_list(m, 5);
    REQUIRE(list.elements.size() == 5);
    CHECK(list.elements[0] == Element({1.0}));
    CHECK(list.elements[1] == Element({2.0}));
    CHECK(list.elements[2] == Element({2.0}));
    CHECK(list.elements[3] == Element({0.0}));
    CHECK(list.elements[4] == Element({0.0}));
    CHECK_THROWS_AS(msm::make_padded_list(m, 2), ValidationError);
}

TEST_CASE("size cap limits the padded problem size") {
    const auto space = line();
    const Multiset a = points(space, {1.0, 2.0, 3.0});
    const Multiset b = points(space, {4.0});
    CHECK_THROWS_AS(msm::matching_distance(a, b, 2), SizeCapError);
    // Optimal: 3 -> 4 (cost 1), 1 and 2 to the basepoint (costs 1 and 2).
    CHECK(msm::matching_distance(a, b, 3) == 4.0);
}

TEST_CASE("embedding a point gives a singleton with ground distances") {
    const auto space = line();
    CHECK(msm::embed_point(space, Element({0.0})).is_empty());
    const Multiset three = msm::embed_point(space, Element({3.0}));
    const Multiset one = msm::embed_point(space, Element({1.0}));
    CHECK(three.total_size() == 1);
    CHECK(msm::matching_distance(three, one) == 2.0);
    CHECK(msm::matching_distance(three, one) == msm::dist(*space, Element({3.0}), Element({1.0})));
}

TEST_CASE("matching distance is symmetric bit for bit") {
    msm::Rng rng(911u, "multiset-unit-symmetry");
    const auto space = GroundSpace::euclidean(2, Element({0.0, 0.0}));
    for (int iteration = 0; iteration < 100; ++iteration) {
        std::vector<Multiset::Entry> ea, eb;
        const std::size_t na = rng.uniform_index(4);
        const std::size_t nb = rng.uniform_index(4);
        for (std::size_t i = 0; i < na; ++i) {
            ea.emplace_back(Element({rng.uniform_double(-5.0, 5.0), rng.uniform_double(-5.0, 5.0)}),
                            static_cast<std::int64_t>(rng.uniform_index(2) + 1));
        }
        for (std::size_t i = 0; i < nb; ++i) {
            eb.emplace_back(Element({rng.uniform_double(-5.0, 5.0), rng.uniform_double(-5.0, 5.0)}),
                            static_cast<std::int64_t>(rng.uniform_index(2) + 1));
        }
        const Multiset a = Multiset::canonicalize(space, ea);
        const Multiset b = Multiset::canonicalize(space, eb);
        CHECK(msm::matching_distance(a, b) == msm::matching_distance(b, a));
    }
}

TEST_CASE("matching distance agrees with the permutation oracle") {
    msm::Rng rng(911u, "multiset-unit-oracle");
    const auto space = line();
    for (int iteration = 0; iteration < 60; ++iteration) {
        std::vector<double> xs, ys;
        const std::size_t na = rng.uniform_index(4);
        const std::size_t nb = rng.uniform_index(4);
        for (std::size_t i = 0; i < na; ++i) xs.push_back(rng.uniform_double(-3.0, 3.0));
        for (std::size_t i = 0; i < nb; ++i) ys.push_back(rng.uniform_double(-3.0, 3.0));
        const Multiset a = points(space, xs);
        const Multiset b = points(space, ys);
        const double fast = msm::matching_distance(a, b);
        const double slow = msm_test::brute_matching_distance(a, b);
        CHECK(std::fabs(fast - slow) <= 1e-9);
    }
}
