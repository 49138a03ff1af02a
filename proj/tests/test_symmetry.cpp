#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "cubemagic/cone.hpp"
#include "cubemagic/enumerate.hpp"
#include "cubemagic/labelling.hpp"
#include "cubemagic/oracle.hpp"
#include "cubemagic/symmetry.hpp"

using namespace cubemagic;

namespace {
const EdgePermutation kGen1 = permutation_from_swaps({{2, 3}, {9, 10}, {6, 7}, {11, 12}});
const EdgePermutation kGen2 = permutation_from_swaps({{3, 10}, {4, 5}, {7, 11}, {6, 12}, {2, 9}});
}  // namespace

TEST_CASE("group structure") {
    const PermutationGroup& g = cube_group();
    CHECK(g.size() == 48);
    CHECK(g.contains(EdgePermutation::identity()));
    CHECK(g.contains(kGen1));
    CHECK(g.contains(kGen2));

    // closed under composition and inverse
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        const EdgePermutation& a = g.elements[pick(rng)];
        const EdgePermutation& b = g.elements[pick(rng)];
        CHECK(g.contains(a * b));
        CHECK(g.contains(a.inverse()));
        CHECK(a * a.inverse() == EdgePermutation::identity());
    }

    // faithful: 48 distinct edge actions
    CHECK(std::set<EdgePermutation>(g.elements.begin(), g.elements.end()).size() == 48);
}

TEST_CASE("stabilizer of edge 1") {
    const PermutationGroup u1 = stabilizer(cube_group(), 1);
    CHECK(u1.size() == 4);
    CHECK(u1.contains(kGen1));
    CHECK(u1.contains(kGen2));
    CHECK(u1.contains(kGen1 * kGen2));

    PermutationGroup trivial;
    trivial.elements = {EdgePermutation::identity()};
    CHECK(stabilizer(trivial, 1).elements == trivial.elements);
}

TEST_CASE("orbits") {
    const std::vector<std::vector<int>> expected = {
        {1}, {2, 3, 9, 10}, {4, 5}, {6, 7, 11, 12}, {8}};
    CHECK(orbits(stabilizer(cube_group(), 1)) == expected);

    CHECK(orbits(cube_group()) ==
          std::vector<std::vector<int>>{{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}});

    PermutationGroup trivial;
    trivial.elements = {EdgePermutation::identity()};
    CHECK(orbits(trivial).size() == 12);
}

TEST_CASE("cycle notation") {
    CHECK(cycle_notation(EdgePermutation::identity()) == "()");
    CHECK(cycle_notation(kGen1) == "(2,3)(6,7)(9,10)(11,12)");
    CHECK(cycle_notation(kGen2) == "(2,9)(3,10)(4,5)(6,12)(7,11)");
}

TEST_CASE("apply") {
    CHECK(apply(kGen1, alpha(1)) == alpha(1));
    const EdgeLabelling ones = EdgeLabelling::constant(1);
    for (const auto& u : cube_group().elements) {
        CHECK(apply(u, ones) == ones);
        CHECK(apply(EdgePermutation::identity(), alpha(4)) == alpha(4));
    }

    // the action permutes each sum level and preserves distinctness
    std::mt19937 rng(7);
    for (Label r : {3, 9}) {
        const auto all = enumerate_by_type(r);
        const std::set<EdgeLabelling> all_set(all.begin(), all.end());
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const EdgeLabelling& l = all[pick(rng)];
            for (const auto& u : cube_group().elements) {
                const EdgeLabelling img = apply(u, l);
                CHECK(magic_sum_of(img) == r);
                CHECK(all_set.count(img) == 1);
                CHECK(is_distinct(img) == is_distinct(l));
            }
        }
    }
}

TEST_CASE("second-smallest exclusion") {
    CHECK(check_second_smallest_exclusion(EdgeLabelling::unit(2)) == ExclusionCheck::inapplicable);
    CHECK(check_second_smallest_exclusion(EdgeLabelling::constant(1)) == ExclusionCheck::inapplicable);

    int applicable = 0;
    for (Label r = 0; r <= 6; ++r)
        for_each_magic_brute_force(r, [&](const EdgeLabelling& l) {
            const ExclusionCheck c = check_second_smallest_exclusion(l);
            CHECK(c != ExclusionCheck::violated);
            if (c == ExclusionCheck::holds) ++applicable;
        });
    CHECK(applicable > 0);
}

TEST_CASE("canonical form") {
    CHECK_THROWS_AS(canonical_form(EdgeLabelling::constant(1)), std::invalid_argument);
    CHECK_THROWS_AS(canonical_form(EdgeLabelling::unit(5)), std::invalid_argument);

    // take some distinct labellings at sum 17 and exercise the uniqueness
    // contract: the canonical image is invariant across the whole orbit
    std::vector<EdgeLabelling> distinct17;
    for_each_by_type(17, [&](const EdgeLabelling& l) {
        if (is_distinct(l)) distinct17.push_back(l);
    });
    REQUIRE(distinct17.size() == 288);

    std::mt19937 rng(1234);
    std::uniform_int_distribution<std::size_t> pick(0, distinct17.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
        const EdgeLabelling& l = distinct17[pick(rng)];
        const CanonicalForm cf = canonical_form(l);
        CHECK(apply(cf.u, l) == cf.labelling);
        const bool i = is_canonical_shape_i(cf.labelling);
        const bool ii = is_canonical_shape_ii(cf.labelling);
        CHECK(i != ii);
        CHECK((cf.shape == CanonicalShape::type_i) == i);
        for (const auto& u : cube_group().elements)
            CHECK(canonical_form(apply(u, l)).labelling == cf.labelling);
    }

    // a labelling already canonical maps to itself by the identity
    const CanonicalForm cf0 = canonical_form(distinct17.front());
    const CanonicalForm again = canonical_form(cf0.labelling);
    CHECK(again.u == EdgePermutation::identity());
    CHECK(again.labelling == cf0.labelling);
}
