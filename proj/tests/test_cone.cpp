#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "cubemagic/cone.hpp"
#include "cubemagic/enumerate.hpp"
#include "cubemagic/labelling.hpp"
#include "cubemagic/oracle.hpp"

using namespace cubemagic;

TEST_CASE("basis table") {
    for (int i = 1; i <= 9; ++i) {
        const EdgeLabelling& a = alpha(i);
        Label ones = 0;
        for (Label v : a.a) {
            CHECK((v == 0 || v == 1));
            ones += v;
        }
        CHECK(ones == 4);
        CHECK(magic_sum_of(a) == 1);
        // a perfect matching touches all eight vertices once
        for (const auto& ve : kVertexEdges)
            CHECK(a.label(ve[0]) + a.label(ve[1]) + a.label(ve[2]) == 1);
    }
    CHECK(alpha(1) == labelling_from_csv("0,1,1,0,1,0,0,1,0,0,0,0"));
    CHECK(magic_sum_of(basis_table().t) == 3);
}

TEST_CASE("relations hold, and mutations are detected") {
    CHECK(verify_relations());

    // alpha_1 and alpha_2 enter the T identity symmetrically, so swapping
    // them leaves the relations true
    BasisTable swapped = basis_table();
    std::swap(swapped.alpha[0], swapped.alpha[1]);
    CHECK(verify_relations(swapped));

    BasisTable zeroed = basis_table();
    zeroed.alpha[8] = EdgeLabelling{};
    CHECK_FALSE(verify_relations(zeroed));
}

TEST_CASE("q-coordinates") {
    QCoords q7{{1, 1, 1, -1, -2, 1}};
    CHECK(q_coordinates(alpha(7)) == q7);
    CHECK(q_coordinates(EdgeLabelling::constant(1)) == QCoords{{1, 1, 1, 0, -1, 1}});
    CHECK(q_coordinates(alpha(1)) == QCoords{{1, 0, 0, 0, 0, 0}});
    CHECK(q_coordinates(EdgeLabelling::unit(1)) == std::nullopt);

    // the coordinates reconstruct the labelling exactly
    for (Label r = 0; r <= 4; ++r)
        for_each_magic_brute_force(r, [&](const EdgeLabelling& l) {
            const auto q = q_coordinates(l);
            REQUIRE(q.has_value());
            const auto coords = reconstruct_coords(*q);
            for (int i = 0; i < kNumEdges; ++i) CHECK(coords[i] == l.a[i]);
        });
}

TEST_CASE("membership conditions") {
    CHECK(satisfies_c1_c2_c3(QCoords{{1, 1, 1, -1, -2, 1}}));           // alpha_7
    CHECK_FALSE(satisfies_c1_c2_c3(QCoords{{0, 0, 0, 0, -1, 0}}));      // q1+q3+q5 < 0
    CHECK(satisfies_c1_c2_c3(QCoords{{0, 0, 0, 0, 0, 0}}));

    // equivalence with coordinate nonnegativity on a random sample of a
    // wider box than the exhaustive suite uses
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<std::int64_t> d(-9, 9);
    for (int trial = 0; trial < 20000; ++trial) {
        QCoords q;
        for (auto& v : q.q) v = d(rng);
        const auto coords = reconstruct_coords(q);
        bool nonneg = true;
        for (auto v : coords) nonneg = nonneg && v >= 0;
        CHECK(satisfies_c1_c2_c3(q) == nonneg);
    }
}

TEST_CASE("classify on the named reference points") {
    CHECK(classify(alpha(1)) == TypeDecomposition{TypeTag::t1, {1, 0, 0, 0, 0, 0}});
    CHECK(classify(alpha(7)) == TypeDecomposition{TypeTag::t2, {0, 0, 0, 0, 0, 0}});
    CHECK(classify(alpha(9)) == TypeDecomposition{TypeTag::t31, {0, 0, 0, 0, 0, 0}});
    CHECK(classify(EdgeLabelling::constant(1)) ==
          TypeDecomposition{TypeTag::t352, {0, 0, 0, 0, 0, 0}});
    CHECK_THROWS_AS(classify(EdgeLabelling::unit(3)), std::invalid_argument);
}

TEST_CASE("compose on the named reference points") {
    CHECK(compose({TypeTag::t1, {1, 0, 0, 0, 0, 0}}) == alpha(1));
    CHECK(compose({TypeTag::t352, {0, 0, 0, 0, 0, 0}}) == EdgeLabelling::constant(1));
    CHECK(compose({TypeTag::t2, {0, 0, 0, 0, 0, 1}}) == 2 * alpha(7));
    CHECK_THROWS_AS(compose({TypeTag::t1, {0, -1, 0, 0, 0, 0}}), std::invalid_argument);

    // magic sum = offset + sum of multiplicities
    const std::array<Label, 8> offsets = {0, 1, 1, 2, 2, 1, 2, 3};
    for (int t = 0; t < 8; ++t) {
        const ConeType& ct = cone_types()[t];
        CHECK(ct.offset == offsets[t]);
        EdgeLabelling l = compose({ct.tag, {2, 0, 1, 0, 3, 1}});
        CHECK(magic_sum_of(l) == ct.offset + 7);
    }
}

TEST_CASE("round trips") {
    // compose(classify(.)) = id over everything the oracle produces
    for (Label r = 0; r <= 6; ++r)
        for_each_magic_brute_force(r, [&](const EdgeLabelling& l) {
            const TypeDecomposition d = classify(l);
            for (auto k : d.ks) CHECK(k >= 0);
            CHECK(compose(d) == l);
        });

    // classify(compose(.)) = id on random multiplicity vectors
    std::mt19937 rng(987654);
    std::uniform_int_distribution<std::int64_t> d(0, 7);
    for (TypeTag tag : kAllTypeTags)
        for (int trial = 0; trial < 2000; ++trial) {
            TypeDecomposition in{tag, {d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)}};
            CHECK(classify(compose(in)) == in);
        }
}

TEST_CASE("the eight families partition each sum level") {
    for (Label r = 0; r <= 5; ++r) {
        std::set<EdgeLabelling> seen;
        std::size_t n = 0;
        for (TypeTag tag : kAllTypeTags)
            for_each_of_type(tag, r, [&](const EdgeLabelling& l) {
                CHECK(seen.insert(l).second);  // no overlap between families
                ++n;
            });
        const auto oracle = brute_force_enumerate(r);
        CHECK(n == oracle.size());
        CHECK(std::equal(oracle.begin(), oracle.end(), seen.begin(), seen.end()));
    }
}
