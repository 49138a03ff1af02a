#include <doctest.h>

#include <random>

#include "cubemagic/enumerate.hpp"
#include "cubemagic/series.hpp"

using namespace cubemagic;

TEST_CASE("IntPoly basics") {
    IntPoly zero;
    CHECK(zero.degree() == -1);
    IntPoly p{{1, 0, 2, 0, 0}};
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(7) == 0);
    CHECK(p.eval_at_one() == 3);

    CHECK(IntPoly::one_minus_y_pow(3) == IntPoly{{1, 0, 0, -1}});
    CHECK(IntPoly{{1, 1}} * IntPoly{{1, -1}} == IntPoly{{1, 0, -1}});
    CHECK(p - p == zero);
    CHECK(p + zero == p);
}

TEST_CASE("expand") {
    RationalGF geom;
    geom.numerator = IntPoly{{1}};
    geom.denominator = {{1, 6}};
    CHECK(expand(geom, 2) == std::vector<BigInt>{1, 6, 21});

    const auto g = expand(closed_form_G(), 17);
    CHECK(g[0] == 1);
    CHECK(g[1] == 9);
    CHECK(g[17] == 145521);

    const auto f1 = expand(closed_form_F1_spec(), 10);
    CHECK(f1 == std::vector<BigInt>{0, 0, 0, 0, 0, 0, 0, 0, 1, 4, 10});
}

TEST_CASE("count closed form vs count_by_type") {
    const auto coeffs = expand(closed_form_G(), 120);
    for (Label r = 0; r <= 120; ++r) CHECK(coeffs[r] == count_by_type(r));
}

TEST_CASE("orbit-count closed form") {
    const auto coeffs = expand(closed_form_Gstar(), 23);
    for (int r = 0; r <= 16; ++r) CHECK(coeffs[r] == 0);
    CHECK(coeffs[17] == 6);
    CHECK(coeffs[18] == 13);
    CHECK(coeffs[19] == 34);
    CHECK(coeffs[20] == 60);
    CHECK(coeffs[21] == 128);
    CHECK(coeffs[22] == 199);
    CHECK(coeffs[23] == 331);
}

TEST_CASE("numerator table integrity") {
    const IntPoly& n = gstar_numerator_n();
    CHECK(n.degree() == 86);
    CHECK(n.coeff(0) == 6);
    CHECK(n.coeff(1) == 37);
    CHECK(n.coeff(2) == 158);
    CHECK(n.coeff(86) == 897);
    CHECK(n.eval_at_one() == BigInt("7264857600"));

    // assembled numerator: y^17 (1-y)^4 (1-y^2)^2 N has degree 111
    CHECK(closed_form_Gstar().numerator.degree() == 111);
    CHECK(closed_form_Gstar().numerator.coeff(17) == 6);
}

TEST_CASE("deeper coefficients agree with direct enumeration") {
    // beyond the anchored range, the closed form and the distinct scan are
    // two independent routes to the same numbers
    const auto coeffs = expand(closed_form_Gstar(), 25);
    CHECK(coeffs[24] == count_distinct(24, DistinctMode::orbits));
    CHECK(coeffs[25] == count_distinct(25, DistinctMode::orbits));
}

TEST_CASE("quasi periods") {
    CHECK(quasi_period(closed_form_Gstar()) == 720720);
    CHECK(quasi_period(closed_form_G()) == 1);
    RationalGF f;
    f.numerator = IntPoly{{1}};
    f.denominator = {{2, 1}};
    CHECK(quasi_period(f) == 2);
}

TEST_CASE("F specializations coincide") {
    const RationalGF f1 = closed_form_F1_spec();
    const RationalGF f2 = closed_form_F2_spec();
    CHECK(f1.numerator == f2.numerator);
    CHECK(f1.denominator == f2.denominator);
    CHECK(expand(f1, 8)[8] == 1);
}

TEST_CASE("expansion times denominator recovers the numerator") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> order(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        RationalGF f;
        std::vector<BigInt> cs(1 + trial % 7);
        for (auto& v : cs) v = coeff(rng);
        f.numerator = IntPoly{std::move(cs)};
        f.denominator = {{order(rng), 1}, {order(rng), 2}};
        const int n = 40;
        IntPoly series;
        series.c = expand(f, n);
        series.normalize();
        IntPoly back = series * f.denominator_poly();
        back.c.resize(n + 1);
        back.normalize();
        CHECK(back == f.numerator);
    }
}

TEST_CASE("expand is additive on a common denominator") {
    RationalGF a, b, sum;
    a.numerator = IntPoly{{1, 2}};
    b.numerator = IntPoly{{0, 0, 3}};
    sum.numerator = a.numerator + b.numerator;
    a.denominator = b.denominator = sum.denominator = {{1, 2}, {3, 1}};
    const auto ea = expand(a, 30), eb = expand(b, 30), es = expand(sum, 30);
    for (int i = 0; i <= 30; ++i) CHECK(es[i] == ea[i] + eb[i]);
}

TEST_CASE("sixth finite differences of the count vanish") {
    auto d = expand(closed_form_G(), 36);
    for (int step = 0; step < 6; ++step)
        for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
    for (int r = 0; r <= 30; ++r) CHECK(d[r] == 0);
}

TEST_CASE("factored printing") {
    CHECK(closed_form_G().to_string() == "(1 + 3y + 3y^2 + y^3) / ((1-y)^6)");
    CHECK(closed_form_F1_spec().to_string() == "(y^8) / ((1-y)^4 (1-y^4))");
}
