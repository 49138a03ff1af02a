#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubemagic/bigint.hpp"

namespace cubemagic {

// Univariate polynomial in y with exact integer coefficients.
struct IntPoly {
    std::vector<BigInt> c;  // c[i] = coefficient of y^i

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { normalize(); }

    static IntPoly monomial(int deg, BigInt coeff = 1);
    static IntPoly one_minus_y_pow(int a);  // 1 - y^a

    void normalize();            // strip trailing zeros
    int degree() const;          // -1 for the zero polynomial
    BigInt coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : 0; }
    BigInt eval_at_one() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    bool operator==(const IntPoly&) const = default;
};

// numerator / prod (1 - y^order)^multiplicity. Every denominator factor has
// unit constant term, so the power series at y = 0 is well defined and
// integral.
struct DenomFactor {
    int order;
    int multiplicity;
    bool operator==(const DenomFactor&) const = default;
};

struct RationalGF {
    IntPoly numerator;
    std::vector<DenomFactor> denominator;

    IntPoly denominator_poly() const;  // the expanded product
    std::string to_string() const;     // factored, human-readable
};

// First n+1 power-series coefficients of f, exact.
std::vector<BigInt> expand(const RationalGF& f, int n);

// (1 + 3y + 3y^2 + y^3) / (1-y)^6: counts all magic labellings by magic sum.
RationalGF closed_form_G();

// Counts orbits of magic distinct labellings by magic sum:
//   y^17 (1-y)^4 (1-y^2)^2 N(y) / ((1-y^3)(1-y^16) prod_{i=5..14} (1-y^i))
// with N the degree-86 numerator from gstar_numerator_n().
RationalGF closed_form_Gstar();

// y^8 / ((1-y)^4 (1-y^4)): the one-variable specialization shared by both
// canonical-shape generating functions.
RationalGF closed_form_F1_spec();
RationalGF closed_form_F2_spec();

// lcm of the denominator orders: the period of the counting quasi-polynomial.
std::int64_t quasi_period(const RationalGF& f);

// The 87 transcribed coefficients of N (degrees 0..86); see
// gstar_numerator.cpp.
const IntPoly& gstar_numerator_n();

}  // namespace cubemagic
