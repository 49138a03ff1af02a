#include "cubemagic/series.hpp"

#include <numeric>
#include <sstream>

namespace cubemagic {

IntPoly IntPoly::monomial(int deg, BigInt coeff) {
    IntPoly p;
    p.c.assign(deg + 1, 0);
    p.c[deg] = std::move(coeff);
    p.normalize();
    return p;
}

IntPoly IntPoly::one_minus_y_pow(int a) {
    IntPoly p;
    p.c.assign(a + 1, 0);
    p.c[0] = 1;
    p.c[a] -= 1;  // a == 0 would give the zero polynomial, callers keep a >= 1
    p.normalize();
    return p;
}

void IntPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

int IntPoly::degree() const { return static_cast<int>(c.size()) - 1; }

BigInt IntPoly::eval_at_one() const {
    BigInt s = 0;
    for (const BigInt& v : c) s += v;
    return s;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    r.normalize();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    r.normalize();
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.c.empty() || b.c.empty()) return IntPoly{};
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
}

IntPoly RationalGF::denominator_poly() const {
    IntPoly d = IntPoly::monomial(0, 1);
    for (const DenomFactor& f : denominator)
        for (int m = 0; m < f.multiplicity; ++m) d = d * IntPoly::one_minus_y_pow(f.order);
    return d;
}

std::string RationalGF::to_string() const {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (int i = 0; i <= numerator.degree(); ++i) {
        const BigInt v = numerator.coeff(i);
        if (v == 0) continue;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << '-';
        first = false;
        const BigInt av = abs(v);
        if (av != 1 || i == 0) os << av.str();
        if (i == 1) os << 'y';
        else if (i > 1) os << "y^" << i;
    }
    if (first) os << '0';
    os << ')';
    if (!denominator.empty()) {
        os << " / (";
        for (std::size_t i = 0; i < denominator.size(); ++i) {
            if (i) os << ' ';
            os << "(1-y";
            if (denominator[i].order > 1) os << '^' << denominator[i].order;
            os << ')';
            if (denominator[i].multiplicity > 1) os << '^' << denominator[i].multiplicity;
        }
        os << ')';
    }
    return os.str();
}

std::vector<BigInt> expand(const RationalGF& f, int n) {
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
    const int top = std::min<int>(n, f.numerator.degree());
    for (int i = 0; i <= top; ++i) c[i] = f.numerator.coeff(i);
    // Multiplying by 1/(1-y^a) = sum_j y^{aj} is the prefix recurrence
    // c[i] += c[i-a].
    for (const DenomFactor& fac : f.denominator)
        for (int m = 0; m < fac.multiplicity; ++m)
            for (int i = fac.order; i <= n; ++i) c[i] += c[i - fac.order];
    return c;
}

RationalGF closed_form_G() {
    RationalGF f;
    f.numerator = IntPoly{{1, 3, 3, 1}};
    f.denominator = {{1, 6}};
    return f;
}

RationalGF closed_form_Gstar() {
    RationalGF f;
    IntPoly num = IntPoly::monomial(17);
    const IntPoly one_minus_y = IntPoly::one_minus_y_pow(1);
    const IntPoly one_minus_y2 = IntPoly::one_minus_y_pow(2);
    for (int i = 0; i < 4; ++i) num = num * one_minus_y;
    for (int i = 0; i < 2; ++i) num = num * one_minus_y2;
    f.numerator = num * gstar_numerator_n();
    f.denominator = {{3, 1}, {16, 1}};
    for (int i = 5; i <= 14; ++i) f.denominator.push_back({i, 1});
    return f;
}

RationalGF closed_form_F1_spec() {
    RationalGF f;
    f.numerator = IntPoly::monomial(8);
    f.denominator = {{1, 4}, {4, 1}};
    return f;
}

RationalGF closed_form_F2_spec() { return closed_form_F1_spec(); }

std::int64_t quasi_period(const RationalGF& f) {
    std::int64_t l = 1;
    for (const DenomFactor& fac : f.denominator) l = std::lcm<std::int64_t>(l, fac.order);
    return l;
}

}  // namespace cubemagic
