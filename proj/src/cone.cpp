#include "cubemagic/cone.hpp"

#include <stdexcept>

namespace cubemagic {

namespace {

EdgeLabelling from_units(std::initializer_list<int> edges) {
    EdgeLabelling l;
    for (int e : edges) l.set_label(e, 1);
    return l;
}

BasisTable make_basis_table() {
    BasisTable t;
    t.alpha[0] = from_units({2, 3, 5, 8});
    t.alpha[1] = from_units({1, 4, 6, 7});
    t.alpha[2] = from_units({1, 5, 11, 12});
    t.alpha[3] = from_units({2, 6, 10, 11});
    t.alpha[4] = from_units({1, 4, 5, 8});
    t.alpha[5] = from_units({4, 8, 9, 10});
    t.alpha[6] = from_units({3, 7, 9, 12});
    t.alpha[7] = from_units({2, 3, 6, 7});
    t.alpha[8] = from_units({9, 10, 11, 12});
    t.t = EdgeLabelling::constant(1);
    return t;
}

std::array<ConeType, 8> make_cone_types() {
    const BasisTable& b = basis_table();
    auto a = [&](int i) -> const EdgeLabelling& { return b.alpha[i - 1]; };
    std::array<ConeType, 8> types = {{
        {TypeTag::t1, EdgeLabelling{}, {a(1), a(2), a(3), a(4), a(5), a(6)}, 0},
        {TypeTag::t2, a(7), {a(1), a(2), a(3), a(5), a(6), a(7)}, 0},
        {TypeTag::t31, a(9), {a(2), a(3), a(4), a(6), a(7), a(9)}, 0},
        {TypeTag::t32, a(1) + a(9), {a(1), a(3), a(4), a(6), a(7), a(9)}, 0},
        {TypeTag::t33, a(6) + a(8), {a(1), a(2), a(4), a(6), a(7), a(8)}, 0},
        {TypeTag::t34, a(8), {a(1), a(2), a(3), a(4), a(7), a(8)}, 0},
        {TypeTag::t351, a(4) + a(7), {a(1), a(2), a(3), a(4), a(6), a(7)}, 0},
        {TypeTag::t352, b.t, {a(1), a(2), a(3), a(4), a(6), a(7)}, 0},
    }};
    for (auto& ct : types) {
        auto r = magic_sum_of(ct.base);
        if (!r) throw std::logic_error("cone type base is not magic");
        ct.offset = *r;
    }
    return types;
}

}  // namespace

const BasisTable& basis_table() {
    static const BasisTable t = make_basis_table();
    return t;
}

const EdgeLabelling& alpha(int i) { return basis_table().alpha[i - 1]; }

const std::array<ConeType, 8>& cone_types() {
    static const std::array<ConeType, 8> types = make_cone_types();
    return types;
}

const ConeType& cone_type(TypeTag tag) { return cone_types()[static_cast<int>(tag)]; }

bool verify_relations(const BasisTable& t) {
    auto a = [&](int i) -> const EdgeLabelling& { return t.alpha[i - 1]; };
    auto minus = [](const EdgeLabelling& l, const EdgeLabelling& r) {
        EdgeLabelling out = l;
        for (int i = 0; i < kNumEdges; ++i) out.a[i] -= r.a[i];
        return out;
    };
    bool ok = true;
    // alpha_1 = alpha_3+alpha_4+alpha_6+alpha_7 - alpha_2 - 2 alpha_9, and
    // the three companions obtained the same way.
    ok &= a(1) == minus(a(3) + a(4) + a(6) + a(7), a(2) + 2 * a(9));
    ok &= a(2) == minus(a(3) + a(4) + a(6) + a(7), a(1) + 2 * a(9));
    ok &= a(3) == minus(a(1) + a(2) + a(4) + a(7), a(6) + 2 * a(8));
    ok &= a(4) == minus(a(1) + a(2) + a(3) + a(6), 2 * a(5) + a(7));
    ok &= a(6) == minus(a(1) + a(2) + a(4) + a(7), a(3) + 2 * a(8));
    // alpha_5 three ways (the half-coefficient form with cleared denominator).
    ok &= a(5) == minus(a(1) + a(2), a(8));
    ok &= a(5) == minus(a(3) + a(6), a(9));
    ok &= 2 * a(5) == minus(a(1) + a(2) + a(3) + a(6), a(4) + a(7));
    // T three ways, plus the cleared half form.
    ok &= t.t == a(1) + a(2) + a(9);
    ok &= t.t == a(3) + a(6) + a(8);
    ok &= t.t == a(4) + a(5) + a(7);
    ok &= 2 * t.t == a(1) + a(2) + a(3) + a(4) + a(6) + a(7);
    return ok;
}

bool verify_relations() { return verify_relations(basis_table()); }

std::optional<QCoords> q_coordinates(const EdgeLabelling& l) {
    if (!magic_sum_of(l)) return std::nullopt;
    QCoords q;
    q.q[0] = l.label(3);
    q.q[1] = l.label(7);
    q.q[2] = l.label(12);
    q.q[3] = l.label(2) - l.label(3);
    q.q[4] = l.label(5) - l.label(3) - l.label(12);
    q.q[5] = l.label(9);
    return q;
}

std::array<std::int64_t, kNumEdges> reconstruct_coords(const QCoords& qc) {
    const auto [q1, q2, q3, q4, q5, q6] = qc.q;
    return {q2 + q3 + q5, q1 + q4, q1, q2 + q5 + q6, q1 + q3 + q5, q2 + q4,
            q2, q1 + q5 + q6, q6, q4 + q6, q3 + q4, q3};
}

bool satisfies_c1_c2_c3(const QCoords& qc) {
    const auto [q1, q2, q3, q4, q5, q6] = qc.q;
    const bool c1 = q1 >= 0 && q2 >= 0 && q3 >= 0 && q6 >= 0;
    const bool c2 = q1 + q4 >= 0 && q2 + q4 >= 0 && q3 + q4 >= 0 && q6 + q4 >= 0;
    const bool c3 = q1 + q3 + q5 >= 0 && q1 + q5 + q6 >= 0 && q2 + q3 + q5 >= 0 &&
                    q2 + q5 + q6 >= 0;
    return c1 && c2 && c3;
}

std::string_view to_string(TypeTag tag) {
    switch (tag) {
        case TypeTag::t1: return "t1";
        case TypeTag::t2: return "t2";
        case TypeTag::t31: return "t31";
        case TypeTag::t32: return "t32";
        case TypeTag::t33: return "t33";
        case TypeTag::t34: return "t34";
        case TypeTag::t351: return "t351";
        case TypeTag::t352: return "t352";
    }
    return "?";
}

std::optional<TypeTag> type_tag_from_string(std::string_view s) {
    for (TypeTag tag : kAllTypeTags)
        if (to_string(tag) == s) return tag;
    return std::nullopt;
}

TypeDecomposition classify(const EdgeLabelling& l) {
    if (!magic_sum_of(l)) throw std::invalid_argument("classify: labelling is not magic");
    const QCoords qc = *q_coordinates(l);
    const auto [q1, q2, q3, q4, q5, q6] = qc.q;

    TypeDecomposition d;
    // Region dispatch. The regions partition q-space subject to C1-C3, with
    // tie-breaks q1<=q2 / q2<q1 and q3<q6 / q6<=q3 keeping the union
    // disjoint. Each branch stores the coefficient of the type's j-th basis
    // vector in ks[j].
    if (q4 >= 0 && q5 >= 0) {
        d.tag = TypeTag::t1;
        d.ks = {q1, q2, q3, q4, q5, q6};
    } else if (q4 < 0 && q5 >= 2 * q4) {
        d.tag = TypeTag::t2;
        d.ks = {q1 + q4, q2 + q4, q3 + q4, q5 - 2 * q4, q6 + q4, -(q4 + 1)};
    } else if (q5 < 0 && q5 < 2 * q4) {
        if (2 * q1 + q5 < 0 && q1 <= q2) {
            d.tag = TypeTag::t31;
            d.ks = {q2 - q1, q1 + q3 + q5, q1 + q4, q1 + q5 + q6, q1, -(2 * q1 + q5 + 1)};
        } else if (2 * q2 + q5 < 0 && q2 < q1) {
            d.tag = TypeTag::t32;
            d.ks = {q1 - q2 - 1, q2 + q3 + q5, q2 + q4, q2 + q5 + q6, q2, -(2 * q2 + q5 + 1)};
        } else if (2 * q3 + q5 < 0 && q3 < q6) {
            d.tag = TypeTag::t33;
            d.ks = {q1 + q3 + q5, q2 + q3 + q5, q3 + q4, q6 - q3 - 1, q3, -(2 * q3 + q5 + 1)};
        } else if (2 * q6 + q5 < 0 && q6 <= q3) {
            d.tag = TypeTag::t34;
            d.ks = {q1 + q5 + q6, q2 + q5 + q6, q3 - q6, q4 + q6, q6, -(2 * q6 + q5 + 1)};
        } else {
            if (!(2 * q1 + q5 >= 0 && 2 * q2 + q5 >= 0 && 2 * q3 + q5 >= 0 && 2 * q6 + q5 >= 0))
                throw std::logic_error("classify: no region matches " + to_csv(l));
            if (q5 % 2 == 0) {
                const std::int64_t h = q5 / 2;  // negative
                d.tag = TypeTag::t351;
                d.ks = {q1 + h, q2 + h, q3 + h, q4 - h - 1, q6 + h, -h - 1};
            } else {
                const std::int64_t h = (q5 - 1) / 2;  // q5 odd and negative
                d.tag = TypeTag::t352;
                d.ks = {q1 + h, q2 + h, q3 + h, q4 - h - 1, q6 + h, -h - 1};
            }
        }
    } else {
        throw std::logic_error("classify: region split is not exhaustive at " + to_csv(l));
    }

    for (std::int64_t k : d.ks)
        if (k < 0)
            throw std::logic_error("classify: negative multiplicity for " + to_csv(l) +
                                   " in type " + std::string(to_string(d.tag)));
    return d;
}

EdgeLabelling compose(const TypeDecomposition& d) {
    for (std::int64_t k : d.ks)
        if (k < 0) throw std::invalid_argument("compose: multiplicities must be nonnegative");
    const ConeType& ct = cone_type(d.tag);
    EdgeLabelling out = ct.base;
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < kNumEdges; ++i) out.a[i] += d.ks[j] * ct.basis[j].a[i];
    return out;
}

}  // namespace cubemagic
