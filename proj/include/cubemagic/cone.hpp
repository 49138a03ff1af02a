#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cubemagic/labelling.hpp"

namespace cubemagic {

// ------------------------------------------------------------------
// Basis vectors
// ------------------------------------------------------------------

// The nine perfect-matching vectors alpha_1..alpha_9 (the extreme rays of the
// solution cone) and the all-ones labelling T.
struct BasisTable {
    std::array<EdgeLabelling, 9> alpha;  // alpha[i] is alpha_{i+1}
    EdgeLabelling t;
};

const BasisTable& basis_table();
const EdgeLabelling& alpha(int i);  // 1-based, i in 1..9

// Checks every identity the basis vectors satisfy, as exact integer-vector
// equations (the two identities with a 1/2 factor are checked with cleared
// denominators). The overload taking a table exists so tests can feed
// mutated tables.
bool verify_relations();
bool verify_relations(const BasisTable& t);

// ------------------------------------------------------------------
// q-coordinates
// ------------------------------------------------------------------

// Coordinates of a magic labelling in the basis alpha_1..alpha_6. The twelve
// reconstructed edge labels are, in edge order:
//   q2+q3+q5, q1+q4, q1, q2+q5+q6, q1+q3+q5, q2+q4,
//   q2, q1+q5+q6, q6, q4+q6, q3+q4, q3
struct QCoords {
    std::array<std::int64_t, 6> q{};  // q[i] is q_{i+1}

    auto operator<=>(const QCoords&) const = default;
};

// The q-coordinates of l, or nullopt when l is not magic. When present,
// reconstruct_coords(q) equals l exactly.
std::optional<QCoords> q_coordinates(const EdgeLabelling& l);

// q1*alpha_1 + ... + q6*alpha_6 as a raw integer vector (entries may be
// negative for arbitrary q).
std::array<std::int64_t, kNumEdges> reconstruct_coords(const QCoords& q);

// Membership test for the nonnegative solution set, purely in q-space:
//   C1: q1,q2,q3,q6 >= 0
//   C2: q1+q4, q2+q4, q3+q4, q6+q4 >= 0
//   C3: q1+q3+q5, q1+q5+q6, q2+q3+q5, q2+q5+q6 >= 0
// Equivalent to every entry of reconstruct_coords(q) being >= 0.
bool satisfies_c1_c2_c3(const QCoords& q);

// ------------------------------------------------------------------
// The eight decomposition types
// ------------------------------------------------------------------

enum class TypeTag { t1, t2, t31, t32, t33, t34, t351, t352 };

inline constexpr std::array<TypeTag, 8> kAllTypeTags = {
    TypeTag::t1,  TypeTag::t2,  TypeTag::t31,  TypeTag::t32,
    TypeTag::t33, TypeTag::t34, TypeTag::t351, TypeTag::t352};

std::string_view to_string(TypeTag tag);
std::optional<TypeTag> type_tag_from_string(std::string_view s);

// One shifted free monoid: every member is base + sum k_j * basis[j] with
// k_j >= 0, and the six basis vectors are linearly independent.
struct ConeType {
    TypeTag tag;
    EdgeLabelling base;
    std::array<EdgeLabelling, 6> basis;
    Label offset;  // magic sum of base
};

const std::array<ConeType, 8>& cone_types();
const ConeType& cone_type(TypeTag tag);

struct TypeDecomposition {
    TypeTag tag;
    std::array<std::int64_t, 6> ks{};

    bool operator==(const TypeDecomposition&) const = default;
};

// The unique decomposition of a magic labelling into one of the eight types.
// Throws std::invalid_argument on non-magic input. Throws std::logic_error
// if no region matches or a multiplicity comes out negative -- either would
// be a counterexample to the decomposition, so it must surface, never be
// clamped.
TypeDecomposition classify(const EdgeLabelling& l);

// base(tag) + sum ks[j]*basis[j]. Throws std::invalid_argument on negative
// multiplicities. The result is magic with sum offset(tag) + sum ks.
EdgeLabelling compose(const TypeDecomposition& d);

}  // namespace cubemagic
