#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "cubemagic/bigint.hpp"
#include "cubemagic/cone.hpp"
#include "cubemagic/labelling.hpp"

namespace cubemagic {

// ------------------------------------------------------------------
// Type-based enumeration
// ------------------------------------------------------------------

// |S_N with magic sum r|: one C(r-offset+5, 5) term per type. Closed-form,
// no enumeration.
BigInt count_by_type(Label r);

namespace detail {

// Walks all multiplicity vectors at `level`..5 with the given remaining sum,
// ascending lexicographically, accumulating base + sum k_j*basis_j into cur.
template <class Visitor>
void enum_rec(const ConeType& ct, int level, Label rem, EdgeLabelling cur, Visitor& visit) {
    if (level == 5) {
        for (int i = 0; i < kNumEdges; ++i) cur.a[i] += rem * ct.basis[5].a[i];
        visit(static_cast<const EdgeLabelling&>(cur));
        return;
    }
    const EdgeLabelling& beta = ct.basis[level];
    for (Label k = 0;; ++k) {
        enum_rec(ct, level + 1, rem - k, cur, visit);
        if (k == rem) break;
        for (int i = 0; i < kNumEdges; ++i) cur.a[i] += beta.a[i];
    }
}

}  // namespace detail

// Streams the members of one type with magic sum r (multiplicity vectors in
// lexicographic order). Restricting to k1 = `lead` only is the unit of
// parallel partitioning.
template <class Visitor>
void for_each_of_type(TypeTag tag, Label r, Visitor&& visit) {
    const ConeType& ct = cone_type(tag);
    const Label s = r - ct.offset;
    if (s < 0) return;
    detail::enum_rec(ct, 0, s, ct.base, visit);
}

template <class Visitor>
void for_each_of_type_with_lead(TypeTag tag, Label r, Label lead, Visitor&& visit) {
    const ConeType& ct = cone_type(tag);
    const Label s = r - ct.offset;
    if (s < 0 || lead > s) return;
    EdgeLabelling cur = ct.base;
    for (int i = 0; i < kNumEdges; ++i) cur.a[i] += lead * ct.basis[0].a[i];
    detail::enum_rec(ct, 1, s - lead, cur, visit);
}

// Streams every magic labelling with magic sum r exactly once: all eight
// types in order. The underlying set equals the brute-force oracle's.
template <class Visitor>
void for_each_by_type(Label r, Visitor&& visit) {
    for (TypeTag tag : kAllTypeTags) for_each_of_type(tag, r, visit);
}

// Materializing variant, sorted.
std::vector<EdgeLabelling> enumerate_by_type(Label r);

// ------------------------------------------------------------------
// Filtered counting (serial reference + OpenMP kernel)
// ------------------------------------------------------------------

template <class Pred>
std::uint64_t count_matching_serial(Label r, Pred&& pred) {
    std::uint64_t n = 0;
    for_each_by_type(r, [&](const EdgeLabelling& l) {
        if (pred(l)) ++n;
    });
    return n;
}

// Work items are (type, leading multiplicity) pairs; declared out of line so
// the parallel loop shape is shared by every predicate.
std::vector<std::pair<TypeTag, Label>> counting_work_items(Label r);

template <class Pred>
std::uint64_t count_matching(Label r, Pred&& pred) {
#ifdef _OPENMP
    const auto items = counting_work_items(r);
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (std::size_t i = 0; i < items.size(); ++i) {
        std::uint64_t n = 0;
        for_each_of_type_with_lead(items[i].first, r, items[i].second,
                                   [&](const EdgeLabelling& l) {
                                       if (pred(l)) ++n;
                                   });
        total += n;
    }
    return total;
#else
    return count_matching_serial(r, pred);
#endif
}

// ------------------------------------------------------------------
// Distinct counting
// ------------------------------------------------------------------

enum class DistinctMode { raw, orbits };

// raw: labellings with pairwise-distinct labels at magic sum r.
// orbits: raw / 48; a positive raw count that is not divisible by 48 would
// contradict orbit freeness and throws std::logic_error.
BigInt count_distinct(Label r, DistinctMode mode);
BigInt count_distinct_serial(Label r, DistinctMode mode);  // reference kernel

struct CountReport {
    Label r = 0;
    BigInt total;
    BigInt distinct_raw;
    BigInt distinct_orbits;
};

CountReport count_report(Label r);

// ------------------------------------------------------------------
// Ordering-constrained counting
// ------------------------------------------------------------------

// Strict pairwise constraints plus fixed-value pins on edge labels.
struct OrderingConstraint {
    std::vector<std::pair<int, int>> greater;  // (i, j): x_i > x_j
    std::vector<std::pair<int, Label>> pins;   // x_i == value

    bool satisfied_by(const EdgeLabelling& l) const;
    // True when the strict constraints admit a total order (no directed cycle).
    bool acyclic() const;
};

// x1 = 0, x6 > x1, and every other label above x6.
OrderingConstraint f1_constraints();
// x1 = 0, x4 > x1, every other label above x4, and x6 < x7.
OrderingConstraint f2_constraints();

BigInt count_constrained(Label r, const OrderingConstraint& c, bool distinct_only = false);

// ------------------------------------------------------------------
// Orbit series by convolution
// ------------------------------------------------------------------

// g[r] for r = 0..max_r, where g counts orbits of magic distinct labellings:
// c_s = (# distinct labellings matching f1_constraints at sum s)
//     + (# matching f2_constraints), and g_r = sum_{m>=0} c_{r-3m}
// (adding a constant t to every label raises the magic sum by 3t).
std::vector<BigInt> assemble_orbit_series(Label max_r);

// ------------------------------------------------------------------
// Shuffles
// ------------------------------------------------------------------

// All interleavings of pi and sigma preserving each sequence's internal
// order. The symbol sets must be disjoint and duplicate-free; throws
// std::invalid_argument otherwise. |result| = C(|pi|+|sigma|, |pi|).
std::set<std::vector<int>> shuffles(const std::vector<int>& pi, const std::vector<int>& sigma);

}  // namespace cubemagic
