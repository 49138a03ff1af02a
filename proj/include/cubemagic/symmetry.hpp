#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cubemagic/labelling.hpp"

namespace cubemagic {

// A bijection on the edge ids 1..12.
struct EdgePermutation {
    std::array<std::uint8_t, kNumEdges> image{};  // image[i] is the image of edge i+1

    static EdgePermutation identity();

    int operator()(int edge) const { return image[edge - 1]; }
    EdgePermutation inverse() const;

    // (a*b)(e) = a(b(e))
    friend EdgePermutation operator*(const EdgePermutation& a, const EdgePermutation& b) {
        EdgePermutation c;
        for (int e = 1; e <= kNumEdges; ++e) c.image[e - 1] = static_cast<std::uint8_t>(a(b(e)));
        return c;
    }

    auto operator<=>(const EdgePermutation&) const = default;
};

// "(2,3)(9,10)(6,7)(11,12)": disjoint cycles, fixed points omitted, each
// cycle led by its smallest element, cycles ordered by leader. Identity
// prints as "()".
std::string cycle_notation(const EdgePermutation& u);

// Builds a permutation from a list of disjoint swaps; convenience for the
// involution generators.
EdgePermutation permutation_from_swaps(const std::vector<std::pair<int, int>>& swaps);

// Moves the label of edge e to edge u(e): apply(u,l).label(u(e)) == l.label(e).
EdgeLabelling apply(const EdgePermutation& u, const EdgeLabelling& l);

struct PermutationGroup {
    std::vector<EdgePermutation> elements;  // sorted, duplicate-free

    std::size_t size() const { return elements.size(); }
    bool contains(const EdgePermutation& u) const;
};

// The full edge-automorphism group of the cube: all 48 edge permutations
// induced by adjacency-preserving vertex bijections, found by exhaustive
// search over the 8! candidates.
PermutationGroup build_group();
const PermutationGroup& cube_group();  // built once, cached

// Subgroup fixing the given edge.
PermutationGroup stabilizer(const PermutationGroup& g, int edge);

// Orbit partition of {1..12} under g; each orbit sorted, orbits ordered by
// smallest member.
std::vector<std::vector<int>> orbits(const PermutationGroup& g);

// For a magic labelling whose x1 is strictly smallest: the minimum of the
// remaining labels is never attained at edges 2,3,8,9,10. `holds`/`violated`
// report the check; `inapplicable` flags inputs outside the precondition.
enum class ExclusionCheck { holds, violated, inapplicable };
ExclusionCheck check_second_smallest_exclusion(const EdgeLabelling& l);

enum class CanonicalShape { type_i, type_ii };

// Shape predicates for labellings with pairwise-distinct labels:
//   type i:  x1 smallest, x6 second smallest
//   type ii: x1 smallest, x4 second smallest, x6 < x7
bool is_canonical_shape_i(const EdgeLabelling& l);
bool is_canonical_shape_ii(const EdgeLabelling& l);

struct CanonicalForm {
    EdgeLabelling labelling;  // the canonical image
    EdgePermutation u;        // apply(u, input) == labelling
    CanonicalShape shape;
};

// For a magic labelling with pairwise-distinct labels, exactly one group
// element sends it to a type-i or type-ii shape; this finds it by testing
// all 48 images. Throws std::invalid_argument on non-magic or non-distinct
// input; throws std::logic_error if no image or more than one image has
// canonical shape (that would contradict the uniqueness of representatives).
CanonicalForm canonical_form(const EdgeLabelling& l);

}  // namespace cubemagic
