#include "cubemagic/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cubemagic {

EdgePermutation EdgePermutation::identity() {
    EdgePermutation u;
    for (int e = 1; e <= kNumEdges; ++e) u.image[e - 1] = static_cast<std::uint8_t>(e);
    return u;
}

EdgePermutation EdgePermutation::inverse() const {
    EdgePermutation v;
    for (int e = 1; e <= kNumEdges; ++e) v.image[image[e - 1] - 1] = static_cast<std::uint8_t>(e);
    return v;
}

std::string cycle_notation(const EdgePermutation& u) {
    std::ostringstream os;
    std::array<bool, kNumEdges> seen{};
    bool any = false;
    for (int e = 1; e <= kNumEdges; ++e) {
        if (seen[e - 1] || u(e) == e) continue;
        any = true;
        os << '(' << e;
        seen[e - 1] = true;
        for (int f = u(e); f != e; f = u(f)) {
            os << ',' << f;
            seen[f - 1] = true;
        }
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

EdgePermutation permutation_from_swaps(const std::vector<std::pair<int, int>>& swaps) {
    EdgePermutation u = EdgePermutation::identity();
    for (auto [a, b] : swaps) {
        u.image[a - 1] = static_cast<std::uint8_t>(b);
        u.image[b - 1] = static_cast<std::uint8_t>(a);
    }
    return u;
}

EdgeLabelling apply(const EdgePermutation& u, const EdgeLabelling& l) {
    EdgeLabelling out;
    for (int e = 1; e <= kNumEdges; ++e) out.set_label(u(e), l.label(e));
    return out;
}

bool PermutationGroup::contains(const EdgePermutation& u) const {
    return std::binary_search(elements.begin(), elements.end(), u);
}

PermutationGroup build_group() {
    // Edge id of each vertex pair, from the incidence triples.
    int edge_of[kNumVertices][kNumVertices];
    for (auto& row : edge_of) std::fill(std::begin(row), std::end(row), 0);
    std::array<std::pair<int, int>, kNumEdges> ends{};  // per edge: its two vertices
    {
        std::array<int, kNumEdges> found{};
        for (int v = 0; v < kNumVertices; ++v)
            for (int e : kVertexEdges[v]) {
                if (found[e - 1] == 0)
                    ends[e - 1].first = v;
                else
                    ends[e - 1].second = v;
                ++found[e - 1];
            }
        for (int e = 0; e < kNumEdges; ++e) {
            edge_of[ends[e].first][ends[e].second] = e + 1;
            edge_of[ends[e].second][ends[e].first] = e + 1;
        }
    }

    PermutationGroup g;
    std::array<int, kNumVertices> perm;
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int e = 0; e < kNumEdges && ok; ++e)
            ok = edge_of[perm[ends[e].first]][perm[ends[e].second]] != 0;
        if (!ok) continue;
        EdgePermutation u;
        for (int e = 0; e < kNumEdges; ++e)
            u.image[e] = static_cast<std::uint8_t>(edge_of[perm[ends[e].first]][perm[ends[e].second]]);
        g.elements.push_back(u);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::sort(g.elements.begin(), g.elements.end());
    g.elements.erase(std::unique(g.elements.begin(), g.elements.end()), g.elements.end());
    if (g.elements.size() != 48)
        throw std::logic_error("edge group has " + std::to_string(g.elements.size()) +
                               " elements, expected 48");
    return g;
}

const PermutationGroup& cube_group() {
    static const PermutationGroup g = build_group();
    return g;
}

PermutationGroup stabilizer(const PermutationGroup& g, int edge) {
    PermutationGroup s;
    for (const auto& u : g.elements)
        if (u(edge) == edge) s.elements.push_back(u);
    return s;
}

std::vector<std::vector<int>> orbits(const PermutationGroup& g) {
    std::array<bool, kNumEdges> done{};
    std::vector<std::vector<int>> out;
    for (int e = 1; e <= kNumEdges; ++e) {
        if (done[e - 1]) continue;
        std::vector<int> orbit{e};
        done[e - 1] = true;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (const auto& u : g.elements) {
                int f = u(orbit[i]);
                if (!done[f - 1]) {
                    done[f - 1] = true;
                    orbit.push_back(f);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

ExclusionCheck check_second_smallest_exclusion(const EdgeLabelling& l) {
    if (!magic_sum_of(l)) return ExclusionCheck::inapplicable;
    for (int e = 2; e <= kNumEdges; ++e)
        if (l.label(e) <= l.label(1)) return ExclusionCheck::inapplicable;
    Label m = l.label(2);
    for (int e = 3; e <= kNumEdges; ++e) m = std::min(m, l.label(e));
    for (int e : {2, 3, 8, 9, 10})
        if (l.label(e) == m) return ExclusionCheck::violated;
    return ExclusionCheck::holds;
}

namespace {

// Rank of each label among the twelve; rank 0 = smallest. Assumes distinct.
int rank_of_edge(const EdgeLabelling& l, int edge) {
    int r = 0;
    for (int e = 1; e <= kNumEdges; ++e)
        if (l.label(e) < l.label(edge)) ++r;
    return r;
}

}  // namespace

bool is_canonical_shape_i(const EdgeLabelling& l) {
    return rank_of_edge(l, 1) == 0 && rank_of_edge(l, 6) == 1;
}

bool is_canonical_shape_ii(const EdgeLabelling& l) {
    return rank_of_edge(l, 1) == 0 && rank_of_edge(l, 4) == 1 && l.label(6) < l.label(7);
}

CanonicalForm canonical_form(const EdgeLabelling& l) {
    if (!magic_sum_of(l)) throw std::invalid_argument("canonical_form: labelling is not magic");
    if (!is_distinct(l))
        throw std::invalid_argument("canonical_form: labels must be pairwise distinct");

    const PermutationGroup& g = cube_group();
    const EdgePermutation* found = nullptr;
    CanonicalForm cf;
    for (const auto& u : g.elements) {
        EdgeLabelling img = apply(u, l);
        bool i = is_canonical_shape_i(img);
        bool ii = !i && is_canonical_shape_ii(img);
        if (!i && !ii) continue;
        if (found)
            throw std::logic_error("canonical_form: more than one canonical image of " + to_csv(l));
        found = &u;
        cf.labelling = img;
        cf.u = u;
        cf.shape = i ? CanonicalShape::type_i : CanonicalShape::type_ii;
    }
    if (!found) throw std::logic_error("canonical_form: no canonical image of " + to_csv(l));
    return cf;
}

}  // namespace cubemagic
