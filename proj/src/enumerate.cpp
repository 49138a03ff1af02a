#include "cubemagic/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cubemagic {

BigInt count_by_type(Label r) {
    BigInt total = 0;
    for (const ConeType& ct : cone_types()) total += binom(r - ct.offset + 5, 5);
    return total;
}

std::vector<EdgeLabelling> enumerate_by_type(Label r) {
    std::vector<EdgeLabelling> out;
    for_each_by_type(r, [&](const EdgeLabelling& l) { out.push_back(l); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<TypeTag, Label>> counting_work_items(Label r) {
    std::vector<std::pair<TypeTag, Label>> items;
    for (const ConeType& ct : cone_types()) {
        const Label s = r - ct.offset;
        for (Label lead = 0; lead <= s; ++lead) items.emplace_back(ct.tag, lead);
    }
    return items;
}

namespace {

BigInt to_orbits(BigInt raw, Label r) {
    if (raw % 48 != 0)
        throw std::logic_error("distinct count " + raw.str() + " at magic sum " +
                               std::to_string(r) + " is not divisible by 48");
    return raw / 48;
}

}  // namespace

BigInt count_distinct(Label r, DistinctMode mode) {
    BigInt raw = count_matching(r, [](const EdgeLabelling& l) { return is_distinct(l); });
    return mode == DistinctMode::raw ? raw : to_orbits(raw, r);
}

BigInt count_distinct_serial(Label r, DistinctMode mode) {
    BigInt raw = count_matching_serial(r, [](const EdgeLabelling& l) { return is_distinct(l); });
    return mode == DistinctMode::raw ? raw : to_orbits(raw, r);
}

CountReport count_report(Label r) {
    CountReport rep;
    rep.r = r;
    rep.total = count_by_type(r);
    rep.distinct_raw = count_distinct(r, DistinctMode::raw);
    rep.distinct_orbits = to_orbits(rep.distinct_raw, r);
    return rep;
}

bool OrderingConstraint::satisfied_by(const EdgeLabelling& l) const {
    for (auto [e, v] : pins)
        if (l.label(e) != v) return false;
    for (auto [i, j] : greater)
        if (!(l.label(i) > l.label(j))) return false;
    return true;
}

bool OrderingConstraint::acyclic() const {
    // DFS over the x_i > x_j edges.
    std::array<int, kNumEdges + 1> state{};  // 0 unseen, 1 on stack, 2 done
    std::vector<std::vector<int>> succ(kNumEdges + 1);
    for (auto [i, j] : greater) succ[i].push_back(j);
    bool cyclic = false;
    auto dfs = [&](auto&& self, int v) -> void {
        state[v] = 1;
        for (int w : succ[v]) {
            if (state[w] == 1) cyclic = true;
            else if (state[w] == 0) self(self, w);
            if (cyclic) return;
        }
        state[v] = 2;
    };
    for (int v = 1; v <= kNumEdges && !cyclic; ++v)
        if (state[v] == 0) dfs(dfs, v);
    return !cyclic;
}

OrderingConstraint f1_constraints() {
    OrderingConstraint c;
    c.pins = {{1, 0}};
    c.greater = {{6, 1}};
    for (int e = 2; e <= kNumEdges; ++e)
        if (e != 6) c.greater.emplace_back(e, 6);
    return c;
}

OrderingConstraint f2_constraints() {
    OrderingConstraint c;
    c.pins = {{1, 0}};
    c.greater = {{4, 1}};
    for (int e = 2; e <= kNumEdges; ++e)
        if (e != 4) c.greater.emplace_back(e, 4);
    c.greater.emplace_back(7, 6);  // x6 < x7
    return c;
}

BigInt count_constrained(Label r, const OrderingConstraint& c, bool distinct_only) {
    return count_matching(r, [&](const EdgeLabelling& l) {
        if (distinct_only && !is_distinct(l)) return false;
        return c.satisfied_by(l);
    });
}

std::vector<BigInt> assemble_orbit_series(Label max_r) {
    const OrderingConstraint f1 = f1_constraints();
    const OrderingConstraint f2 = f2_constraints();
    std::vector<BigInt> c(static_cast<std::size_t>(max_r) + 1);
    for (Label s = 0; s <= max_r; ++s)
        c[s] = count_constrained(s, f1, true) + count_constrained(s, f2, true);
    std::vector<BigInt> g(static_cast<std::size_t>(max_r) + 1);
    for (Label r = 0; r <= max_r; ++r)
        for (Label s = r; s >= 0; s -= 3) g[r] += c[s];
    return g;
}

std::set<std::vector<int>> shuffles(const std::vector<int>& pi, const std::vector<int>& sigma) {
    std::set<int> seen;
    for (int s : pi)
        if (!seen.insert(s).second)
            throw std::invalid_argument("shuffles: repeated symbol in first sequence");
    for (int s : sigma)
        if (!seen.insert(s).second)
            throw std::invalid_argument("shuffles: symbol sets must be disjoint");

    std::set<std::vector<int>> out;
    std::vector<int> cur;
    cur.reserve(pi.size() + sigma.size());
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == pi.size() && j == sigma.size()) {
            out.insert(cur);
            return;
        }
        if (i < pi.size()) {
            cur.push_back(pi[i]);
            self(self, i + 1, j);
            cur.pop_back();
        }
        if (j < sigma.size()) {
            cur.push_back(sigma[j]);
            self(self, i, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace cubemagic
