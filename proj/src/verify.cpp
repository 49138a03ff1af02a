#include "cubemagic/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cubemagic/cone.hpp"
#include "cubemagic/enumerate.hpp"
#include "cubemagic/oracle.hpp"
#include "cubemagic/series.hpp"
#include "cubemagic/symmetry.hpp"

namespace cubemagic {

namespace {

// Printed reference values for orbit counts at magic sums 17..23.
constexpr std::int64_t kOrbitCounts[] = {6, 13, 34, 60, 128, 199, 331};

void add(std::vector<CheckResult>& out, const std::string& name, bool ok,
         const std::string& detail = "") {
    out.push_back({name, ok, detail});
}

void add_skipped(std::vector<CheckResult>& out, const std::string& name, Label needed) {
    out.push_back({name, true, "skipped (needs --max-sum >= " + std::to_string(needed) + ")"});
}

// Rank over the rationals of the 6 x 12 integer matrix of basis vectors,
// by fraction-free elimination.
int basis_rank(const ConeType& ct) {
    std::array<std::array<std::int64_t, kNumEdges>, 6> m{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < kNumEdges; ++j) m[i][j] = ct.basis[i].a[j];
    int rank = 0;
    for (int col = 0; col < kNumEdges && rank < 6; ++col) {
        int pivot = -1;
        for (int row = rank; row < 6; ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int row = rank + 1; row < 6; ++row) {
            if (m[row][col] == 0) continue;
            const std::int64_t a = m[rank][col], b = m[row][col];
            for (int j = 0; j < kNumEdges; ++j) m[row][j] = m[row][j] * a - m[rank][j] * b;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::vector<CheckResult> verify_cone(Label max_sum) {
    std::vector<CheckResult> out;

    add(out, "basis relations", verify_relations());

    {
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= 9; ++i) {
            const EdgeLabelling& a = alpha(i);
            Label ones = 0;
            for (Label v : a.a) {
                if (v != 0 && v != 1) ok = false;
                ones += v;
            }
            if (ones != 4 || magic_sum_of(a) != 1) ok = false;
        }
        if (magic_sum_of(basis_table().t) != 3) ok = false;
        add(out, "basis vectors are perfect matchings", ok, detail);
    }

    {
        bool ok = true;
        std::ostringstream detail;
        for (const ConeType& ct : cone_types())
            if (int r = basis_rank(ct); r != 6) {
                ok = false;
                detail << to_string(ct.tag) << " rank " << r << ' ';
            }
        add(out, "each type basis has rank 6", ok, detail.str());
    }

    {
        // C1-C3 in q-space vs nonnegativity of the reconstruction, over the
        // box [-5,5]^6.
        bool ok = true;
        QCoords q;
        for (q.q[0] = -5; q.q[0] <= 5 && ok; ++q.q[0])
            for (q.q[1] = -5; q.q[1] <= 5 && ok; ++q.q[1])
                for (q.q[2] = -5; q.q[2] <= 5 && ok; ++q.q[2])
                    for (q.q[3] = -5; q.q[3] <= 5 && ok; ++q.q[3])
                        for (q.q[4] = -5; q.q[4] <= 5 && ok; ++q.q[4])
                            for (q.q[5] = -5; q.q[5] <= 5 && ok; ++q.q[5]) {
                                const auto coords = reconstruct_coords(q);
                                const bool nonneg =
                                    std::all_of(coords.begin(), coords.end(),
                                                [](std::int64_t v) { return v >= 0; });
                                ok = satisfies_c1_c2_c3(q) == nonneg;
                            }
        add(out, "q-space conditions match coordinate nonnegativity on [-5,5]^6", ok);
    }

    {
        bool ok = true;
        std::ostringstream detail;
        std::uint64_t checked = 0;
        for (Label r = 0; r <= max_sum && ok; ++r) {
            std::set<EdgeLabelling> seen;
            for_each_magic_brute_force(r, [&](const EdgeLabelling& l) {
                if (!ok) return;
                TypeDecomposition d = classify(l);
                if (compose(d) != l) {
                    ok = false;
                    detail << "compose(classify(.)) != id at " << to_csv(l);
                }
                Label ksum = 0;
                for (auto k : d.ks) ksum += k;
                if (ksum + cone_type(d.tag).offset != r) {
                    ok = false;
                    detail << "offset mismatch at " << to_csv(l);
                }
                if (!seen.insert(l).second) ok = false;
                ++checked;
            });
            // the same set must come out of the type enumeration, once each
            std::vector<EdgeLabelling> typed = enumerate_by_type(r);
            if (std::adjacent_find(typed.begin(), typed.end()) != typed.end()) {
                ok = false;
                detail << "duplicate labelling in type enumeration at r=" << r;
            }
            if (!std::equal(typed.begin(), typed.end(), seen.begin(), seen.end())) {
                ok = false;
                detail << "type enumeration differs from oracle at r=" << r;
            }
        }
        add(out, "decomposition bijection vs oracle (r <= " + std::to_string(max_sum) + ", " +
                     std::to_string(checked) + " labellings)",
            ok, detail.str());
    }

    {
        bool ok = true;
        std::ostringstream detail;
        const Label kmax = std::min<Label>(max_sum, 5);
        for (TypeTag tag : kAllTypeTags) {
            TypeDecomposition d;
            d.tag = tag;
            for (d.ks[0] = 0; d.ks[0] <= kmax; ++d.ks[0])
                for (d.ks[1] = 0; d.ks[1] + d.ks[0] <= kmax; ++d.ks[1])
                    for (d.ks[2] = 0; d.ks[2] + d.ks[1] + d.ks[0] <= kmax; ++d.ks[2])
                        for (d.ks[3] = 0; d.ks[3] + d.ks[2] + d.ks[1] + d.ks[0] <= kmax; ++d.ks[3])
                            for (d.ks[4] = 0;
                                 d.ks[4] + d.ks[3] + d.ks[2] + d.ks[1] + d.ks[0] <= kmax;
                                 ++d.ks[4])
                                for (d.ks[5] = 0; d.ks[5] + d.ks[4] + d.ks[3] + d.ks[2] + d.ks[1] +
                                                      d.ks[0] <=
                                                  kmax;
                                     ++d.ks[5]) {
                                    if (ok && !(classify(compose(d)) == d)) {
                                        ok = false;
                                        detail << "not inverted: " << to_string(tag);
                                    }
                                }
        }
        add(out, "classify inverts compose (sum k <= " + std::to_string(kmax) + ")", ok,
            detail.str());
    }

    return out;
}

std::vector<CheckResult> verify_symmetry(Label max_sum) {
    std::vector<CheckResult> out;
    const PermutationGroup& g = cube_group();

    add(out, "group has 48 elements", g.size() == 48);

    {
        // Faithful: distinct image arrays, and only the identity fixes all edges.
        std::set<EdgePermutation> uniq(g.elements.begin(), g.elements.end());
        bool faithful = uniq.size() == g.size();
        int fixes_all = 0;
        for (const auto& u : g.elements)
            if (u == EdgePermutation::identity()) ++fixes_all;
        add(out, "action is faithful", faithful && fixes_all == 1);
    }

    const EdgePermutation gen1 =
        permutation_from_swaps({{2, 3}, {9, 10}, {6, 7}, {11, 12}});
    const EdgePermutation gen2 =
        permutation_from_swaps({{3, 10}, {4, 5}, {7, 11}, {6, 12}, {2, 9}});
    add(out, "both involution generators are in the group", g.contains(gen1) && g.contains(gen2));

    const PermutationGroup u1 = stabilizer(g, 1);
    add(out, "stabilizer of edge 1 has 4 elements", u1.size() == 4,
        u1.size() == 4 ? "" : std::to_string(u1.size()) + " elements");
    add(out, "stabilizer contains both generators", u1.contains(gen1) && u1.contains(gen2));

    {
        const std::vector<std::vector<int>> expected = {
            {1}, {2, 3, 9, 10}, {4, 5}, {6, 7, 11, 12}, {8}};
        add(out, "stabilizer orbits are {1},{8},{4,5},{2,3,9,10},{6,7,11,12}",
            orbits(u1) == expected);
        add(out, "full group is edge-transitive",
            orbits(g) == std::vector<std::vector<int>>{{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}});
    }

    {
        // Each group element permutes the magic labellings of every sum and
        // preserves distinctness.
        bool ok = true;
        const Label rmax = std::min<Label>(max_sum, 6);
        for (Label r = 0; r <= rmax && ok; ++r) {
            const std::vector<EdgeLabelling> all = enumerate_by_type(r);
            const std::set<EdgeLabelling> all_set(all.begin(), all.end());
            for (const auto& u : g.elements) {
                for (const auto& l : all) {
                    EdgeLabelling img = apply(u, l);
                    if (magic_sum_of(img) != r || !all_set.count(img) ||
                        is_distinct(img) != is_distinct(l)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
        }
        add(out, "group action preserves magic sum and distinctness (r <= " +
                     std::to_string(std::min<Label>(max_sum, 6)) + ")",
            ok);
    }

    {
        bool ok = true;
        std::string detail;
        for (Label r = 0; r <= max_sum && ok; ++r)
            for_each_magic_brute_force(r, [&](const EdgeLabelling& l) {
                if (!ok) return;
                ExclusionCheck c = check_second_smallest_exclusion(l);
                if (c == ExclusionCheck::violated) {
                    ok = false;
                    detail = "violated at " + to_csv(l);
                }
            });
        add(out, "second-smallest exclusion (r <= " + std::to_string(max_sum) + ")", ok, detail);
    }

    if (max_sum >= 17) {
        bool ok = true;
        std::string detail;
        const Label rmax = std::min<Label>(max_sum, 18);
        for (Label r = 17; r <= rmax && ok; ++r)
            for_each_by_type(r, [&](const EdgeLabelling& l) {
                if (!ok || !is_distinct(l)) return;
                std::set<EdgeLabelling> orbit;
                int canonical = 0;
                for (const auto& u : g.elements) {
                    EdgeLabelling img = apply(u, l);
                    orbit.insert(img);
                    if (is_canonical_shape_i(img) || is_canonical_shape_ii(img)) ++canonical;
                }
                if (orbit.size() != 48 || canonical != 1) {
                    ok = false;
                    detail = "at " + to_csv(l) + ": orbit " + std::to_string(orbit.size()) +
                             ", canonical images " + std::to_string(canonical);
                }
            });
        add(out, "unique canonical representative per distinct labelling (r = 17.." +
                     std::to_string(rmax) + ")",
            ok, detail);
    } else {
        add_skipped(out, "unique canonical representative per distinct labelling", 17);
    }

    return out;
}

std::vector<CheckResult> verify_series(Label max_sum) {
    std::vector<CheckResult> out;

    {
        const auto coeffs = expand(closed_form_G(), 200);
        bool ok = true;
        for (Label r = 0; r <= 200 && ok; ++r) ok = coeffs[r] == count_by_type(r);
        add(out, "closed-form count series matches type counts (r <= 200)", ok);
    }

    {
        const Label rmax = std::min<Label>(max_sum, 8);
        const auto coeffs = expand(closed_form_G(), static_cast<int>(rmax));
        bool ok = true;
        std::ostringstream detail;
        for (Label r = 0; r <= rmax && ok; ++r) {
            const std::uint64_t brute = brute_force_count(r);
            ok = coeffs[r] == brute;
            if (!ok) detail << "r=" << r << " series " << coeffs[r].str() << " brute " << brute;
        }
        add(out, "count series matches brute force (r <= " + std::to_string(rmax) + ")", ok,
            detail.str());
    }

    {
        const auto coeffs = expand(closed_form_Gstar(), 23);
        bool ok = true;
        for (int r = 0; r <= 16; ++r) ok = ok && coeffs[r] == 0;
        for (int r = 17; r <= 23; ++r) ok = ok && coeffs[r] == kOrbitCounts[r - 17];
        add(out, "orbit-count closed form reproduces its leading terms", ok);
        add(out, "orbit-count numerator checksum",
            gstar_numerator_n().eval_at_one() == BigInt("7264857600") &&
                gstar_numerator_n().degree() == 86);
    }

    add(out, "quasi-polynomial periods",
        quasi_period(closed_form_Gstar()) == 720720 && quasi_period(closed_form_G()) == 1);

    {
        // expand() and polynomial multiplication agree: series * denominator
        // recovers the numerator.
        bool ok = true;
        for (const RationalGF& f : {closed_form_G(), closed_form_Gstar(), closed_form_F1_spec()}) {
            const int n = 140;
            const auto coeffs = expand(f, n);
            IntPoly series;
            series.c = coeffs;
            series.normalize();
            IntPoly back = series * f.denominator_poly();
            back.c.resize(n + 1);
            back.normalize();
            IntPoly num = f.numerator;
            num.c.resize(n + 1);
            num.normalize();
            ok = ok && back == num;
        }
        add(out, "expansion times denominator recovers numerator", ok);
    }

    {
        const auto counts = expand(closed_form_G(), 36);
        std::vector<BigInt> d(counts.begin(), counts.end());
        for (int step = 0; step < 6; ++step)
            for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
        bool ok = true;
        for (int r = 0; r <= 30; ++r) ok = ok && d[r] == 0;
        add(out, "sixth finite differences of the count vanish (degree-5 polynomial)", ok);
    }

    return out;
}

std::vector<CheckResult> verify_distinct(Label max_sum) {
    std::vector<CheckResult> out;

    {
        const auto f1 = expand(closed_form_F1_spec(), 14);
        bool ok = true;
        std::ostringstream detail;
        const Label rmax = std::min<Label>(max_sum, 14);
        for (Label r = 0; r <= rmax; ++r) {
            const BigInt n1 = count_constrained(r, f1_constraints());
            const BigInt n2 = count_constrained(r, f2_constraints());
            if (n1 != f1[r] || n2 != f1[r]) {
                ok = false;
                detail << "r=" << r << ": constrained counts " << n1.str() << '/' << n2.str()
                       << " vs series " << f1[r].str() << "; ";
            }
        }
        add(out, "shape-constrained counts match their closed form (r <= " +
                     std::to_string(rmax) + ")",
            ok, detail.str());
    }

    if (max_sum >= 16) {
        bool ok = true;
        std::ostringstream detail;
        const Label rmax = std::min<Label>(max_sum, 23);
        for (Label r = 16; r <= rmax; ++r) {
            const BigInt raw = count_distinct(r, DistinctMode::raw);
            const BigInt expected = r == 16 ? 0 : BigInt(48) * kOrbitCounts[r - 17];
            if (raw % 48 != 0 || raw != expected) {
                ok = false;
                detail << "r=" << r << " raw=" << raw.str() << " expected=" << expected.str()
                       << "; ";
            }
        }
        add(out, "distinct counts are 48 * printed orbit counts (r <= " + std::to_string(rmax) +
                     ")",
            ok, detail.str());
    } else {
        add_skipped(out, "distinct counts are 48 * printed orbit counts", 16);
    }

    {
        // Serial reference and the parallel kernel must agree.
        const Label r = std::min<Label>(max_sum, 17);
        bool ok = count_distinct_serial(r, DistinctMode::raw) ==
                  count_distinct(r, DistinctMode::raw);
        add(out, "serial and parallel distinct counts agree (r = " + std::to_string(r) + ")", ok);
    }

    if (max_sum >= 17) {
        const Label rmax = std::min<Label>(max_sum, 20);
        const auto g = assemble_orbit_series(rmax);
        const auto closed = expand(closed_form_Gstar(), static_cast<int>(rmax));
        bool ok = true;
        std::ostringstream detail;
        for (Label r = 0; r <= rmax; ++r)
            if (g[r] != closed[r]) {
                ok = false;
                detail << "r=" << r << " convolution " << g[r].str() << " closed form "
                       << closed[r].str() << "; ";
            }
        add(out, "orbit series by convolution matches closed form (r <= " +
                     std::to_string(rmax) + ")",
            ok, detail.str());
    } else {
        add_skipped(out, "orbit series by convolution matches closed form", 17);
    }

    return out;
}

std::vector<CheckResult> verify_all(Label max_sum) {
    std::vector<CheckResult> out = verify_cone(max_sum);
    auto append = [&](std::vector<CheckResult> v) {
        out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    };
    append(verify_symmetry(max_sum));
    append(verify_series(max_sum));
    append(verify_distinct(max_sum));
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& c) { return c.passed; });
}

}  // namespace cubemagic
