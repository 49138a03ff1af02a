#include <doctest.h>

#include <stdexcept>

#include <set>

#include "cubemagic/cone.hpp"
#include "cubemagic/labelling.hpp"
#include "cubemagic/oracle.hpp"

using namespace cubemagic;

TEST_CASE("incidence structure is the cube") {
    // each edge id in exactly two vertex triples
    std::array<int, kNumEdges> uses{};
    for (const auto& ve : kVertexEdges)
        for (int e : ve) ++uses[e - 1];
    for (int e = 0; e < kNumEdges; ++e) CHECK(uses[e] == 2);

    // vertex adjacency from shared edges: 3-regular, connected, bipartite,
    // girth 4 (no triangles, some 4-cycle)
    bool adj[kNumVertices][kNumVertices] = {};
    for (int e = 1; e <= kNumEdges; ++e) {
        std::vector<int> vs;
        for (int v = 0; v < kNumVertices; ++v)
            for (int x : kVertexEdges[v])
                if (x == e) vs.push_back(v);
        REQUIRE(vs.size() == 2);
        adj[vs[0]][vs[1]] = adj[vs[1]][vs[0]] = true;
    }
    for (int v = 0; v < kNumVertices; ++v) {
        int deg = 0;
        for (int w = 0; w < kNumVertices; ++w) deg += adj[v][w];
        CHECK(deg == 3);
    }
    // connected via BFS
    std::set<int> seen{0};
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        int v = frontier.back();
        frontier.pop_back();
        for (int w = 0; w < kNumVertices; ++w)
            if (adj[v][w] && seen.insert(w).second) frontier.push_back(w);
    }
    CHECK(seen.size() == kNumVertices);
    // no triangles
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            for (int c = b + 1; c < 8; ++c) CHECK(!(adj[a][b] && adj[b][c] && adj[a][c]));
    // at least one 4-cycle
    bool has4 = false;
    for (int a = 0; a < 8 && !has4; ++a)
        for (int b = 0; b < 8 && !has4; ++b)
            for (int c = 0; c < 8 && !has4; ++c)
                for (int d = 0; d < 8 && !has4; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    has4 = adj[a][b] && adj[b][c] && adj[c][d] && adj[d][a];
                }
    CHECK(has4);
}

TEST_CASE("magic_sum_of") {
    CHECK(magic_sum_of(EdgeLabelling{}) == 0);
    CHECK(magic_sum_of(alpha(1)) == 1);
    CHECK(magic_sum_of(EdgeLabelling::constant(1)) == 3);
    CHECK(magic_sum_of(EdgeLabelling::unit(1)) == std::nullopt);

    EdgeLabelling negative;
    negative.a = {1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    CHECK(magic_sum_of(negative) == std::nullopt);
}

TEST_CASE("is_distinct") {
    EdgeLabelling l;
    l.a = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    CHECK(is_distinct(l));
    CHECK_FALSE(is_distinct(EdgeLabelling{}));
    CHECK_FALSE(is_distinct(alpha(1)));
}

TEST_CASE("csv round trip and parse errors") {
    EdgeLabelling a1 = alpha(1);
    CHECK(to_csv(a1) == "0,1,1,0,1,0,0,1,0,0,0,0");
    CHECK(labelling_from_csv(to_csv(a1)) == a1);
    CHECK(labelling_from_csv(" 0, 1,1,0,1,0,0,1,0,0,0,0 ") == a1);

    CHECK_THROWS_AS(labelling_from_csv("1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(labelling_from_csv("0,1,1,0,1,0,0,1,0,0,0,-1"), std::invalid_argument);
    CHECK_THROWS_AS(labelling_from_csv("a,b,c,d,e,f,g,h,i,j,k,l"), std::invalid_argument);
    CHECK_THROWS_AS(labelling_from_csv("0,1,1,0,1,0,0,1,0,0,0,0,0"), std::invalid_argument);
}

TEST_CASE("label sum is 4r and constant shift lowers the sum by 3t") {
    for (Label r = 0; r <= 5; ++r)
        for_each_magic_brute_force(r, [&](const EdgeLabelling& l) {
            Label sum = 0;
            for (Label v : l.a) sum += v;
            CHECK(sum == 4 * r);
        });

    // subtracting t from every label of a magic labelling with min >= t
    EdgeLabelling l = 2 * alpha(3) + 3 * EdgeLabelling::constant(1);
    REQUIRE(magic_sum_of(l) == 2 + 9);
    EdgeLabelling shifted;
    for (int e = 1; e <= kNumEdges; ++e) shifted.set_label(e, l.label(e) - 2);
    CHECK(magic_sum_of(shifted) == 2 + 9 - 6);
}
