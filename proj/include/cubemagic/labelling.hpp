#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace cubemagic {

using Label = std::int64_t;

inline constexpr int kNumEdges = 12;
inline constexpr int kNumVertices = 8;

// The cube's vertex-edge incidence: one triple of edge ids (1-based) per
// vertex. Each edge id appears in exactly two triples.
inline constexpr std::array<std::array<int, 3>, kNumVertices> kVertexEdges = {{
    {1, 2, 9},
    {1, 3, 10},
    {2, 4, 12},
    {3, 4, 11},
    {5, 6, 9},
    {5, 7, 10},
    {6, 8, 12},
    {7, 8, 11},
}};

// An assignment of a nonnegative integer to each of the 12 cube edges.
// Edge ids are 1..12 at every interface; the backing array is an internal
// detail.
struct EdgeLabelling {
    std::array<Label, kNumEdges> a{};  // a[i] holds the label of edge i+1

    Label label(int edge) const { return a[edge - 1]; }
    void set_label(int edge, Label v) { a[edge - 1] = v; }

    // e_i: label 1 on the given edge, 0 elsewhere.
    static EdgeLabelling unit(int edge);
    static EdgeLabelling constant(Label v);

    EdgeLabelling& operator+=(const EdgeLabelling& o) {
        for (int i = 0; i < kNumEdges; ++i) a[i] += o.a[i];
        return *this;
    }
    friend EdgeLabelling operator+(EdgeLabelling l, const EdgeLabelling& r) { return l += r; }
    friend EdgeLabelling operator*(Label k, const EdgeLabelling& l) {
        EdgeLabelling out;
        for (int i = 0; i < kNumEdges; ++i) out.a[i] = k * l.a[i];
        return out;
    }

    auto operator<=>(const EdgeLabelling&) const = default;
};

// The common vertex sum r, or nullopt when the eight incident-edge sums
// disagree or any label is negative.
std::optional<Label> magic_sum_of(const EdgeLabelling& l);

// True iff the 12 labels are pairwise different.
bool is_distinct(const EdgeLabelling& l);

// "x1,x2,...,x12" in edge order.
std::string to_csv(const EdgeLabelling& l);

// Parses the csv form; throws std::invalid_argument on anything that is not
// exactly 12 comma-separated nonnegative integers.
EdgeLabelling labelling_from_csv(const std::string& s);

}  // namespace cubemagic
