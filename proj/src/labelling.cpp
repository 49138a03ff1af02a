#include "cubemagic/labelling.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cubemagic {

EdgeLabelling EdgeLabelling::unit(int edge) {
    EdgeLabelling l;
    l.set_label(edge, 1);
    return l;
}

EdgeLabelling EdgeLabelling::constant(Label v) {
    EdgeLabelling l;
    l.a.fill(v);
    return l;
}

std::optional<Label> magic_sum_of(const EdgeLabelling& l) {
    for (Label v : l.a)
        if (v < 0) return std::nullopt;
    const Label r = l.label(1) + l.label(2) + l.label(9);
    for (const auto& ve : kVertexEdges) {
        if (l.label(ve[0]) + l.label(ve[1]) + l.label(ve[2]) != r) return std::nullopt;
    }
    return r;
}

bool is_distinct(const EdgeLabelling& l) {
    for (int i = 0; i < kNumEdges; ++i)
        for (int j = i + 1; j < kNumEdges; ++j)
            if (l.a[i] == l.a[j]) return false;
    return true;
}

std::string to_csv(const EdgeLabelling& l) {
    std::ostringstream os;
    for (int i = 0; i < kNumEdges; ++i) {
        if (i) os << ',';
        os << l.a[i];
    }
    return os.str();
}

EdgeLabelling labelling_from_csv(const std::string& s) {
    EdgeLabelling l;
    std::size_t pos = 0;
    for (int i = 0; i < kNumEdges; ++i) {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw std::invalid_argument("labelling must be 12 comma-separated nonnegative integers: \"" + s + "\"");
        Label v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        l.a[i] = v;
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (i + 1 < kNumEdges) {
            if (pos >= s.size() || s[pos] != ',')
                throw std::invalid_argument("labelling must be 12 comma-separated nonnegative integers: \"" + s + "\"");
            ++pos;
        }
    }
    if (pos != s.size())
        throw std::invalid_argument("trailing characters after 12 labels: \"" + s + "\"");
    return l;
}

}  // namespace cubemagic
