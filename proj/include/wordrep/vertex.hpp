// vertex.hpp -- labeled vertices of a bipartite word-representation instance

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wordrep {

enum class Part : std::uint8_t { A = 0, B = 1 };

/// A vertex label: part A or B plus a 1-based index within the part.
/// Ordering is lexicographic by (part, index), with A before B.
struct Vertex {
    Part part = Part::A;
    int index = 1;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex va(int i) { return Vertex{Part::A, i}; }
inline Vertex vb(int j) { return Vertex{Part::B, j}; }

inline std::string to_string(const Vertex& v) {
    return (v.part == Part::A ? "a" : "b") + std::to_string(v.index);
}

/// Parses a token of the form a<i> or b<j> with a positive index.
inline Vertex parse_vertex(const std::string& token) {
    if (token.size() < 2 || (token[0] != 'a' && token[0] != 'b'))
        throw std::invalid_argument("bad vertex token: '" + token + "'");
    std::size_t pos = 0;
    int idx = 0;
    try {
        idx = std::stoi(token.substr(1), &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad vertex token: '" + token + "'");
    }
    if (pos + 1 != token.size() || idx < 1)
        throw std::invalid_argument("bad vertex token: '" + token + "'");
    return Vertex{token[0] == 'a' ? Part::A : Part::B, idx};
}

}  // namespace wordrep
