// bipartite.hpp -- bipartite graph model: file format, preprocessing
// (orientation, components, twin reduction and re-expansion), generators,
// and the conjecture bound

#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/verify.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A bipartite graph with parts A (size m) and B (size n) and an m x n
/// adjacency relation. Immutable after construction. Parsed graphs have
/// m, n >= 1; connected-component extraction may produce single-vertex
/// pieces where the opposite part is empty.
class BipartiteGraph {
public:
    BipartiteGraph(int m, int n, const std::vector<std::pair<int, int>>& edges = {});

    int m() const { return m_; }
    int n() const { return n_; }
    int edge_count() const { return edges_; }

    bool adjacent(int a_index, int b_index) const;  // 1-based
    int deg_a(int a_index) const;
    int deg_b(int b_index) const;

    /// Neighbors within the opposite part; throws on an unknown vertex.
    std::set<Vertex> neighborhood(Vertex v) const;
    std::vector<int> neighbors_of_a(int a_index) const;  // sorted b-indices
    std::vector<int> neighbors_of_b(int b_index) const;  // sorted a-indices

    bool connected() const;
    bool reduced() const;

    SimpleGraph to_simple() const;

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    int m_, n_, edges_ = 0;
    std::vector<std::vector<bool>> adj_;  // m x n
};

// --- file format -----------------------------------------------------------
//
//   p bip <m> <n>
//   e <i> <j>        edge a_i - b_j, 1-based
//   c <comment>
//
// Duplicate edges and out-of-range indices are rejected.

BipartiteGraph parse_graph(std::istream& in);
BipartiteGraph parse_graph_file(const std::string& path);
std::string format_graph(const BipartiteGraph& g);

// --- orientation -----------------------------------------------------------

/// A graph re-oriented so that m <= n, remembering whether the parts were
/// swapped. Words built on the oriented graph map back via unorient_word.
struct Oriented {
    BipartiteGraph graph;
    bool swapped;
};

Oriented orient(const BipartiteGraph& g);
Word unorient_word(const Word& w, bool swapped);

// --- connected components --------------------------------------------------

struct Component {
    BipartiteGraph graph;     // re-indexed; one part may be empty
    std::vector<int> a_orig;  // component a_i -> original A index
    std::vector<int> b_orig;
};

/// Connected components ordered by their smallest original vertex.
std::vector<Component> components(const BipartiteGraph& g);

/// Maps a word over a component's labels back to the parent graph's labels.
Word component_word_to_parent(const Word& w, const Component& c);

// --- twin reduction ---------------------------------------------------------

/// Result of merging same-neighborhood vertices within each part. Reduced
/// vertex i of part A corresponds to the class a_classes[i-1] of original
/// indices (sorted ascending; the smallest is the representative), and
/// likewise for part B.
struct TwinReduction {
    BipartiteGraph reduced;
    std::vector<std::vector<int>> a_classes;
    std::vector<std::vector<int>> b_classes;

    bool trivial() const;  // true iff every class is a singleton
};

TwinReduction reduce(const BipartiteGraph& g);

/// Lifts a k-uniform representant of the reduced graph to a word over the
/// original labels: after each occurrence of a class representative except
/// the last, the remaining class members are inserted in ascending order;
/// before the last occurrence they are inserted in descending order.
/// Requires k >= 2 whenever some class is larger than a singleton.
Word expand_word_with_twins(const Word& w, const TwinReduction& r);

// --- generators --------------------------------------------------------------

/// Crown graph H_{n,n}: a_i adjacent to b_j iff i != j. Requires n >= 2.
BipartiteGraph crown(int n);

/// Seed-deterministic G(m, n, p) sampler; requires 1 <= m <= n, 0 < p <= 1.
BipartiteGraph random_bipartite(int m, int n, double edge_probability, std::uint64_t seed);

/// One representative per isomorphism class (row/column permutations, plus
/// part swap when m == n); canonical form is the lexicographically minimal
/// row-major adjacency bit-matrix. Guarded to m*n <= 20 unless overridden.
std::vector<BipartiteGraph> enumerate_bipartite(int m, int n, bool connected_reduced_only,
                                                bool override_guard = false);

/// The canonical (lex-min) adjacency matrix of g under the enumeration's
/// isomorphism group, packed row-major as bits of a 64-bit integer.
std::uint64_t canonical_bits(const BipartiteGraph& g);

/// ceil((m+n)/4), the conjectured bound on the representation number.
int conjecture_bound(int m, int n);

// --- A-side relabeling --------------------------------------------------------

/// Permutes part A: original vertex i becomes relabel[i-1]. B is untouched.
BipartiteGraph relabel_a(const BipartiteGraph& g, const std::vector<int>& relabel);

/// Maps the A-letters of a word built on relabeled indices back to the
/// original ones; identity on B-letters and on an empty relabeling.
Word unrelabel_word(const Word& w, const std::vector<int>& relabel);

}  // namespace wordrep
