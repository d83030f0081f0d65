// verify.hpp -- the word-represents-graph verifier over simple graphs

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordrep/word.hpp"

namespace wordrep {

/// A simple undirected graph over an explicit vertex label set. This is the
/// shape the verifier and the exact-search oracle operate on; bipartite
/// graphs convert into it.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::vector<Vertex> vertices);

    int size() const { return static_cast<int>(vertices_.size()); }
    const std::vector<Vertex>& vertices() const { return vertices_; }

    /// Position of `v` in the sorted vertex list; throws on unknown vertex.
    int position(Vertex v) const;
    bool contains(Vertex v) const;

    void add_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const;
    bool adjacent_at(int u, int v) const { return adj_[u][v]; }

    int edge_count() const;

private:
    std::vector<Vertex> vertices_;  // sorted, unique
    std::vector<std::vector<bool>> adj_;
};

enum class FailureReason {
    AdjacentNotAlternating,
    NonAdjacentAlternating,
};

std::string to_string(FailureReason r);

struct Counterexample {
    Vertex u, v;  // u < v
    FailureReason reason;
};

/// Verifier output: represents == true iff no counterexample exists.
struct Verdict {
    bool represents = false;
    std::optional<Counterexample> counterexample;
};

/// Raised when the word's alphabet does not match the graph's vertex set.
struct VerifierInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Checks adjacency <=> alternation over all vertex pairs. Requires every
/// vertex of `g` to occur in `w` and every letter of `w` to be a vertex of
/// `g`; otherwise throws VerifierInputError. On failure the counterexample
/// is the lexicographically smallest failing pair.
Verdict represents(const Word& w, const SimpleGraph& g);

}  // namespace wordrep
