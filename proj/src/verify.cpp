#include "wordrep/verify.hpp"

#include <algorithm>
#include <set>

namespace wordrep {

SimpleGraph::SimpleGraph(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    adj_.assign(vertices_.size(), std::vector<bool>(vertices_.size(), false));
}

int SimpleGraph::position(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        throw std::invalid_argument("unknown vertex " + to_string(v));
    return static_cast<int>(it - vertices_.begin());
}

bool SimpleGraph::contains(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
    int i = position(u), j = position(v);
    if (i == j) throw std::invalid_argument("loop edge at " + to_string(u));
    adj_[i][j] = adj_[j][i] = true;
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
    return adj_[position(u)][position(v)];
}

int SimpleGraph::edge_count() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (adj_[i][j]) ++c;
    return c;
}

std::string to_string(FailureReason r) {
    switch (r) {
        case FailureReason::AdjacentNotAlternating: return "adjacent-but-not-alternating";
        case FailureReason::NonAdjacentAlternating: return "non-adjacent-but-alternating";
    }
    return "?";
}

Verdict represents(const Word& w, const SimpleGraph& g) {
    std::set<Vertex> seen;
    for (const Vertex& v : w.letters) {
        if (!g.contains(v))
            throw VerifierInputError("word letter " + to_string(v) + " is not a graph vertex");
        seen.insert(v);
    }
    for (const Vertex& v : g.vertices())
        if (!seen.count(v))
            throw VerifierInputError("graph vertex " + to_string(v) + " does not occur in the word");

    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            bool adj = g.adjacent_at(static_cast<int>(i), static_cast<int>(j));
            bool alt = alternates(w, vs[i], vs[j]);
            if (adj != alt) {
                FailureReason reason = adj ? FailureReason::AdjacentNotAlternating
                                           : FailureReason::NonAdjacentAlternating;
                return Verdict{false, Counterexample{vs[i], vs[j], reason}};
            }
        }
    }
    return Verdict{true, std::nullopt};
}

}  // namespace wordrep
