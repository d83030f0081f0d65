// dispatch.hpp -- the strategy dispatcher: orient, split into components,
// reduce, pick the strongest applicable construction per component, re-expand
// twins, and merge component words into one verified representant

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wordrep/blocks.hpp"
#include "wordrep/oracle.hpp"

namespace wordrep {

enum class Strategy { General, Odd, Chain3, TwoChains };
std::string to_string(Strategy s);

enum class BoundStatus { Yes, No, OutOfScope };
std::string to_string(BoundStatus s);

struct ComponentReport {
    int index = 0;  // 1-based position in the component list
    int m = 0, n = 0;          // oriented reduced sizes
    Strategy strategy = Strategy::General;
    int k = 0;                  // uniformity of the component's word
    bool reduced_twins = false;  // twin classes were collapsed and re-expanded
    bool swapped_parts = false;
    std::string note;           // e.g. crown fallback, residual class
};

struct DispatchReport {
    Strategy strategy_used = Strategy::General;  // of the component that set k
    int k_achieved = 0;
    int m = 0, n = 0;  // oriented input sizes
    int bound = 0;     // conjecture_bound(m, n)
    BoundStatus bound_satisfied = BoundStatus::OutOfScope;
    bool residual_class = false;  // open per this theory: crowns, or m = n even
                                  // with no usable poset witness
    std::vector<ComponentReport> components;
    std::string notes;
};

struct DispatchResult {
    CertifiedWord word;  // verified against the full input graph
    DispatchReport report;
    std::vector<Trace> component_traces;  // construction traces, one per component,
                                          // in reduced-oriented component space
};

/// True iff g is the crown H_{n,n} (complete bipartite minus the identity
/// matching).
bool is_crown_graph(const BipartiteGraph& g);

/// Strategy choice per (already oriented, connected, reduced) component:
/// the odd construction when m is odd >= 5 and the graph is not a crown,
/// else a poset construction when m = 2k (k >= 3) has a witness, else the
/// general construction. `forced` skips the choice and errors (throws
/// std::invalid_argument) when the forced strategy does not apply.
DispatchResult dispatch(const BipartiteGraph& g,
                        std::optional<Strategy> forced = std::nullopt);

/// Pads a k'-uniform representant to k-uniform by appending copies of its
/// last-occurrence permutation; alternation classes are preserved.
Word pad_uniform(const Word& w, int from_k, int to_k);

}  // namespace wordrep
