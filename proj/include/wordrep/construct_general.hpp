// construct_general.hpp -- the baseline construction: a (1 + ceil(m/2))-uniform
// word-representant of any connected reduced bipartite graph with m <= n

#pragma once

#include "wordrep/blocks.hpp"

namespace wordrep {

/// Builds and verifies a (1 + ceil(m/2))-uniform representant of `g`.
/// Requires `g` connected, reduced, and oriented with m <= n; throws
/// std::invalid_argument otherwise and ConstructionError if the mandatory
/// verification fails (a bug, never a data condition).
CertifiedWord construct_general(const BipartiteGraph& g);

/// The padded companion graph: `g` plus an isolated a_{m+1} when m is odd,
/// `g` itself otherwise.
BipartiteGraph pad_if_odd(const BipartiteGraph& g);

}  // namespace wordrep
