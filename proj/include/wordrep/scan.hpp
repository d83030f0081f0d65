// scan.hpp -- batch driver: run the dispatcher over a graph family, compare
// achieved uniformities against the conjectured bound, optionally consult
// the exact oracle, and aggregate per coverage class

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordrep/dispatch.hpp"

namespace wordrep {

struct ScanRecord {
    std::string id;  // canonical adjacency bits where computable, raw otherwise
    int m = 0, n = 0;
    std::string cls;  // coverage class: general | odd | chain3 | two2 |
                      // crown-fallback | unresolved
    int k = 0;
    int bound = 0;
    BoundStatus ok = BoundStatus::OutOfScope;
    std::optional<int> oracle_min_k;
};

struct ScanReport {
    std::vector<ScanRecord> records;
    std::map<std::string, int> class_counts;

    std::string format() const;  // one line per record plus a class summary
};

/// Dispatches every graph of the family. Graphs are used as given; callers
/// filter to connected reduced instances first. When `oracle_budget` is set
/// the exact minimum is searched alongside (size guard applies).
ScanReport conjecture_scan(const std::vector<BipartiteGraph>& family,
                           const std::optional<SearchBudget>& oracle_budget = std::nullopt);

std::string scan_id(const BipartiteGraph& g);

}  // namespace wordrep
