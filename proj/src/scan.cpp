#include "wordrep/scan.hpp"

#include <sstream>

namespace wordrep {

namespace {

// A record's class names the result that justifies asserting k <= bound, or
// flags the graph as outside every covered class.
std::string classify(const DispatchReport& report) {
    Strategy s = report.strategy_used;
    if (report.residual_class) {
        for (const auto& c : report.components)
            if (c.note == "crown-fallback") return "crown-fallback";
        return "unresolved";
    }
    return to_string(s);
}

}  // namespace

std::string scan_id(const BipartiteGraph& g) {
    std::ostringstream out;
    out << g.m() << "x" << g.n() << ":";
    if (g.m() * g.n() <= 24 || (g.m() <= 7 && g.m() * g.n() <= 64)) {
        out << std::hex << canonical_bits(g);
    } else {
        // raw row-major bits; canonicalizing would be too costly here
        out << "raw-";
        std::uint64_t h = 1469598103934665603ull;
        for (int i = 1; i <= g.m(); ++i)
            for (int j = 1; j <= g.n(); ++j)
                h = (h ^ static_cast<std::uint64_t>(g.adjacent(i, j))) * 1099511628211ull;
        out << std::hex << h;
    }
    return out.str();
}

ScanReport conjecture_scan(const std::vector<BipartiteGraph>& family,
                           const std::optional<SearchBudget>& oracle_budget) {
    ScanReport report;
    for (const BipartiteGraph& g : family) {
        DispatchResult r = dispatch(g);
        ScanRecord rec;
        rec.id = scan_id(g);
        rec.m = r.report.m;
        rec.n = r.report.n;
        rec.cls = classify(r.report);
        rec.k = r.report.k_achieved;
        rec.bound = r.report.bound;
        rec.ok = r.report.bound_satisfied;
        if (oracle_budget) {
            try {
                OracleResult o = min_representation_number(g.to_simple(), *oracle_budget);
                if (o.min_k && o.exhausted) rec.oracle_min_k = o.min_k;
            } catch (const std::invalid_argument&) {
                // graph exceeds the oracle's size guard; record no minimum
            }
        }
        ++report.class_counts[rec.cls];
        report.records.push_back(std::move(rec));
    }
    return report;
}

std::string ScanReport::format() const {
    std::ostringstream out;
    for (const ScanRecord& r : records) {
        out << "id=" << r.id << " m=" << r.m << " n=" << r.n << " class=" << r.cls
            << " k=" << r.k << " bound=" << r.bound << " ok=" << to_string(r.ok);
        if (r.oracle_min_k) out << " oracle_min_k=" << *r.oracle_min_k;
        out << "\n";
    }
    for (const auto& [cls, count] : class_counts)
        out << "count class=" << cls << " graphs=" << count << "\n";
    return out.str();
}

}  // namespace wordrep
