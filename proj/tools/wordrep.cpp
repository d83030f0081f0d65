// wordrep.cpp -- command-line front end: construct and verify uniform
// word-representants of bipartite graphs, inspect posets and twin
// reductions, run the exact oracle, and scan graph families against the
// ceil((m+n)/4) bound

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wordrep/construct_odd.hpp"
#include "wordrep/construct_poset.hpp"
#include "wordrep/dispatch.hpp"
#include "wordrep/scan.hpp"

namespace {

using namespace wordrep;

std::string format_block_list(const std::vector<std::pair<std::string, std::vector<int>>>& blocks) {
    std::ostringstream out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out << " ";
        out << blocks[i].first << "=[";
        for (std::size_t t = 0; t < blocks[i].second.size(); ++t) {
            if (t) out << " ";
            out << "b" << blocks[i].second[t];
        }
        out << "]";
    }
    return out.str();
}

void print_trace(const Trace& trace, int component) {
    std::cout << "trace component=" << component << "\n";
    if (!trace.relabel.empty()) {
        std::cout << "trace relabel=";
        for (std::size_t i = 0; i < trace.relabel.size(); ++i)
            std::cout << (i ? " " : "") << "a" << i + 1 << "->a" << trace.relabel[i];
        std::cout << "\n";
    }
    for (const auto& pw : trace.pair_words)
        std::cout << "trace pairword " << pw.label << ": " << format_block_list(pw.blocks)
                  << "\n";
    for (const auto& [label, word] : trace.connectors)
        std::cout << "trace connector " << label << "=" << format_word(word) << "\n";
    if (trace.closing)
        std::cout << "trace closing " << trace.closing->first << "="
                  << format_word(trace.closing->second)
                  << (trace.closing_included ? "" : " (dropped)") << "\n";
    std::cout << "trace padded=" << (trace.partition.padded ? "true" : "false") << "\n";
    if (!trace.assembled.empty())
        std::cout << "trace preword=" << format_word(trace.assembled) << "\n";
    if (trace.with_closing)
        std::cout << "trace predrop=" << format_word(*trace.with_closing) << "\n";
}

int run_construct(const std::string& path, const std::string& strategy, bool trace) {
    BipartiteGraph g = parse_graph_file(path);
    std::optional<Strategy> forced;
    if (strategy == "general") forced = Strategy::General;
    else if (strategy == "odd") forced = Strategy::Odd;
    else if (strategy == "chain3") forced = Strategy::Chain3;
    else if (strategy == "two2") forced = Strategy::TwoChains;

    DispatchResult r = dispatch(g, forced);
    if (trace)
        for (std::size_t c = 0; c < r.component_traces.size(); ++c)
            print_trace(r.component_traces[c], static_cast<int>(c) + 1);
    std::cout << "word=" << format_word(r.word.word) << "\n";
    std::cout << "k=" << r.word.k << "\n";
    std::cout << "verified=true\n";
    std::cout << "strategy=" << to_string(r.report.strategy_used) << "\n";
    std::cout << "m=" << r.report.m << " n=" << r.report.n << "\n";
    std::cout << "bound=" << r.report.bound << "\n";
    std::cout << "bound_satisfied=" << to_string(r.report.bound_satisfied) << "\n";
    if (r.report.residual_class) std::cout << "open_class=true\n";
    if (r.report.components.size() > 1)
        for (const auto& c : r.report.components) {
            std::cout << "component=" << c.index << " m=" << c.m << " n=" << c.n
                      << " strategy=" << to_string(c.strategy) << " k=" << c.k;
            if (!c.note.empty()) std::cout << " note=" << c.note;
            std::cout << "\n";
        }
    return 0;
}

int run_verify(const std::string& path, const std::string& word_text) {
    BipartiteGraph g = parse_graph_file(path);
    Word w = parse_word(word_text);
    Verdict v = represents(w, g.to_simple());
    if (v.represents) {
        std::cout << "represents=true\n";
        return 0;
    }
    std::cout << "represents=false\n";
    std::cout << "counterexample=(" << to_string(v.counterexample->u) << ","
              << to_string(v.counterexample->v) << ") reason="
              << to_string(v.counterexample->reason) << "\n";
    return 1;
}

int run_repnum(const std::string& path, int kmax, std::optional<std::uint64_t> node_limit,
               std::optional<int> time_limit_ms, bool witness, bool unguarded) {
    BipartiteGraph g = parse_graph_file(path);
    SearchBudget budget;
    budget.k_max = kmax;
    budget.node_limit = node_limit;
    if (time_limit_ms) budget.time_limit = std::chrono::milliseconds(*time_limit_ms);
    budget.override_size_guard = unguarded;
    OracleResult r = min_representation_number(g.to_simple(), budget);
    if (r.min_k)
        std::cout << "min_k=" << *r.min_k << "\n";
    else
        std::cout << "min_k=none\n";
    std::cout << "exhausted=" << (r.exhausted ? "true" : "false") << "\n";
    std::cout << "nodes=" << r.nodes << "\n";
    if (witness && r.witness) std::cout << "witness=" << format_word(*r.witness) << "\n";
    return 0;
}

int run_poset(const std::string& path) {
    BipartiteGraph g = parse_graph_file(path);
    InclusionDag dag = inclusion_poset(g);
    for (int x = 1; x <= dag.m; ++x)
        for (int y = 1; y <= dag.m; ++y)
            if (dag.has_arc(x, y)) std::cout << "arc a" << x << " -> a" << y << "\n";
    PosetHeight h = poset_height(dag);
    std::cout << "height=" << h.height << "\n";
    std::cout << "witness=";
    for (std::size_t i = 0; i < h.chain.size(); ++i)
        std::cout << (i ? " " : "") << "a" << h.chain[i];
    std::cout << "\n";
    if (g.m() % 2 == 0 && g.m() >= 6) {
        ChainWitness w = find_witness(dag, g.m());
        if (w.kind == WitnessKind::Chain3) {
            std::cout << "head=chain3 a" << w.chain[0] << " a" << w.chain[1] << " a"
                      << w.chain[2] << "\n";
        } else if (w.kind == WitnessKind::TwoChains) {
            std::cout << "head=two2 (a" << w.chain[0] << ",a" << w.chain[1] << ") (a"
                      << w.chain[2] << ",a" << w.chain[3] << ")\n";
        } else {
            std::cout << "head=none\n";
        }
    }
    return 0;
}

int run_reduce(const std::string& path) {
    BipartiteGraph g = parse_graph_file(path);
    TwinReduction r = reduce(g);
    std::cout << format_graph(r.reduced);
    for (std::size_t i = 0; i < r.a_classes.size(); ++i) {
        std::cout << "c class a" << i + 1 << " <-";
        for (int orig : r.a_classes[i]) std::cout << " a" << orig;
        std::cout << "\n";
    }
    for (std::size_t j = 0; j < r.b_classes.size(); ++j) {
        std::cout << "c class b" << j + 1 << " <-";
        for (int orig : r.b_classes[j]) std::cout << " b" << orig;
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniform word-representants of bipartite graphs"};
    app.require_subcommand(1);

    std::string graph_path, word_text, strategy = "auto";
    bool trace = false;

    auto* construct = app.add_subcommand("construct", "build a verified uniform representant");
    construct->add_option("graph", graph_path, "graph file (p bip format)")->required();
    construct->add_option("--strategy", strategy, "auto|general|odd|chain3|two2")
        ->check(CLI::IsMember({"auto", "general", "odd", "chain3", "two2"}));
    construct->add_flag("--trace", trace, "dump blocks, connectors and the closing word");

    auto* verify = app.add_subcommand("verify", "check a word against a graph");
    verify->add_option("graph", graph_path, "graph file")->required();
    verify->add_option("word", word_text, "word in token form, e.g. \"b2 a1 b3\"")->required();

    int kmax = 3;
    std::uint64_t node_limit = 0;
    int time_limit_ms = 0;
    bool witness = false, unguarded = false;
    auto* repnum = app.add_subcommand("repnum", "exact representation number by exhaustive search");
    repnum->add_option("graph", graph_path, "graph file")->required();
    repnum->add_option("--kmax", kmax, "largest uniformity to try (default 3)");
    repnum->add_option("--node-limit", node_limit, "search node budget (0 = unlimited)");
    repnum->add_option("--time-limit-ms", time_limit_ms, "time budget (0 = unlimited)");
    repnum->add_flag("--witness", witness, "print the witness word");
    repnum->add_flag("--unguarded", unguarded, "lift the 8-vertex size guard");

    auto* poset = app.add_subcommand("poset", "neighborhood inclusion poset of part A");
    poset->add_option("graph", graph_path, "graph file")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "twin reduction");
    reduce_cmd->add_option("graph", graph_path, "graph file")->required();

    auto* gen = app.add_subcommand("gen", "graph generators");
    gen->require_subcommand(1);
    int gn = 0, gm = 0;
    double gp = 0.5;
    std::uint64_t gseed = 1;
    auto* gen_crown = gen->add_subcommand("crown", "crown graph H_{n,n}");
    gen_crown->add_option("n", gn, "part size (>= 2)")->required();
    auto* gen_random = gen->add_subcommand("random", "seeded G(m,n,p)");
    gen_random->add_option("m", gm)->required();
    gen_random->add_option("n", gn)->required();
    gen_random->add_option("p", gp)->required();
    gen_random->add_option("seed", gseed)->required();

    auto* scan = app.add_subcommand("scan", "dispatch a family and check the bound");
    scan->require_subcommand(1);
    bool scan_oracle = false;
    int sm = 0, sn = 0, scount = 0;
    double sp = 0.5;
    std::uint64_t sseed = 1;
    auto* scan_enum = scan->add_subcommand("enum", "all connected reduced graphs of a size");
    scan_enum->add_option("m", sm)->required();
    scan_enum->add_option("n", sn)->required();
    scan_enum->add_flag("--oracle", scan_oracle, "also run the exact oracle (k <= 3)");
    auto* scan_random = scan->add_subcommand("random", "seeded connected reduced samples");
    scan_random->add_option("m", sm)->required();
    scan_random->add_option("n", sn)->required();
    scan_random->add_option("p", sp)->required();
    scan_random->add_option("seed", sseed)->required();
    scan_random->add_option("count", scount)->required();
    scan_random->add_flag("--oracle", scan_oracle, "also run the exact oracle (k <= 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) return run_construct(graph_path, strategy, trace);
        if (verify->parsed()) return run_verify(graph_path, word_text);
        if (repnum->parsed())
            return run_repnum(graph_path, kmax,
                              node_limit ? std::optional<std::uint64_t>(node_limit) : std::nullopt,
                              time_limit_ms ? std::optional<int>(time_limit_ms) : std::nullopt,
                              witness, unguarded);
        if (poset->parsed()) return run_poset(graph_path);
        if (reduce_cmd->parsed()) return run_reduce(graph_path);
        if (gen->parsed()) {
            if (gen_crown->parsed()) {
                std::cout << format_graph(crown(gn));
                return 0;
            }
            std::cout << format_graph(random_bipartite(gm, gn, gp, gseed));
            return 0;
        }
        if (scan->parsed()) {
            std::vector<BipartiteGraph> family;
            if (scan_enum->parsed()) {
                for (BipartiteGraph& g : enumerate_bipartite(sm, sn, true))
                    family.push_back(std::move(g));
            } else {
                std::uint64_t seed = sseed;
                while (static_cast<int>(family.size()) < scount) {
                    BipartiteGraph g = random_bipartite(sm, sn, sp, seed++);
                    if (g.connected() && g.reduced()) family.push_back(std::move(g));
                    if (seed - sseed > 200000ull * static_cast<std::uint64_t>(scount) + 1000000ull)
                        throw std::runtime_error("scan random: filter acceptance too low");
                }
            }
            std::optional<SearchBudget> budget;
            if (scan_oracle) budget = SearchBudget{};
            std::cout << conjecture_scan(family, budget).format();
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
