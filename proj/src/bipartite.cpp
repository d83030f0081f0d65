#include "wordrep/bipartite.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

namespace wordrep {

BipartiteGraph::BipartiteGraph(int m, int n, const std::vector<std::pair<int, int>>& edges)
    : m_(m), n_(n) {
    if (m < 0 || n < 0) throw std::invalid_argument("negative part size");
    adj_.assign(m_, std::vector<bool>(n_, false));
    for (const auto& [i, j] : edges) {
        if (i < 1 || i > m_ || j < 1 || j > n_)
            throw std::invalid_argument("edge index out of range");
        if (adj_[i - 1][j - 1]) throw std::invalid_argument("duplicate edge");
        adj_[i - 1][j - 1] = true;
        ++edges_;
    }
}

bool BipartiteGraph::adjacent(int a_index, int b_index) const {
    return adj_.at(a_index - 1).at(b_index - 1);
}

int BipartiteGraph::deg_a(int a_index) const {
    const auto& row = adj_.at(a_index - 1);
    return static_cast<int>(std::count(row.begin(), row.end(), true));
}

int BipartiteGraph::deg_b(int b_index) const {
    int c = 0;
    for (int i = 0; i < m_; ++i)
        if (adj_[i][b_index - 1]) ++c;
    return c;
}

std::set<Vertex> BipartiteGraph::neighborhood(Vertex v) const {
    std::set<Vertex> out;
    if (v.part == Part::A) {
        if (v.index < 1 || v.index > m_) throw std::invalid_argument("unknown vertex " + to_string(v));
        for (int j = 1; j <= n_; ++j)
            if (adj_[v.index - 1][j - 1]) out.insert(vb(j));
    } else {
        if (v.index < 1 || v.index > n_) throw std::invalid_argument("unknown vertex " + to_string(v));
        for (int i = 1; i <= m_; ++i)
            if (adj_[i - 1][v.index - 1]) out.insert(va(i));
    }
    return out;
}

std::vector<int> BipartiteGraph::neighbors_of_a(int a_index) const {
    std::vector<int> out;
    for (int j = 1; j <= n_; ++j)
        if (adj_.at(a_index - 1)[j - 1]) out.push_back(j);
    return out;
}

std::vector<int> BipartiteGraph::neighbors_of_b(int b_index) const {
    std::vector<int> out;
    for (int i = 1; i <= m_; ++i)
        if (adj_[i - 1].at(b_index - 1)) out.push_back(i);
    return out;
}

bool BipartiteGraph::connected() const {
    int total = m_ + n_;
    if (total <= 1) return true;
    // vertices 0..m-1 = A, m..m+n-1 = B
    std::vector<bool> seen(total, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v < m_) {
            for (int j = 0; j < n_; ++j)
                if (adj_[v][j] && !seen[m_ + j]) {
                    seen[m_ + j] = true;
                    ++reached;
                    q.push(m_ + j);
                }
        } else {
            for (int i = 0; i < m_; ++i)
                if (adj_[i][v - m_] && !seen[i]) {
                    seen[i] = true;
                    ++reached;
                    q.push(i);
                }
        }
    }
    return reached == total;
}

bool BipartiteGraph::reduced() const {
    for (int i = 1; i <= m_; ++i)
        for (int k = i + 1; k <= m_; ++k)
            if (neighbors_of_a(i) == neighbors_of_a(k)) return false;
    for (int j = 1; j <= n_; ++j)
        for (int k = j + 1; k <= n_; ++k)
            if (neighbors_of_b(j) == neighbors_of_b(k)) return false;
    return true;
}

SimpleGraph BipartiteGraph::to_simple() const {
    std::vector<Vertex> vs;
    for (int i = 1; i <= m_; ++i) vs.push_back(va(i));
    for (int j = 1; j <= n_; ++j) vs.push_back(vb(j));
    SimpleGraph g(std::move(vs));
    for (int i = 1; i <= m_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (adj_[i - 1][j - 1]) g.add_edge(va(i), vb(j));
    return g;
}

// --- file format -------------------------------------------------------------

BipartiteGraph parse_graph(std::istream& in) {
    std::string line;
    int m = -1, n = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (m >= 0) throw ParseError("line " + std::to_string(lineno) + ": duplicate p line");
            if (!(ls >> kind >> m >> n) || kind != "bip" || m < 1 || n < 1)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'p bip <m> <n>'");
        } else if (tag == "e") {
            int i, j;
            if (m < 0) throw ParseError("line " + std::to_string(lineno) + ": e before p");
            if (!(ls >> i >> j))
                throw ParseError("line " + std::to_string(lineno) + ": expected 'e <i> <j>'");
            if (i < 1 || i > m || j < 1 || j > n)
                throw ParseError("line " + std::to_string(lineno) + ": edge index out of range");
            if (!seen.insert({i, j}).second)
                throw ParseError("line " + std::to_string(lineno) + ": duplicate edge");
            edges.push_back({i, j});
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown line type '" + tag + "'");
        }
    }
    if (m < 0) throw ParseError("missing 'p bip <m> <n>' line");
    return BipartiteGraph(m, n, edges);
}

BipartiteGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_graph(in);
}

std::string format_graph(const BipartiteGraph& g) {
    std::ostringstream out;
    out << "p bip " << g.m() << " " << g.n() << "\n";
    for (int i = 1; i <= g.m(); ++i)
        for (int j : g.neighbors_of_a(i)) out << "e " << i << " " << j << "\n";
    return out.str();
}

// --- orientation --------------------------------------------------------------

Oriented orient(const BipartiteGraph& g) {
    if (g.m() <= g.n()) return Oriented{g, false};
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= g.m(); ++i)
        for (int j : g.neighbors_of_a(i)) edges.push_back({j, i});
    return Oriented{BipartiteGraph(g.n(), g.m(), edges), true};
}

Word unorient_word(const Word& w, bool swapped) {
    if (!swapped) return w;
    std::vector<Vertex> out;
    out.reserve(w.size());
    for (const Vertex& v : w.letters)
        out.push_back(Vertex{v.part == Part::A ? Part::B : Part::A, v.index});
    return Word{std::move(out)};
}

// --- components ----------------------------------------------------------------

std::vector<Component> components(const BipartiteGraph& g) {
    int total = g.m() + g.n();
    std::vector<int> comp(total, -1);
    int count = 0;
    for (int start = 0; start < total; ++start) {
        if (comp[start] >= 0) continue;
        std::queue<int> q;
        q.push(start);
        comp[start] = count;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (v < g.m()) {
                for (int j = 1; j <= g.n(); ++j)
                    if (g.adjacent(v + 1, j) && comp[g.m() + j - 1] < 0) {
                        comp[g.m() + j - 1] = count;
                        q.push(g.m() + j - 1);
                    }
            } else {
                for (int i = 1; i <= g.m(); ++i)
                    if (g.adjacent(i, v - g.m() + 1) && comp[i - 1] < 0) {
                        comp[i - 1] = count;
                        q.push(i - 1);
                    }
            }
        }
        ++count;
    }
    std::vector<Component> out;
    for (int c = 0; c < count; ++c) {
        std::vector<int> a_orig, b_orig;
        for (int i = 1; i <= g.m(); ++i)
            if (comp[i - 1] == c) a_orig.push_back(i);
        for (int j = 1; j <= g.n(); ++j)
            if (comp[g.m() + j - 1] == c) b_orig.push_back(j);
        std::vector<std::pair<int, int>> edges;
        for (std::size_t x = 0; x < a_orig.size(); ++x)
            for (std::size_t y = 0; y < b_orig.size(); ++y)
                if (g.adjacent(a_orig[x], b_orig[y]))
                    edges.push_back({static_cast<int>(x) + 1, static_cast<int>(y) + 1});
        out.push_back(Component{
            BipartiteGraph(static_cast<int>(a_orig.size()), static_cast<int>(b_orig.size()), edges),
            std::move(a_orig), std::move(b_orig)});
    }
    return out;
}

Word component_word_to_parent(const Word& w, const Component& c) {
    std::vector<Vertex> out;
    out.reserve(w.size());
    for (const Vertex& v : w.letters) {
        if (v.part == Part::A)
            out.push_back(va(c.a_orig.at(v.index - 1)));
        else
            out.push_back(vb(c.b_orig.at(v.index - 1)));
    }
    return Word{std::move(out)};
}

// --- twin reduction ---------------------------------------------------------------

bool TwinReduction::trivial() const {
    for (const auto& c : a_classes)
        if (c.size() > 1) return false;
    for (const auto& c : b_classes)
        if (c.size() > 1) return false;
    return true;
}

TwinReduction reduce(const BipartiteGraph& g) {
    // Group each part by neighborhood; class representatives keep ascending
    // original order, which fixes the reduced indexing.
    std::map<std::vector<int>, std::vector<int>> by_nbhd_a, by_nbhd_b;
    for (int i = 1; i <= g.m(); ++i) by_nbhd_a[g.neighbors_of_a(i)].push_back(i);
    for (int j = 1; j <= g.n(); ++j) by_nbhd_b[g.neighbors_of_b(j)].push_back(j);

    std::vector<std::vector<int>> a_classes, b_classes;
    for (auto& [nb, members] : by_nbhd_a) a_classes.push_back(members);
    for (auto& [nb, members] : by_nbhd_b) b_classes.push_back(members);
    auto by_rep = [](const std::vector<int>& x, const std::vector<int>& y) {
        return x.front() < y.front();
    };
    std::sort(a_classes.begin(), a_classes.end(), by_rep);
    std::sort(b_classes.begin(), b_classes.end(), by_rep);

    std::vector<int> b_new_of_orig(g.n() + 1, 0);
    for (std::size_t j = 0; j < b_classes.size(); ++j)
        for (int orig : b_classes[j]) b_new_of_orig[orig] = static_cast<int>(j) + 1;

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < a_classes.size(); ++i) {
        std::set<int> nb;
        for (int j : g.neighbors_of_a(a_classes[i].front())) nb.insert(b_new_of_orig[j]);
        for (int j : nb) edges.push_back({static_cast<int>(i) + 1, j});
    }
    BipartiteGraph reduced(static_cast<int>(a_classes.size()), static_cast<int>(b_classes.size()),
                           edges);
    return TwinReduction{std::move(reduced), std::move(a_classes), std::move(b_classes)};
}

Word expand_word_with_twins(const Word& w, const TwinReduction& r) {
    auto k_opt = uniformity(w);
    if (!k_opt) throw std::invalid_argument("expand_word_with_twins: word is not uniform");
    int k = *k_opt;
    if (k < 2 && !r.trivial())
        throw std::invalid_argument("expand_word_with_twins: k = 1 cannot keep twins non-adjacent");

    auto class_of = [&](const Vertex& v) -> const std::vector<int>& {
        const auto& classes = v.part == Part::A ? r.a_classes : r.b_classes;
        return classes.at(v.index - 1);
    };

    std::map<Vertex, int> occ;
    std::vector<Vertex> out;
    for (const Vertex& v : w.letters) {
        const std::vector<int>& cls = class_of(v);
        int seen = ++occ[v];
        Vertex rep{v.part, cls.front()};
        if (seen < k) {
            out.push_back(rep);
            for (std::size_t t = 1; t < cls.size(); ++t) out.push_back(Vertex{v.part, cls[t]});
        } else {
            for (std::size_t t = cls.size(); t > 1; --t) out.push_back(Vertex{v.part, cls[t - 1]});
            out.push_back(rep);
        }
    }
    return Word{std::move(out)};
}

// --- generators -----------------------------------------------------------------

BipartiteGraph crown(int n) {
    if (n < 2) throw std::invalid_argument("crown: n must be >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) edges.push_back({i, j});
    return BipartiteGraph(n, n, edges);
}

BipartiteGraph random_bipartite(int m, int n, double p, std::uint64_t seed) {
    if (m < 1 || n < m) throw std::invalid_argument("random_bipartite: need 1 <= m <= n");
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("random_bipartite: need 0 < p <= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            // mt19937_64 output is standardized; avoid distribution classes so
            // results are identical across platforms.
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) edges.push_back({i, j});
        }
    return BipartiteGraph(m, n, edges);
}

namespace {

// Rows encoded with column 0 as the highest bit, so integer comparison is
// lexicographic comparison of the row's bit string.
std::vector<std::uint32_t> matrix_rows(const BipartiteGraph& g) {
    std::vector<std::uint32_t> rows(g.m(), 0);
    for (int i = 0; i < g.m(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (g.adjacent(i + 1, j + 1)) rows[i] |= 1u << (g.n() - 1 - j);
    return rows;
}

std::uint64_t pack_rows(const std::vector<std::uint32_t>& rows, int n) {
    std::uint64_t bits = 0;
    for (std::uint32_t r : rows) bits = (bits << n) | r;
    return bits;
}

// Lex-min row-major bits over row permutations (columns optimally sorted per
// row order: sorting columns ascending by their top-down bit string minimizes
// the row-major reading for a fixed row order).
std::uint64_t min_bits_over_row_perms(std::vector<std::uint32_t> rows, int m, int n) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ull;
    std::sort(perm.begin(), perm.end());
    do {
        std::vector<std::uint32_t> cols(n, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (rows[perm[i]] >> (n - 1 - j) & 1u) cols[j] |= 1u << (m - 1 - i);
        std::sort(cols.begin(), cols.end());
        std::vector<std::uint32_t> out_rows(m, 0);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < m; ++i)
                if (cols[j] >> (m - 1 - i) & 1u) out_rows[i] |= 1u << (n - 1 - j);
        best = std::min(best, pack_rows(out_rows, n));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<std::uint32_t> transpose_rows(const std::vector<std::uint32_t>& rows, int m, int n) {
    std::vector<std::uint32_t> cols(n, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (rows[i] >> (n - 1 - j) & 1u) cols[j] |= 1u << (m - 1 - i);
    return cols;
}

}  // namespace

std::uint64_t canonical_bits(const BipartiteGraph& g) {
    int m = g.m(), n = g.n();
    if (m * n > 64) throw std::invalid_argument("canonical_bits: matrix too large");
    auto rows = matrix_rows(g);
    std::uint64_t best = min_bits_over_row_perms(rows, m, n);
    if (m == n) best = std::min(best, min_bits_over_row_perms(transpose_rows(rows, m, n), m, n));
    return best;
}

std::vector<BipartiteGraph> enumerate_bipartite(int m, int n, bool connected_reduced_only,
                                                bool override_guard) {
    if (m < 1 || n < 1) throw std::invalid_argument("enumerate_bipartite: need m, n >= 1");
    if (m * n > 20 && !override_guard)
        throw std::invalid_argument("enumerate_bipartite: m*n > 20 (pass override to force)");
    std::vector<BipartiteGraph> out;
    std::uint64_t limit = 1ull << (m * n);
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (bits >> (static_cast<std::uint64_t>(m * n) - 1 - (i * n + j)) & 1ull)
                    edges.push_back({i + 1, j + 1});
        BipartiteGraph g(m, n, edges);
        if (canonical_bits(g) != bits) continue;  // keep only class representatives
        if (connected_reduced_only && !(g.connected() && g.reduced())) continue;
        out.push_back(std::move(g));
    }
    return out;
}

int conjecture_bound(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("conjecture_bound: need m, n >= 1");
    return (m + n + 3) / 4;
}

BipartiteGraph relabel_a(const BipartiteGraph& g, const std::vector<int>& relabel) {
    if (relabel.empty()) return g;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= g.m(); ++i)
        for (int j : g.neighbors_of_a(i)) edges.push_back({relabel.at(i - 1), j});
    return BipartiteGraph(g.m(), g.n(), edges);
}

Word unrelabel_word(const Word& w, const std::vector<int>& relabel) {
    if (relabel.empty()) return w;
    std::vector<int> orig_of_slot(relabel.size() + 1, 0);
    for (std::size_t i = 0; i < relabel.size(); ++i)
        orig_of_slot.at(relabel[i]) = static_cast<int>(i) + 1;
    std::vector<Vertex> out;
    out.reserve(w.size());
    for (const Vertex& v : w.letters)
        out.push_back(v.part == Part::A ? va(orig_of_slot.at(v.index)) : v);
    return Word{std::move(out)};
}

}  // namespace wordrep
