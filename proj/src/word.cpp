#include "wordrep/word.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wordrep {

Word restrict_to(const Word& w, const std::set<Vertex>& keep) {
    std::vector<Vertex> out;
    for (const Vertex& v : w.letters)
        if (keep.count(v)) out.push_back(v);
    return Word{std::move(out)};
}

Word reversed(const Word& w) {
    std::vector<Vertex> out(w.letters.rbegin(), w.letters.rend());
    return Word{std::move(out)};
}

bool alternates(const Word& w, Vertex x, Vertex y) {
    if (x == y) throw std::invalid_argument("alternates: equal vertices");
    bool seen = false;
    Vertex last{};
    for (const Vertex& v : w.letters) {
        if (v != x && v != y) continue;
        if (seen && v == last) return false;
        last = v;
        seen = true;
    }
    return true;
}

std::optional<int> uniformity(const Word& w) {
    if (w.empty()) return std::nullopt;
    std::map<Vertex, int> counts;
    for (const Vertex& v : w.letters) ++counts[v];
    int k = counts.begin()->second;
    for (const auto& [v, c] : counts)
        if (c != k) return std::nullopt;
    return k;
}

std::set<Vertex> alphabet(const Word& w) {
    return std::set<Vertex>(w.letters.begin(), w.letters.end());
}

std::string format_word(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        out += to_string(w.letters[i]);
    }
    return out;
}

Word parse_word(const std::string& text) {
    std::istringstream in(text);
    std::vector<Vertex> letters;
    std::string token;
    while (in >> token) letters.push_back(parse_vertex(token));
    return Word{std::move(letters)};
}

}  // namespace wordrep
