// word.hpp -- words over vertex letters: restriction, reversal, alternation,
// uniformity, and the token text form

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wordrep/vertex.hpp"

namespace wordrep {

/// An immutable finite sequence of vertex letters. All operations on words
/// return new values.
struct Word {
    std::vector<Vertex> letters;

    Word() = default;
    explicit Word(std::vector<Vertex> ls) : letters(std::move(ls)) {}

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    friend bool operator==(const Word&, const Word&) = default;
};

/// Subsequence of `w` keeping exactly the letters in `keep`, order preserved.
Word restrict_to(const Word& w, const std::set<Vertex>& keep);

/// Letters of `w` in reverse order.
Word reversed(const Word& w);

/// True iff w restricted to {x, y} strictly alternates between x and y.
/// Restrictions of length 0 or 1 alternate vacuously. Requires x != y.
bool alternates(const Word& w, Vertex x, Vertex y);

/// The common occurrence count k if every distinct letter of `w` occurs
/// exactly k times; nullopt otherwise (and for the empty word).
std::optional<int> uniformity(const Word& w);

/// Distinct letters of `w`.
std::set<Vertex> alphabet(const Word& w);

std::string format_word(const Word& w);
Word parse_word(const std::string& text);

}  // namespace wordrep
