#include "wordrep/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace wordrep {

namespace {

using Clock = std::chrono::steady_clock;

struct PairState {
    std::int8_t last = -1;       // -1 none, else vertex id of the later letter seen
    bool alternating = true;
};

class Searcher {
public:
    Searcher(const SimpleGraph& g, int k, const SearchBudget& budget)
        : g_(g), k_(k), budget_(budget), v_(g.size()) {
        counts_.assign(v_, 0);
        pair_.assign(v_ * v_, PairState{});
        word_.reserve(static_cast<std::size_t>(v_) * k_);
        deadline_ = budget_.time_limit ? std::optional<Clock::time_point>(
                                             Clock::now() + *budget_.time_limit)
                                       : std::nullopt;
    }

    LevelResult run() {
        LevelResult res;
        bool exceeded = false;
        if (budget_.disable_first_letter_fixing) {
            for (int first = 0; first < v_ && !found_; ++first)
                if (!try_letter(first)) exceeded = true;
        } else {
            if (!try_letter(0)) exceeded = true;
        }
        res.nodes = nodes_;
        if (found_) {
            std::vector<Vertex> letters;
            for (int id : word_) letters.push_back(g_.vertices()[id]);
            Word w{std::move(letters)};
            // double-entry bookkeeping: never trust the search state
            if (uniformity(w) != std::optional<int>(k_) || !represents(w, g_).represents)
                throw std::logic_error("oracle: witness failed independent re-check");
            res.outcome = SearchOutcome::Found;
            res.witness = std::move(w);
        } else {
            res.outcome = exceeded ? SearchOutcome::BudgetExceeded
                                   : SearchOutcome::ExhaustedNoWitness;
        }
        return res;
    }

private:
    PairState& state(int x, int y) { return pair_[std::min(x, y) * v_ + std::max(x, y)]; }

    bool budget_ok() {
        if (budget_.node_limit && nodes_ > *budget_.node_limit) return false;
        if (deadline_ && (nodes_ & 1023) == 0 && Clock::now() > *deadline_) return false;
        return true;
    }

    // Places x, recurses; returns false iff the budget ran out below.
    bool try_letter(int x) {
        if (counts_[x] == k_) return true;
        ++nodes_;
        if (!budget_ok()) return false;

        // A placed letter must keep every adjacent pair alternating, and must
        // leave every non-adjacent alternating pair able to double up later.
        std::vector<int> flipped;
        for (int y = 0; y < v_; ++y) {
            if (y == x) continue;
            PairState& st = state(x, y);
            if (!st.alternating) continue;
            if (st.last == x) {
                if (g_.adjacent_at(x, y)) { undo(x, flipped); return true; }
                st.alternating = false;
                flipped.push_back(y);
            } else {
                st.last = static_cast<std::int8_t>(x);
            }
        }
        ++counts_[x];
        word_.push_back(x);

        bool viable = true;
        for (int y = 0; y < v_ && viable; ++y) {
            if (y == x || g_.adjacent_at(x, y)) continue;
            const PairState& st = state(x, y);
            if (!st.alternating) continue;
            int rem_x = k_ - counts_[x], rem_y = k_ - counts_[y];
            if (rem_x + rem_y == 0)
                viable = false;
            else if (rem_x + rem_y == 1 && st.last != (rem_x == 1 ? x : y))
                viable = false;
        }

        bool ok = true;
        if (viable) {
            if (word_.size() == static_cast<std::size_t>(v_) * k_) {
                found_ = true;
            } else {
                for (int y = 0; y < v_ && !found_ && ok; ++y) ok = try_letter(y);
            }
        }

        if (!found_) {
            word_.pop_back();
            --counts_[x];
            undo(x, flipped);
        }
        return ok;
    }

    void undo(int x, const std::vector<int>& flipped) {
        for (int y : flipped) state(x, y).alternating = true;
        for (int y = 0; y < v_; ++y) {
            if (y == x) continue;
            PairState& st = state(x, y);
            if (st.alternating && st.last == x) restore_last(x, y);
        }
    }

    // Recomputes `last` for the pair after popping x; scans the prefix.
    void restore_last(int x, int y) {
        PairState& st = state(x, y);
        st.last = -1;
        for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
            if (*it == x || *it == y) {
                st.last = static_cast<std::int8_t>(*it);
                return;
            }
        }
    }

    const SimpleGraph& g_;
    int k_;
    const SearchBudget& budget_;
    int v_;
    std::vector<int> counts_;
    std::vector<PairState> pair_;
    std::vector<int> word_;
    std::optional<Clock::time_point> deadline_;
    std::uint64_t nodes_ = 0;
    bool found_ = false;
};

}  // namespace

LevelResult exists_k_uniform_representant(const SimpleGraph& g, int k, const SearchBudget& budget) {
    if (k < 1) throw std::invalid_argument("oracle: k >= 1 required");
    if (g.size() == 0) throw std::invalid_argument("oracle: empty graph");
    if (g.size() > 8 && !budget.override_size_guard)
        throw std::invalid_argument("oracle: more than 8 vertices (override the guard to force)");
    return Searcher(g, k, budget).run();
}

OracleResult min_representation_number(const SimpleGraph& g, const SearchBudget& budget) {
    OracleResult out;
    out.exhausted = true;
    for (int k = 1; k <= budget.k_max; ++k) {
        LevelResult level = exists_k_uniform_representant(g, k, budget);
        out.nodes += level.nodes;
        if (level.outcome == SearchOutcome::Found) {
            out.min_k = k;
            out.witness = std::move(level.witness);
            return out;
        }
        if (level.outcome == SearchOutcome::BudgetExceeded) out.exhausted = false;
    }
    return out;
}

}  // namespace wordrep
