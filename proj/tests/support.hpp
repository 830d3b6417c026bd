/* support.hpp -- shared test fixtures and brute-force oracles
 *
 * The oracles here expand everything explicitly: assignments are evaluated
 * set-theoretically, the level-i automata of the subset-construction
 * hierarchy are materialized state by state, and term denotations are
 * enumerated as id sets.  They stay independent of the symbolic engine
 * they are used to check.
 */

#ifndef WS1S_TESTS_SUPPORT_HPP
#define WS1S_TESTS_SUPPORT_HPP

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>
#include <set>
#include <vector>

#include "ws1s/engine.hpp"
#include "ws1s/nfa.hpp"
#include "ws1s/term.hpp"

namespace ws1s::test {

// ---------------------------------------------------------------------------
// assignments and encodings
// ---------------------------------------------------------------------------

/// One finite subset of the naturals per track.
using Assignment = std::vector<std::set<unsigned>>;

inline std::vector<Symbol> encode_shortest(const Assignment& rho, const VarTable& table) {
    int max_elem = -1;
    for (const auto& s : rho)
        if (!s.empty()) max_elem = std::max(max_elem, static_cast<int>(*s.rbegin()));
    std::vector<Symbol> word;
    for (int pos = 0; pos <= max_elem; ++pos) {
        Symbol sym{table.all_mask(), 0};
        for (std::size_t t = 0; t < rho.size(); ++t)
            if (rho[t].count(static_cast<unsigned>(pos))) sym.value |= TrackMask{1} << t;
        word.push_back(sym);
    }
    return word;
}

/// Set-theoretic truth of an atom under an assignment.
inline bool atom_truth(const Formula& atom, const Assignment& rho, const VarTable& table) {
    auto val = [&](const std::string& v) { return rho[table.index_of(v)]; };
    switch (atom.kind) {
        case FormulaKind::Sub: {
            const auto &x = val(atom.vars[0]), &y = val(atom.vars[1]);
            return std::includes(y.begin(), y.end(), x.begin(), x.end());
        }
        case FormulaKind::Sing:
            return val(atom.vars[0]).size() == 1;
        case FormulaKind::Zeroth:
            return val(atom.vars[0]) == std::set<unsigned>{0};
        case FormulaKind::Succ: {
            const auto &x = val(atom.vars[0]), &y = val(atom.vars[1]);
            return x.size() == 1 && y.size() == 1 && *x.begin() == *y.begin() + 1;
        }
        default:
            throw std::invalid_argument("atom_truth: not an atom");
    }
}

/// All assignments of `tracks` variables over subsets of {0..bound}.
template <typename Fn>
void for_each_assignment(std::size_t tracks, unsigned bound, Fn&& fn) {
    std::vector<std::set<unsigned>> rho(tracks);
    std::vector<unsigned> choice(tracks, 0);
    unsigned per_var = 1u << (bound + 1);
    while (true) {
        for (std::size_t t = 0; t < tracks; ++t) {
            rho[t].clear();
            for (unsigned e = 0; e <= bound; ++e)
                if (choice[t] & (1u << e)) rho[t].insert(e);
        }
        fn(const_cast<const Assignment&>(rho));
        std::size_t t = 0;
        for (; t < tracks; ++t) {
            if (++choice[t] < per_var) break;
            choice[t] = 0;
        }
        if (t == tracks) break;
    }
}

/// All words of total symbols up to the given length.
template <typename Fn>
void for_each_word(const VarTable& table, std::size_t max_len, Fn&& fn) {
    std::vector<Symbol> sigma = alphabet(table);
    std::vector<std::size_t> idx;
    std::vector<Symbol> word;
    auto rec = [&](auto&& self) -> void {
        fn(const_cast<const std::vector<Symbol>&>(word));
        if (word.size() == max_len) return;
        for (const Symbol& s : sigma) {
            word.push_back(s);
            self(self);
            word.pop_back();
        }
    };
    rec(rec);
}

// ---------------------------------------------------------------------------
// random automata and terms
// ---------------------------------------------------------------------------

inline Nfa random_nfa(std::mt19937_64& rng, State max_states, const VarTable& table,
                      double density = 0.25) {
    std::uniform_int_distribution<State> nd(1, max_states);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    State n = nd(rng);
    Nfa a = Nfa::empty(table, n);
    for (const Symbol& s : alphabet(table))
        for (State p = 0; p < n; ++p)
            for (State q = 0; q < n; ++q)
                if (coin(rng) < density) a.transitions.push_back({p, s, q});
    for (State q = 0; q < n; ++q) {
        if (coin(rng) < 0.5) a.initial.set(q);
        if (coin(rng) < 0.5) a.final.set(q);
    }
    if (a.initial.none()) a.initial.set(0);
    return a;
}

inline StateSet random_state_set(std::mt19937_64& rng, State universe) {
    StateSet s(universe);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (State q = 0; q < universe; ++q)
        if (coin(rng) < 0.5) s.set(q);
    return s;
}

inline TermRef random_term(TermPool& pool, std::mt19937_64& rng, unsigned level, State q0) {
    if (level == 0) return pool.base(random_state_set(rng, q0));
    std::uniform_int_distribution<int> kd(1, 3);
    int kids = kd(rng);
    std::vector<TermRef> children;
    for (int i = 0; i < kids; ++i) children.push_back(random_term(pool, rng, level - 1, q0));
    return level % 2 == 1 ? pool.up(std::move(children)) : pool.down(std::move(children));
}

// ---------------------------------------------------------------------------
// explicit level hierarchy (subset-construction oracle)
// ---------------------------------------------------------------------------

/// Materializes the level automata over a small base automaton: level-k
/// states are ids whose bits index level-(k-1) ids (level-0 ids are the
/// base states).  Everything is enumerated, nothing is symbolic.
class LevelOracle {
public:
    LevelOracle(const Nfa& base, std::vector<TrackMask> blocks, unsigned max_level)
        : base_(base), blocks_(std::move(blocks)) {
        usize_.push_back(base_.num_states);
        for (unsigned k = 1; k <= max_level; ++k) {
            if (usize_.back() > 16)
                throw ResourceLimitError("LevelOracle: universe too large");
            usize_.push_back(std::size_t{1} << usize_.back());
        }
    }

    std::size_t universe_size(unsigned level) const { return usize_.at(level); }

    TrackMask table_care(unsigned level) const {
        TrackMask care = base_.vars.all_mask();
        for (unsigned i = 0; i < level && i < blocks_.size(); ++i) care &= ~blocks_[i];
        return care;
    }

    /// Successor of a level-k id in the deterministic Delta_k, k >= 1
    /// (tau ranges over the level-k table).
    std::uint32_t det_post(unsigned k, std::uint32_t id, const Symbol& tau) {
        std::uint64_t key = memo_key(k, id, tau);
        auto it = det_memo_.find(key);
        if (it != det_memo_.end()) return it->second;
        std::uint32_t out = 0;
        for (std::uint32_t bit = 0; bit < usize_[k - 1]; ++bit)
            if (id & (std::uint32_t{1} << bit))
                for (std::uint32_t succ : post_sharp(k - 1, bit, tau)) out |= std::uint32_t{1} << succ;
        det_memo_.emplace(key, out);
        return out;
    }

    /// tau-successors of a level-k id under the projected Delta_k#
    /// (sigma ranges over the level-(k+1) table).
    std::vector<std::uint32_t> post_sharp(unsigned k, std::uint32_t id, const Symbol& sigma) {
        std::uint64_t key = memo_key(k, id, sigma);
        auto it = sharp_memo_.find(key);
        if (it != sharp_memo_.end()) return it->second;
        std::vector<std::uint32_t> result;
        if (k == 0) {
            for (const auto& tr : base_.transitions)
                if (tr.src == id && tr.sym.compatible(sigma)) result.push_back(tr.dst);
            std::sort(result.begin(), result.end());
            result.erase(std::unique(result.begin(), result.end()), result.end());
        } else {
            TrackMask block = k < blocks_.size() ? blocks_[k] : 0;
            std::set<std::uint32_t> out;
            BlockValues(block).for_each([&](TrackMask v) {
                out.insert(det_post(k, id, Symbol{sigma.care | block, sigma.value | v}));
            });
            result.assign(out.begin(), out.end());
        }
        sharp_memo_.emplace(key, result);
        return result;
    }

    using IdSet = std::vector<char>;  // indicator over universe_size(level)

    IdSet empty_set(unsigned level) const { return IdSet(usize_.at(level), 0); }

    IdSet pre_sharp(unsigned k, const IdSet& s, const Symbol& sigma) {
        IdSet out = empty_set(k);
        for (std::uint32_t id = 0; id < usize_[k]; ++id)
            for (std::uint32_t succ : post_sharp(k, id, sigma))
                if (s[succ]) {
                    out[id] = 1;
                    break;
                }
        return out;
    }

    IdSet cpre_sharp(unsigned k, const IdSet& s, const Symbol& sigma) {
        IdSet out = empty_set(k);
        for (std::uint32_t id = 0; id < usize_[k]; ++id) {
            bool all = true;
            for (std::uint32_t succ : post_sharp(k, id, sigma))
                if (!s[succ]) {
                    all = false;
                    break;
                }
            out[id] = all ? 1 : 0;
        }
        return out;
    }

    /// pre (= cpre) image under the unprojected deterministic Delta_k.
    IdSet pre_det(unsigned k, const IdSet& s, const Symbol& tau) {
        IdSet out = empty_set(k);
        for (std::uint32_t id = 0; id < usize_[k]; ++id)
            if (s[det_post(k, id, tau)]) out[id] = 1;
        return out;
    }

    /// Explicit denotation of a term as an id set at the term's level.
    IdSet denote_ids(TermRef t) {
        IdSet out = empty_set(t->level);
        if (t->kind == TermKind::Base) {
            t->base.for_each([&](State q) { out[q] = 1; });
            return out;
        }
        std::vector<IdSet> kids;
        for (TermRef c : t->children) kids.push_back(denote_ids(c));
        std::size_t lower = usize_[t->level - 1];
        auto meets = [&](std::uint32_t id, const IdSet& k) {
            for (std::uint32_t bit = 0; bit < lower; ++bit)
                if ((id & (std::uint32_t{1} << bit)) && k[bit]) return true;
            return false;
        };
        auto inside = [&](std::uint32_t id, const IdSet& k) {
            for (std::uint32_t bit = 0; bit < lower; ++bit)
                if ((id & (std::uint32_t{1} << bit)) && !k[bit]) return false;
            return true;
        };
        for (std::uint32_t id = 0; id < usize_[t->level]; ++id) {
            bool ok;
            if (t->kind == TermKind::Up)
                ok = std::all_of(kids.begin(), kids.end(),
                                 [&](const IdSet& k) { return meets(id, k); });
            else
                ok = std::any_of(kids.begin(), kids.end(),
                                 [&](const IdSet& k) { return inside(id, k); });
            out[id] = ok ? 1 : 0;
        }
        return out;
    }

private:
    // symbols here use at most a handful of low tracks
    static std::uint64_t memo_key(unsigned k, std::uint32_t id, const Symbol& s) {
        return std::uint64_t{k} | (std::uint64_t{id} << 3) | (s.care << 40) | (s.value << 52);
    }

    const Nfa& base_;
    std::vector<TrackMask> blocks_;
    std::vector<std::size_t> usize_;
    std::unordered_map<std::uint64_t, std::uint32_t> det_memo_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> sharp_memo_;
};

}  // namespace ws1s::test

#endif
