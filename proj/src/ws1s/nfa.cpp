/* nfa.cpp -- automata operations and the classical decision procedure */

#include "ws1s/nfa.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <set>
#include <tuple>
#include <unordered_map>

namespace ws1s {

// ---------------------------------------------------------------------------
// StateSet
// ---------------------------------------------------------------------------

StateSet StateSet::full(State universe) {
    StateSet s(universe);
    for (State i = 0; i < universe; ++i) s.set(i);
    return s;
}

bool StateSet::none() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::size_t StateSet::count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
}

bool StateSet::intersects(const StateSet& other) const {
    std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

bool StateSet::subset_of(const StateSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
        if (words_[i] & ~theirs) return false;
    }
    return true;
}

StateSet& StateSet::operator|=(const StateSet& other) {
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

StateSet& StateSet::operator&=(const StateSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
    return *this;
}

std::vector<State> StateSet::to_vector() const {
    std::vector<State> out;
    for_each([&](State s) { out.push_back(s); });
    return out;
}

bool StateSet::lex_less(const StateSet& other) const {
    std::vector<State> a = to_vector(), b = other.to_vector();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t StateSet::hash() const {
    std::size_t h = 0x811c9dc5;
    for (auto w : words_) h = (h ^ std::hash<std::uint64_t>()(w)) * 0x01000193ull;
    return h;
}

Nfa Nfa::empty(VarTable vars, State num_states) {
    Nfa a;
    a.vars = std::move(vars);
    a.num_states = num_states;
    a.initial = StateSet(num_states);
    a.final = StateSet(num_states);
    return a;
}

// ---------------------------------------------------------------------------
// images
// ---------------------------------------------------------------------------

StateSet post(const std::vector<Transition>& delta, const Symbol& t, const StateSet& s,
              State universe) {
    StateSet out(universe);
    for (const auto& tr : delta)
        if (s.test(tr.src) && tr.sym.compatible(t)) out.set(tr.dst);
    return out;
}

StateSet pre(const std::vector<Transition>& delta, const Symbol& t, const StateSet& s,
             State universe) {
    StateSet out(universe);
    for (const auto& tr : delta)
        if (s.test(tr.dst) && tr.sym.compatible(t)) out.set(tr.src);
    return out;
}

StateSet cpre(const std::vector<Transition>& delta, const Symbol& t, const StateSet& s,
              State universe) {
    StateSet out = StateSet::full(universe);
    for (const auto& tr : delta)
        if (tr.sym.compatible(t) && !s.test(tr.dst)) out.reset(tr.src);
    return out;
}

// ---------------------------------------------------------------------------
// atomic automata
// ---------------------------------------------------------------------------

Nfa atomic_automaton(const Formula& atom) {
    VarTable table;
    for (const auto& v : atom.vars)
        if (!table.contains(v)) table.add(v);

    auto sym = [&](std::initializer_list<std::pair<const char*, int>> bits) {
        Symbol s;
        for (auto& [name, val] : bits) {
            TrackMask bit = TrackMask{1} << table.index_of(name);
            if (val < 0) continue;  // don't care
            s.care |= bit;
            if (val) s.value |= bit;
        }
        return s;
    };

    switch (atom.kind) {
        case FormulaKind::Sub: {
            const std::string& x = atom.vars[0];
            const std::string& y = atom.vars[1];
            Nfa a = Nfa::empty(table, 1);
            a.initial.set(0);
            a.final.set(0);
            if (x == y) {
                a.transitions.push_back({0, Symbol{}, 0});  // every symbol
            } else {
                a.transitions.push_back({0, sym({{x.c_str(), 0}}), 0});
                a.transitions.push_back({0, sym({{x.c_str(), 1}, {y.c_str(), 1}}), 0});
            }
            return a;
        }
        case FormulaKind::Sing: {
            const char* x = atom.vars[0].c_str();
            Nfa a = Nfa::empty(table, 2);
            a.initial.set(0);
            a.final.set(1);
            a.transitions.push_back({0, sym({{x, 0}}), 0});
            a.transitions.push_back({0, sym({{x, 1}}), 1});
            a.transitions.push_back({1, sym({{x, 0}}), 1});
            return a;
        }
        case FormulaKind::Zeroth: {
            const char* x = atom.vars[0].c_str();
            Nfa a = Nfa::empty(table, 2);
            a.initial.set(0);
            a.final.set(1);
            a.transitions.push_back({0, sym({{x, 1}}), 1});
            a.transitions.push_back({1, sym({{x, 0}}), 1});
            return a;
        }
        case FormulaKind::Succ: {
            const std::string& x = atom.vars[0];
            const std::string& y = atom.vars[1];
            if (x == y) {
                Nfa a = Nfa::empty(table, 1);  // X = X + 1 has no model
                a.initial.set(0);
                return a;
            }
            Nfa a = Nfa::empty(table, 3);
            a.initial.set(0);
            a.final.set(2);
            a.transitions.push_back({0, sym({{x.c_str(), 0}, {y.c_str(), 0}}), 0});
            a.transitions.push_back({0, sym({{x.c_str(), 0}, {y.c_str(), 1}}), 1});
            a.transitions.push_back({1, sym({{x.c_str(), 1}, {y.c_str(), 0}}), 2});
            a.transitions.push_back({2, sym({{x.c_str(), 0}, {y.c_str(), 0}}), 2});
            return a;
        }
        default:
            throw std::invalid_argument("atomic_automaton: not an atom");
    }
}

// ---------------------------------------------------------------------------
// boolean combinations
// ---------------------------------------------------------------------------

Nfa cylindrify(const Nfa& a, const VarTable& target) {
    for (const auto& v : a.vars.names())
        if (!target.contains(v)) throw std::invalid_argument("cylindrify: target table misses " + v);
    Nfa out = Nfa::empty(target, a.num_states);
    out.initial = a.initial;
    out.final = a.final;
    out.transitions.reserve(a.transitions.size());
    for (const auto& tr : a.transitions)
        out.transitions.push_back({tr.src, expand_symbol(tr.sym, a.vars, target), tr.dst});
    return out;
}

namespace {

std::vector<std::vector<std::pair<Symbol, State>>> group_by_src(const Nfa& a) {
    std::vector<std::vector<std::pair<Symbol, State>>> from(a.num_states);
    for (const auto& tr : a.transitions) from[tr.src].push_back({tr.sym, tr.dst});
    return from;
}

}  // namespace

Nfa product(const Nfa& a, const Nfa& b, ProductMode mode, const Limits& limits) {
    if (!(a.vars == b.vars)) throw std::invalid_argument("product: differing variable tables");

    if (mode == ProductMode::Or) {
        // disjoint sum
        Nfa out = Nfa::empty(a.vars, a.num_states + b.num_states);
        a.initial.for_each([&](State s) { out.initial.set(s); });
        a.final.for_each([&](State s) { out.final.set(s); });
        b.initial.for_each([&](State s) { out.initial.set(a.num_states + s); });
        b.final.for_each([&](State s) { out.final.set(a.num_states + s); });
        out.transitions = a.transitions;
        for (const auto& tr : b.transitions)
            out.transitions.push_back({tr.src + a.num_states, tr.sym, tr.dst + a.num_states});
        return trim(out);
    }

    auto from_a = group_by_src(a);
    auto from_b = group_by_src(b);
    std::unordered_map<std::uint64_t, State> ids;
    std::deque<std::pair<State, State>> worklist;
    std::vector<std::pair<State, State>> pairs;
    auto intern = [&](State p, State q) {
        std::uint64_t key = (std::uint64_t{p} << 32) | q;
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        if (pairs.size() >= limits.state_budget)
            throw ResourceLimitError("product: state budget exceeded");
        State id = static_cast<State>(pairs.size());
        ids.emplace(key, id);
        pairs.push_back({p, q});
        worklist.push_back({p, q});
        return id;
    };

    std::vector<State> ini_a = a.initial.to_vector(), ini_b = b.initial.to_vector();
    for (State p : ini_a)
        for (State q : ini_b) intern(p, q);

    std::vector<Transition> trans;
    while (!worklist.empty()) {
        auto [p, q] = worklist.front();
        worklist.pop_front();
        State src = ids[(std::uint64_t{p} << 32) | q];
        for (const auto& [s1, d1] : from_a[p]) {
            for (const auto& [s2, d2] : from_b[q]) {
                if (!s1.compatible(s2)) continue;
                Symbol merged{s1.care | s2.care, s1.value | s2.value};
                trans.push_back({src, merged, intern(d1, d2)});
            }
        }
    }

    Nfa out = Nfa::empty(a.vars, static_cast<State>(pairs.size()));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [p, q] = pairs[i];
        if (a.initial.test(p) && b.initial.test(q)) out.initial.set(static_cast<State>(i));
        if (a.final.test(p) && b.final.test(q)) out.final.set(static_cast<State>(i));
    }
    out.transitions = std::move(trans);
    return trim(out);
}

// ---------------------------------------------------------------------------
// complement (subset construction)
// ---------------------------------------------------------------------------

std::vector<Symbol> alphabet(const VarTable& vars) {
    if (vars.size() > 20) throw ResourceLimitError("alphabet: too many tracks to enumerate");
    std::vector<Symbol> out;
    TrackMask all = vars.all_mask();
    BlockValues(all).for_each([&](TrackMask v) { out.push_back(Symbol{all, v}); });
    return out;
}

Nfa complement(const Nfa& a, const Limits& limits) {
    std::vector<Symbol> sigma = alphabet(a.vars);
    auto from = group_by_src(a);

    std::unordered_map<StateSet, State, StateSetHash> ids;
    std::deque<StateSet> worklist;
    std::vector<StateSet> subsets;
    auto intern = [&](const StateSet& s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        if (subsets.size() >= limits.state_budget)
            throw ResourceLimitError("complement: state budget exceeded");
        State id = static_cast<State>(subsets.size());
        ids.emplace(s, id);
        subsets.push_back(s);
        worklist.push_back(s);
        return id;
    };

    intern(a.initial);
    std::vector<Transition> trans;
    while (!worklist.empty()) {
        StateSet cur = worklist.front();
        worklist.pop_front();
        State src = ids[cur];
        for (const Symbol& tau : sigma) {
            StateSet nxt(a.num_states);
            cur.for_each([&](State s) {
                for (const auto& [sym, dst] : from[s])
                    if (sym.compatible(tau)) nxt.set(dst);
            });
            trans.push_back({src, tau, intern(nxt)});
        }
    }

    Nfa out = Nfa::empty(a.vars, static_cast<State>(subsets.size()));
    out.initial.set(0);
    for (std::size_t i = 0; i < subsets.size(); ++i)
        if (!subsets[i].intersects(a.final)) out.final.set(static_cast<State>(i));
    out.transitions = std::move(trans);
    return out;
}

// ---------------------------------------------------------------------------
// existential projection
// ---------------------------------------------------------------------------

Nfa project_exists(const Nfa& a, const std::vector<std::string>& block) {
    TrackMask mask = a.vars.mask_of(block);  // throws if block not in table
    Nfa out = Nfa::empty(a.vars.without(mask), a.num_states);
    out.initial = a.initial;
    out.final = a.final;

    std::set<std::tuple<std::uint64_t, TrackMask, TrackMask>> seen;
    for (const auto& tr : a.transitions) {
        Symbol s = project_symbol(tr.sym, mask);
        std::uint64_t ends = (std::uint64_t{tr.src} << 32) | tr.dst;
        if (!seen.insert({ends, s.care, s.value}).second) continue;
        out.transitions.push_back({tr.src, s, tr.dst});
    }

    // final-state extension: states backward-reachable from F over the zero
    // symbol of the reduced table
    Symbol zero = zero_symbol(out.vars);
    while (true) {
        StateSet grown = out.final;
        grown |= pre(out.transitions, zero, out.final, out.num_states);
        if (grown == out.final) break;
        out.final = grown;
    }
    return out;
}

// ---------------------------------------------------------------------------
// runs, trimming, dump
// ---------------------------------------------------------------------------

bool accepts(const Nfa& a, std::span<const Symbol> word) {
    StateSet cur = a.initial;
    for (const Symbol& tau : word) {
        cur = post(a.transitions, tau, cur, a.num_states);
        if (cur.none()) return false;
    }
    return cur.intersects(a.final);
}

Nfa trim(const Nfa& a) {
    // forward reachability
    StateSet reach = a.initial;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& tr : a.transitions)
            if (reach.test(tr.src) && !reach.test(tr.dst)) {
                reach.set(tr.dst);
                changed = true;
            }
    }
    // backward from final
    StateSet live = a.final;
    changed = true;
    while (changed) {
        changed = false;
        for (const auto& tr : a.transitions)
            if (live.test(tr.dst) && !live.test(tr.src)) {
                live.set(tr.src);
                changed = true;
            }
    }
    StateSet keep = reach;
    keep &= live;

    std::vector<State> remap(a.num_states, UINT32_MAX);
    State next = 0;
    for (State s = 0; s < a.num_states; ++s)
        if (keep.test(s)) remap[s] = next++;

    Nfa out = Nfa::empty(a.vars, next);
    a.initial.for_each([&](State s) {
        if (keep.test(s)) out.initial.set(remap[s]);
    });
    a.final.for_each([&](State s) {
        if (keep.test(s)) out.final.set(remap[s]);
    });
    for (const auto& tr : a.transitions)
        if (keep.test(tr.src) && keep.test(tr.dst))
            out.transitions.push_back({remap[tr.src], tr.sym, remap[tr.dst]});
    return out;
}

std::string dump(const Nfa& a) {
    std::ostringstream os;
    os << "STATES " << a.num_states << "\n";
    os << "INITIAL";
    a.initial.for_each([&](State s) { os << " " << s; });
    os << "\nFINAL";
    a.final.for_each([&](State s) { os << " " << s; });
    os << "\n";
    for (const auto& tr : a.transitions)
        os << "TRANS " << tr.src << " " << render_symbol(tr.sym, a.vars) << " " << tr.dst << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// matrix compilation and the classical procedure
// ---------------------------------------------------------------------------

namespace {

void collect_atom_vars(const Formula& f, VarTable& table) {
    if (f.is_atom()) {
        for (const auto& v : f.vars)
            if (!table.contains(v)) table.add(v);
        return;
    }
    for (const auto& c : f.children) collect_atom_vars(*c, table);
}

}  // namespace

VarTable formula_table(const PrenexFormula& g) {
    VarTable table;
    for (const auto& b : g.prefix)
        for (const auto& v : b.vars)
            if (!table.contains(v)) table.add(v);
    collect_atom_vars(*g.matrix, table);
    return table;
}

Nfa compile_matrix(const Formula& matrix, const VarTable& table, const Limits& limits) {
    switch (matrix.kind) {
        case FormulaKind::And:
        case FormulaKind::Or: {
            Nfa l = compile_matrix(*matrix.children[0], table, limits);
            Nfa r = compile_matrix(*matrix.children[1], table, limits);
            ProductMode mode =
                matrix.kind == FormulaKind::And ? ProductMode::And : ProductMode::Or;
            return product(l, r, mode, limits);
        }
        case FormulaKind::Not: {
            const Formula& inner = *matrix.children[0];
            if (!inner.is_atom())
                throw std::invalid_argument("compile_matrix: negation above a non-atom");
            // complement over the atom's small table, then widen
            Nfa neg = complement(atomic_automaton(inner), limits);
            return cylindrify(trim(neg), table);
        }
        case FormulaKind::Exists:
        case FormulaKind::Forall:
            throw std::invalid_argument("compile_matrix: quantifier inside matrix");
        default:
            return cylindrify(atomic_automaton(matrix), table);
    }
}

ClassicalResult decide_classical(const PrenexFormula& g, const Limits& limits) {
    std::vector<std::string> free = free_variables(*prenex_to_formula(g));
    if (!free.empty())
        throw std::invalid_argument("decide_classical: formula is not ground (free: " + free[0] + ")");

    ClassicalResult res;
    auto record = [&](const Nfa& a) {
        res.total_states += a.num_states;
        res.automata += 1;
    };

    Nfa cur = trim(compile_matrix(*g.matrix, formula_table(g), limits));
    record(cur);

    for (auto it = g.prefix.rbegin(); it != g.prefix.rend(); ++it) {
        if (it->universal) {
            cur = complement(cur, limits);
            record(cur);
            cur = trim(cur);
        }
        cur = project_exists(cur, it->vars);
        record(cur);
        cur = trim(cur);
        if (it->universal) {
            cur = complement(cur, limits);
            record(cur);
            cur = trim(cur);
        }
    }

    res.valid = cur.initial.intersects(cur.final);
    return res;
}

}  // namespace ws1s
