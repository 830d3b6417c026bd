/* nfa.hpp -- nondeterministic finite automata over variable-set alphabets
 *
 * Houses the automaton type, the images post/pre/cpre, the atomic automata
 * for the four WS1S atoms, boolean combinations, subset-construction
 * complement, existential projection with the final-state extension, and
 * the classical decision procedure used as the oracle.
 */

#ifndef WS1S_NFA_HPP
#define WS1S_NFA_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ws1s/formula.hpp"
#include "ws1s/symbols.hpp"

namespace ws1s {

using State = std::uint32_t;

/// Fixed-universe bitset keyed by dense state ids.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(State universe) : size_(universe), words_((universe + 63) / 64, 0) {}

    static StateSet full(State universe);

    State universe() const { return size_; }
    void set(State s) { words_[s >> 6] |= std::uint64_t{1} << (s & 63); }
    void reset(State s) { words_[s >> 6] &= ~(std::uint64_t{1} << (s & 63)); }
    bool test(State s) const { return (words_[s >> 6] >> (s & 63)) & 1; }

    bool none() const;
    std::size_t count() const;
    bool intersects(const StateSet& other) const;
    bool subset_of(const StateSet& other) const;

    StateSet& operator|=(const StateSet& other);
    StateSet& operator&=(const StateSet& other);

    bool operator==(const StateSet& other) const { return words_ == other.words_; }

    std::vector<State> to_vector() const;

    /// Order by the ascending member sequence ({0,2} < {1}, {0} < {0,1}).
    bool lex_less(const StateSet& other) const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                fn(static_cast<State>((w << 6) + __builtin_ctzll(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::size_t hash() const;

private:
    State size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

struct Transition {
    State src;
    Symbol sym;
    State dst;
};

/// FA over a variable table: (Q, Delta, I, F).  Transition symbols may use
/// don't-care tracks; such a transition stands for one transition per
/// covered total symbol.
struct Nfa {
    VarTable vars;
    State num_states = 0;
    StateSet initial;
    StateSet final;
    std::vector<Transition> transitions;

    static Nfa empty(VarTable vars, State num_states);
};

struct Limits {
    std::uint64_t state_budget = 1'000'000;
};

// Images under a transition set and a (possibly partial) symbol; a partial
// symbol stands for the set of its concretizations, so post/pre take the
// union over the set while cpre requires all successors for every covered
// symbol to stay inside the target.
StateSet post(const std::vector<Transition>& delta, const Symbol& t, const StateSet& s,
              State universe);
StateSet pre(const std::vector<Transition>& delta, const Symbol& t, const StateSet& s,
             State universe);
StateSet cpre(const std::vector<Transition>& delta, const Symbol& t, const StateSet& s,
              State universe);

/// Automaton for one of the four atoms, over the atom's own variable table.
Nfa atomic_automaton(const Formula& atom);

/// Same state structure over the larger table; new tracks are don't-care.
Nfa cylindrify(const Nfa& a, const VarTable& target);

enum class ProductMode { And, Or };

/// Intersection (reachable pair construction) or union (disjoint sum) of
/// two automata over the same table.
Nfa product(const Nfa& a, const Nfa& b, ProductMode mode, const Limits& limits = {});

/// Subset-construction complement; only reachable subset states are built.
Nfa complement(const Nfa& a, const Limits& limits = {});

/// Removes the block tracks from the transition relation and extends the
/// final states by the zero-symbol backward-reachability fixpoint.
Nfa project_exists(const Nfa& a, const std::vector<std::string>& block);

/// True iff some accepting run over the word exists (symbols total over a.vars).
bool accepts(const Nfa& a, std::span<const Symbol> word);

/// Restriction to states reachable from I and co-reachable to F.
Nfa trim(const Nfa& a);

/// All total symbols over the table, ascending by value.
std::vector<Symbol> alphabet(const VarTable& vars);

/// Line-based dump: STATES / INITIAL / FINAL / TRANS with rendered symbols.
std::string dump(const Nfa& a);

/// Variable table of a prenex formula: prefix blocks outermost-first, then
/// matrix atoms, each in first-occurrence order.
VarTable formula_table(const PrenexFormula& g);

/// Bottom-up automaton for a quantifier-free NNF matrix over `table`;
/// negated atoms are compiled via complement of the atomic automaton.
Nfa compile_matrix(const Formula& matrix, const VarTable& table, const Limits& limits = {});

struct ClassicalResult {
    bool valid = false;
    std::uint64_t total_states = 0;  // states of all sequence automata, as built
    std::uint64_t automata = 0;
};

/// The classical decision procedure: builds the matrix automaton, then
/// alternates projection and complementation along the prefix; the verdict
/// is epsilon-acceptance of the last automaton.
ClassicalResult decide_classical(const PrenexFormula& g, const Limits& limits = {});

}  // namespace ws1s

#endif
