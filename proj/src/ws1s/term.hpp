/* term.hpp -- nested symbolic terms for sets of iterated-subset states
 *
 * A term of level 0 is a set of base-automaton states; a term of odd level
 * 2j+1 is an up-choice node over level-2j terms (all sets intersecting every
 * generator); a term of even level 2j > 0 is a down node over level-(2j-1)
 * terms (all subsets of some generator).  Terms are hash-consed and pruned
 * to antichains at construction.
 */

#ifndef WS1S_TERM_HPP
#define WS1S_TERM_HPP

#include <cstdint>
#include <deque>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ws1s/nfa.hpp"

namespace ws1s {

enum class TermKind : std::uint8_t {
    Base,  // level 0
    Up,    // odd level, the up-closed choice constructor
    Down,  // even level > 0, the down-closure constructor
};

class Term;
using TermRef = const Term*;

class Term {
public:
    TermKind kind;
    std::uint16_t level;
    StateSet base;                  // Base only
    std::vector<TermRef> children;  // canonical order, antichain
    std::uint32_t id;               // creation index within the pool

private:
    friend class TermPool;
    Term() = default;
};

/// Structural total order used for canonical child ordering and rendering.
bool term_less(TermRef a, TermRef b);

/// Interning pool.  All terms of one decision live in one pool; pointers
/// stay valid for the pool's lifetime and equality is pointer equality.
class TermPool {
public:
    explicit TermPool(std::uint64_t node_budget = 1'000'000) : budget_(node_budget) {}

    TermRef base(StateSet s);
    /// Up node over even-level children (deduplicated, pruned to the
    /// minimal generators).
    TermRef up(std::vector<TermRef> children);
    /// Down node over odd-level children (pruned to the maximal generators).
    TermRef down(std::vector<TermRef> children);

    /// Denotation inclusion denote(a) <= denote(b); levels must agree.
    bool subsumes(TermRef a, TermRef b);

    /// Subsumption pruning of a same-level sibling set; keep_minimal selects
    /// the up-node rule, otherwise the down-node rule applies.
    std::vector<TermRef> prune_siblings(std::vector<TermRef> children, bool keep_minimal) {
        return prune(std::move(children), keep_minimal);
    }

    std::uint64_t node_count() const { return nodes_.size(); }

private:
    TermRef intern(Term&& t);
    std::vector<TermRef> prune(std::vector<TermRef> children, bool keep_minimal);

    struct Key {
        TermKind kind;
        StateSet base;
        std::vector<TermRef> children;
        bool operator==(const Key& other) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };
    struct PairHash {
        std::size_t operator()(const std::pair<TermRef, TermRef>& p) const {
            return std::hash<const void*>()(p.first) * 31 ^ std::hash<const void*>()(p.second);
        }
    };

    std::uint64_t budget_;
    std::deque<Term> nodes_;
    std::unordered_map<Key, TermRef, KeyHash> interned_;
    std::unordered_map<std::pair<TermRef, TermRef>, bool, PairHash> subsume_memo_;
};

/// Standalone subsumption pruning of a sibling set (the up/down factories
/// apply it themselves); keep_minimal selects the up-node rule.
std::vector<TermRef> prune_children(TermPool& pool, std::vector<TermRef> children,
                                    TermKind constructor);

/// Membership of the nested initial-state singleton chain in the denotation
/// of a term of level >= 1: down nodes ask one child, up nodes ask all
/// children, and a level-1 up node asks that the base initial set meets
/// every generator.
bool member_initial(TermRef t, const StateSet& initial);

/// Canonical rendering matching the paper, e.g. "↑⊗{{b,c},{c,d}}".  Base
/// states print by name when `names` is given, by id otherwise.
std::string render_term(TermRef t, const std::vector<std::string>* names = nullptr);

// ---------------------------------------------------------------------------
// explicit denotation (test oracle support)
// ---------------------------------------------------------------------------

/// Element of the level-k state universe: a base state for k = 0, otherwise
/// a set of level-(k-1) elements.
struct Elem {
    int base = -1;
    std::set<Elem> members;

    bool operator<(const Elem& other) const {
        if (base != other.base) return base < other.base;
        return members < other.members;
    }
    bool operator==(const Elem& other) const = default;
};

using ElemSet = std::set<Elem>;

/// Exact denotation of a term as an explicit set of level-`t->level`
/// elements over a base universe of q0_size states.  Guarded: throws
/// ResourceLimitError when an intermediate set would exceed `guard`.
ElemSet denote(TermRef t, State q0_size, std::size_t guard = std::size_t{1} << 16);

/// All elements of the level-k universe (2^2^...^q0_size, guarded).
ElemSet level_universe(unsigned level, State q0_size, std::size_t guard = std::size_t{1} << 16);

}  // namespace ws1s

#endif
