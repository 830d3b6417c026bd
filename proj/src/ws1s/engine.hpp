/* engine.hpp -- on-the-fly decision of an alternating quantifier prefix
 *
 * Normalizes the prefix into the strict not-exists block form, then decides
 * validity by computing the sequence F0, F0#, N1, N1#, ... of final /
 * non-final state sets symbolically, as nested terms with subsumption
 * pruning.  The transition relations of the upper levels are never built;
 * every image is reduced level by level to explicit pre/cpre images on the
 * matrix automaton.
 */

#ifndef WS1S_ENGINE_HPP
#define WS1S_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ws1s/nfa.hpp"
#include "ws1s/term.hpp"

namespace ws1s {

/// Normalized prefix: the innermost block first, one negation between
/// consecutive blocks, an absorbed innermost negation already applied to
/// the matrix automaton, and `flip` set when the outermost negation of the
/// normal form is missing from the formula.
struct PrefixSpec {
    std::vector<TrackMask> blocks;  // blocks[i] covers the tracks of X_{i+1}
    bool flip = false;
    Nfa matrix;
};

/// Builds a PrefixSpec from a ground, Forall-free prenex formula.  Adjacent
/// existential blocks are fused, double negations cancelled.
PrefixSpec normalize_prefix(const PrenexFormula& g, const Limits& limits = {});

struct EngineLimits {
    std::uint64_t term_budget = 1'000'000;
};

struct NestedResult {
    bool valid = false;
    std::uint64_t term_nodes = 0;
    std::vector<std::uint32_t> fixpoint_iterations;  // per level 0..m-1
    std::vector<std::string> trace;
};

class Engine {
public:
    Engine(PrefixSpec spec, EngineLimits limits = {}, bool trace = false);

    NestedResult decide();

    /// Image of an even-level term under the projected transition relation
    /// of its level; tau must care exactly about the tracks of the level
    /// above the term's own (the symbol the image is taken by).
    TermRef sym_pre(TermRef t, const Symbol& tau);
    /// Dual image of an odd-level term.
    TermRef sym_cpre(TermRef t, const Symbol& tau);

    /// Least fixpoint for F_i# at an even level i >= 2 (level 0 is the
    /// explicit backward reachability run by decide()).
    TermRef fixpoint_Fsharp(unsigned level);
    /// Greatest fixpoint for N_i# at an odd level.
    TermRef fixpoint_Nsharp(unsigned level);

    TermPool& pool() { return pool_; }
    const PrefixSpec& spec() const { return spec_; }
    /// Tracks still alive at level i (everything minus blocks 1..i).
    TrackMask table_care(unsigned level) const;
    /// Zero symbol over the level-i table.
    Symbol level_zero(unsigned level) const { return Symbol{table_care(level), 0}; }

    TermRef base_fsharp();  // F0# as a level-0 term

private:
    TermRef cached(unsigned level);
    void trace_line(std::string line);

    PrefixSpec spec_;
    EngineLimits limits_;
    bool tracing_;
    TermPool pool_;
    std::vector<std::optional<TermRef>> sharp_;  // F_i# / N_i# per level
    std::vector<std::uint32_t> iterations_;
    std::vector<std::string> trace_;

    struct ImgKey {
        TermRef t;
        TrackMask care;
        TrackMask value;
        bool operator==(const ImgKey&) const = default;
    };
    struct ImgKeyHash {
        std::size_t operator()(const ImgKey& k) const {
            std::size_t h = std::hash<const void*>()(k.t);
            h = h * 1099511628211ull ^ std::hash<TrackMask>()(k.care);
            return h * 1099511628211ull ^ std::hash<TrackMask>()(k.value);
        }
    };
    std::unordered_map<ImgKey, TermRef, ImgKeyHash> image_memo_;
};

}  // namespace ws1s

#endif
