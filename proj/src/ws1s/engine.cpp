/* engine.cpp -- prefix normalization and the nested antichain fixpoints */

#include "ws1s/engine.hpp"

#include <sstream>

namespace ws1s {

// ---------------------------------------------------------------------------
// prefix normalization
// ---------------------------------------------------------------------------

namespace {

struct Token {
    bool is_not;
    TrackMask block;  // valid when !is_not
};

}  // namespace

PrefixSpec normalize_prefix(const PrenexFormula& g, const Limits& limits) {
    std::vector<std::string> free = free_variables(*prenex_to_formula(g));
    if (!free.empty())
        throw std::invalid_argument("normalize_prefix: formula is not ground (free: " + free[0] + ")");

    VarTable table = formula_table(g);
    PrefixSpec spec;

    // outermost first; a universal block stands for not-exists-not
    std::vector<Token> tokens;
    for (const auto& b : g.prefix) {
        TrackMask mask = table.mask_of(b.vars);
        if (b.universal) tokens.push_back({true, 0});
        tokens.push_back({false, mask});
        if (b.universal) tokens.push_back({true, 0});
    }

    // cancel double negations and fuse adjacent blocks until stable
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Token> out;
        for (const Token& t : tokens) {
            if (!out.empty() && out.back().is_not && t.is_not) {
                out.pop_back();
                changed = true;
            } else if (!out.empty() && !out.back().is_not && !t.is_not) {
                out.back().block |= t.block;
                changed = true;
            } else {
                out.push_back(t);
            }
        }
        tokens = std::move(out);
    }

    // a negation adjacent to the matrix is absorbed into the matrix itself,
    // so its automaton keeps negations at the literals only
    FormulaRef matrix = g.matrix;
    if (!tokens.empty() && tokens.back().is_not) {
        tokens.pop_back();
        matrix = negate_nnf(matrix);
    }
    spec.matrix = trim(compile_matrix(*matrix, table, limits));
    // the normal form starts with a negation; record its absence instead
    if (!tokens.empty() && tokens.front().is_not) {
        tokens.erase(tokens.begin());
    } else if (!tokens.empty()) {
        spec.flip = true;
    }

    // what remains alternates block / not / block / ... / block
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        bool expect_not = i % 2 == 1;
        if (tokens[i].is_not != expect_not)
            throw std::logic_error("normalize_prefix: malformed token sequence");
        if (!tokens[i].is_not) spec.blocks.push_back(tokens[i].block);
    }
    std::reverse(spec.blocks.begin(), spec.blocks.end());  // innermost first
    return spec;
}

// ---------------------------------------------------------------------------
// engine
// ---------------------------------------------------------------------------

Engine::Engine(PrefixSpec spec, EngineLimits limits, bool trace)
    : spec_(std::move(spec)),
      limits_(limits),
      tracing_(trace),
      pool_(limits.term_budget),
      sharp_(spec_.blocks.size()),
      iterations_(spec_.blocks.size(), 0) {}

TrackMask Engine::table_care(unsigned level) const {
    TrackMask care = spec_.matrix.vars.all_mask();
    for (unsigned i = 0; i < level && i < spec_.blocks.size(); ++i) care &= ~spec_.blocks[i];
    return care;
}

void Engine::trace_line(std::string line) {
    if (tracing_) trace_.push_back(std::move(line));
}

TermRef Engine::sym_pre(TermRef t, const Symbol& tau) {
    if (t->level % 2 != 0) throw std::invalid_argument("sym_pre: even-level term expected");
    ImgKey key{t, tau.care, tau.value};
    auto it = image_memo_.find(key);
    if (it != image_memo_.end()) return it->second;

    TermRef result;
    if (t->level == 0) {
        result = pool_.base(
            pre(spec_.matrix.transitions, tau, t->base, spec_.matrix.num_states));
    } else {
        // one cpre image per inverse-projection symbol and generator
        TrackMask block = t->level < spec_.blocks.size() ? spec_.blocks[t->level] : 0;
        std::vector<TermRef> kids;
        BlockValues(block).for_each([&](TrackMask v) {
            Symbol omega{tau.care | block, tau.value | v};
            for (TermRef child : t->children) kids.push_back(sym_cpre(child, omega));
        });
        result = pool_.down(std::move(kids));
    }
    image_memo_.emplace(key, result);
    return result;
}

TermRef Engine::sym_cpre(TermRef t, const Symbol& tau) {
    if (t->level % 2 != 1) throw std::invalid_argument("sym_cpre: odd-level term expected");
    ImgKey key{t, tau.care, tau.value};
    auto it = image_memo_.find(key);
    if (it != image_memo_.end()) return it->second;

    // one pre image per inverse-projection symbol and generator
    TrackMask block = t->level < spec_.blocks.size() ? spec_.blocks[t->level] : 0;
    std::vector<TermRef> kids;
    BlockValues(block).for_each([&](TrackMask v) {
        Symbol omega{tau.care | block, tau.value | v};
        for (TermRef child : t->children) kids.push_back(sym_pre(child, omega));
    });
    TermRef result = pool_.up(std::move(kids));
    image_memo_.emplace(key, result);
    return result;
}

TermRef Engine::base_fsharp() {
    if (sharp_.empty() || !sharp_[0]) {
        StateSet f = spec_.matrix.final;
        Symbol zero = level_zero(1);
        std::uint32_t iters = 0;
        while (true) {
            ++iters;
            StateSet grown = f;
            grown |= pre(spec_.matrix.transitions, zero, f, spec_.matrix.num_states);
            if (grown == f) break;
            f = grown;
        }
        TermRef t = pool_.base(std::move(f));
        if (tracing_) trace_line("F0# = " + render_term(t));
        if (sharp_.empty()) return t;  // m == 0, nothing to cache
        sharp_[0] = t;
        iterations_[0] = iters;
    }
    return *sharp_[0];
}

TermRef Engine::cached(unsigned level) {
    if (level == 0) return base_fsharp();
    return level % 2 == 1 ? fixpoint_Nsharp(level) : fixpoint_Fsharp(level);
}

TermRef Engine::fixpoint_Nsharp(unsigned level) {
    if (level % 2 != 1) throw std::invalid_argument("fixpoint_Nsharp: odd level expected");
    if (sharp_[level]) return *sharp_[level];

    TermRef gen = cached(level - 1);  // F_{level-1}#
    TermRef z = pool_.up({gen});
    if (tracing_) trace_line("N" + std::to_string(level) + " = " + render_term(z));
    Symbol zero = level_zero(level + 1);
    std::uint32_t iters = 0;
    while (true) {
        ++iters;
        std::vector<TermRef> kids = sym_cpre(z, zero)->children;
        kids.push_back(gen);
        TermRef next = pool_.up(std::move(kids));
        if (tracing_)
            trace_line("N" + std::to_string(level) + "# iter " + std::to_string(iters) + ": " +
                       render_term(next));
        if (pool_.subsumes(z, next)) break;  // shrinking sequence stabilized
        z = next;
    }
    iterations_[level] = iters;
    sharp_[level] = z;
    if (tracing_) trace_line("N" + std::to_string(level) + "# = " + render_term(z));
    return z;
}

TermRef Engine::fixpoint_Fsharp(unsigned level) {
    if (level % 2 != 0 || level == 0)
        throw std::invalid_argument("fixpoint_Fsharp: positive even level expected");
    if (sharp_[level]) return *sharp_[level];

    TermRef gen = cached(level - 1);  // N_{level-1}#
    TermRef z = pool_.down({gen});
    if (tracing_) trace_line("F" + std::to_string(level) + " = " + render_term(z));
    Symbol zero = level_zero(level + 1);
    std::uint32_t iters = 0;
    while (true) {
        ++iters;
        std::vector<TermRef> kids = sym_pre(z, zero)->children;
        kids.push_back(gen);
        TermRef next = pool_.down(std::move(kids));
        if (tracing_)
            trace_line("F" + std::to_string(level) + "# iter " + std::to_string(iters) + ": " +
                       render_term(next));
        if (pool_.subsumes(next, z)) break;  // growing sequence stabilized
        z = next;
    }
    iterations_[level] = iters;
    sharp_[level] = z;
    trace_line("F" + std::to_string(level) + "# = " + render_term(z));
    return z;
}

NestedResult Engine::decide() {
    NestedResult res;
    std::size_t m = spec_.blocks.size();

    bool holds;
    if (m == 0) {
        // no prefix left: epsilon acceptance of the matrix automaton
        holds = spec_.matrix.initial.intersects(spec_.matrix.final);
        trace_line(std::string("epsilon test: ") + (holds ? "accepting" : "rejecting"));
    } else {
        TermRef top_gen = cached(static_cast<unsigned>(m) - 1);
        bool odd = m % 2 == 1;
        TermRef top = odd ? pool_.up({top_gen}) : pool_.down({top_gen});
        if (tracing_)
            trace_line(std::string(odd ? "N" : "F") + std::to_string(m) + " = " + render_term(top));
        bool member = member_initial(top, spec_.matrix.initial);
        trace_line(std::string("I0 membership: ") + (member ? "true" : "false"));
        // for odd m the computed set is the complement of F_m
        holds = odd ? !member : member;
    }
    if (spec_.flip) holds = !holds;

    res.valid = holds;
    res.term_nodes = pool_.node_count();
    res.fixpoint_iterations = iterations_;
    res.trace = std::move(trace_);
    return res;
}

}  // namespace ws1s
