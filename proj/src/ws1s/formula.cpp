/* formula.cpp -- AST construction, printing, desugaring, prenex conversion */

#include "ws1s/formula.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ws1s {

namespace {

void check_block(const std::vector<std::string>& block) {
    if (block.empty()) throw std::invalid_argument("empty quantifier block");
    std::set<std::string> seen(block.begin(), block.end());
    if (seen.size() != block.size()) throw std::invalid_argument("duplicate variable in quantifier block");
}

}  // namespace

FormulaRef Formula::make(FormulaKind k, std::vector<std::string> v, std::vector<FormulaRef> c) {
    return FormulaRef(new Formula(k, std::move(v), std::move(c)));
}

FormulaRef Formula::sub(std::string x, std::string y) {
    return make(FormulaKind::Sub, {std::move(x), std::move(y)}, {});
}
FormulaRef Formula::sing(std::string x) { return make(FormulaKind::Sing, {std::move(x)}, {}); }
FormulaRef Formula::zeroth(std::string x) { return make(FormulaKind::Zeroth, {std::move(x)}, {}); }
FormulaRef Formula::succ(std::string x, std::string y) {
    return make(FormulaKind::Succ, {std::move(x), std::move(y)}, {});
}
FormulaRef Formula::land(FormulaRef a, FormulaRef b) {
    return make(FormulaKind::And, {}, {std::move(a), std::move(b)});
}
FormulaRef Formula::lor(FormulaRef a, FormulaRef b) {
    return make(FormulaKind::Or, {}, {std::move(a), std::move(b)});
}
FormulaRef Formula::lnot(FormulaRef a) { return make(FormulaKind::Not, {}, {std::move(a)}); }
FormulaRef Formula::exists(std::vector<std::string> block, FormulaRef body) {
    check_block(block);
    return make(FormulaKind::Exists, std::move(block), {std::move(body)});
}
FormulaRef Formula::forall(std::vector<std::string> block, FormulaRef body) {
    check_block(block);
    return make(FormulaKind::Forall, std::move(block), {std::move(body)});
}

bool structurally_equal(const Formula& a, const Formula& b) {
    if (a.kind != b.kind || a.vars != b.vars || a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!structurally_equal(*a.children[i], *b.children[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// pretty printing
// ---------------------------------------------------------------------------

namespace {

// Precedence: quantifier scope is weakest, then |, then &, ~ strongest.
enum Prec { PrecFormula = 0, PrecOr = 1, PrecAnd = 2, PrecNeg = 3 };

void print_rec(const Formula& f, Prec ctx, std::ostream& os) {
    switch (f.kind) {
        case FormulaKind::Sub: os << f.vars[0] << " sub " << f.vars[1]; return;
        case FormulaKind::Sing: os << "sing " << f.vars[0]; return;
        case FormulaKind::Zeroth: os << f.vars[0] << " = {0}"; return;
        case FormulaKind::Succ: os << f.vars[0] << " = " << f.vars[1] << " + 1"; return;
        case FormulaKind::Not:
            os << "~";
            print_rec(*f.children[0], PrecNeg, os);
            return;
        case FormulaKind::And:
        case FormulaKind::Or: {
            bool is_and = f.kind == FormulaKind::And;
            Prec mine = is_and ? PrecAnd : PrecOr;
            bool parens = ctx > mine;
            if (parens) os << "(";
            // the grammar folds chains to the left, so only a right-nested
            // operator of the same kind needs parentheses
            print_rec(*f.children[0], mine, os);
            os << (is_and ? " & " : " | ");
            print_rec(*f.children[1], static_cast<Prec>(mine + 1), os);
            if (parens) os << ")";
            return;
        }
        case FormulaKind::Exists:
        case FormulaKind::Forall: {
            bool parens = ctx > PrecFormula;
            if (parens) os << "(";
            os << (f.kind == FormulaKind::Exists ? "ex2 " : "all2 ");
            for (std::size_t i = 0; i < f.vars.size(); ++i) {
                if (i > 0) os << ", ";
                os << f.vars[i];
            }
            os << ": ";
            print_rec(*f.children[0], PrecFormula, os);
            if (parens) os << ")";
            return;
        }
    }
}

}  // namespace

std::string pretty_print(const Formula& f) {
    std::ostringstream os;
    print_rec(f, PrecFormula, os);
    return os.str();
}

// ---------------------------------------------------------------------------
// desugar, free variables, closing
// ---------------------------------------------------------------------------

FormulaRef desugar(const FormulaRef& f) {
    switch (f->kind) {
        case FormulaKind::Forall: {
            FormulaRef body = desugar(f->children[0]);
            return Formula::lnot(Formula::exists(f->vars, Formula::lnot(body)));
        }
        case FormulaKind::Exists:
            return Formula::exists(f->vars, desugar(f->children[0]));
        case FormulaKind::Not:
            return Formula::lnot(desugar(f->children[0]));
        case FormulaKind::And:
            return Formula::land(desugar(f->children[0]), desugar(f->children[1]));
        case FormulaKind::Or:
            return Formula::lor(desugar(f->children[0]), desugar(f->children[1]));
        default:
            return f;
    }
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound,
                  std::vector<std::string>& out) {
    if (f.is_atom()) {
        for (const auto& v : f.vars) {
            if (std::find(bound.begin(), bound.end(), v) != bound.end()) continue;
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        }
        return;
    }
    if (f.is_quantifier()) {
        std::size_t mark = bound.size();
        bound.insert(bound.end(), f.vars.begin(), f.vars.end());
        collect_free(*f.children[0], bound, out);
        bound.resize(mark);
        return;
    }
    for (const auto& c : f.children) collect_free(*c, bound, out);
}

}  // namespace

std::vector<std::string> free_variables(const Formula& f) {
    std::vector<std::string> bound, out;
    collect_free(f, bound, out);
    return out;
}

FormulaRef close_formula(const FormulaRef& f, Task task) {
    std::vector<std::string> free = free_variables(*f);
    if (free.empty()) return f;
    if (task == Task::Satisfiability) return Formula::exists(std::move(free), f);
    return Formula::lnot(Formula::exists(std::move(free), Formula::lnot(f)));
}

// ---------------------------------------------------------------------------
// prenex normal form
// ---------------------------------------------------------------------------

namespace {

void collect_names(const Formula& f, std::set<std::string>& out) {
    out.insert(f.vars.begin(), f.vars.end());
    for (const auto& c : f.children) collect_names(*c, out);
}

std::string fresh_name(const std::string& base, std::set<std::string>& used) {
    for (int i = 2;; ++i) {
        std::string cand = base + std::to_string(i);
        if (used.insert(cand).second) return cand;
    }
}

/// Renames free occurrences of `from` to `to`; stops below a re-binding of `from`.
FormulaRef rename_free(const FormulaRef& f, const std::string& from, const std::string& to) {
    if (f->is_atom()) {
        std::vector<std::string> vars = f->vars;
        bool changed = false;
        for (auto& v : vars)
            if (v == from) { v = to; changed = true; }
        if (!changed) return f;
        switch (f->kind) {
            case FormulaKind::Sub: return Formula::sub(vars[0], vars[1]);
            case FormulaKind::Sing: return Formula::sing(vars[0]);
            case FormulaKind::Zeroth: return Formula::zeroth(vars[0]);
            default: return Formula::succ(vars[0], vars[1]);
        }
    }
    if (f->is_quantifier()) {
        if (std::find(f->vars.begin(), f->vars.end(), from) != f->vars.end()) return f;
        FormulaRef body = rename_free(f->children[0], from, to);
        if (body == f->children[0]) return f;
        return f->kind == FormulaKind::Exists ? Formula::exists(f->vars, body)
                                              : Formula::forall(f->vars, body);
    }
    std::vector<FormulaRef> kids;
    bool changed = false;
    for (const auto& c : f->children) {
        kids.push_back(rename_free(c, from, to));
        changed = changed || kids.back() != c;
    }
    if (!changed) return f;
    switch (f->kind) {
        case FormulaKind::And: return Formula::land(kids[0], kids[1]);
        case FormulaKind::Or: return Formula::lor(kids[0], kids[1]);
        default: return Formula::lnot(kids[0]);
    }
}

FormulaRef push_not(const FormulaRef& f);

FormulaRef to_nnf(const FormulaRef& f) {
    switch (f->kind) {
        case FormulaKind::Not: return push_not(f->children[0]);
        case FormulaKind::And: return Formula::land(to_nnf(f->children[0]), to_nnf(f->children[1]));
        case FormulaKind::Or: return Formula::lor(to_nnf(f->children[0]), to_nnf(f->children[1]));
        default: return f;
    }
}

FormulaRef push_not(const FormulaRef& f) {
    switch (f->kind) {
        case FormulaKind::Not: return to_nnf(f->children[0]);
        case FormulaKind::And:
            return Formula::lor(push_not(f->children[0]), push_not(f->children[1]));
        case FormulaKind::Or:
            return Formula::land(push_not(f->children[0]), push_not(f->children[1]));
        default: return Formula::lnot(f);
    }
}

struct PrenexState {
    std::set<std::string> used;
};

/// Returns the prefix (outermost first) and a quantifier-free matrix (not
/// yet in NNF).  `negated` tracks an odd number of enclosing negations.
void prenex_rec(const FormulaRef& f, bool negated, PrenexState& st,
                std::vector<PrenexBlock>& prefix, FormulaRef& matrix) {
    switch (f->kind) {
        case FormulaKind::Not:
            prenex_rec(f->children[0], !negated, st, prefix, matrix);
            return;
        case FormulaKind::Exists:
        case FormulaKind::Forall: {
            bool universal = (f->kind == FormulaKind::Forall) != negated;
            FormulaRef body = f->children[0];
            PrenexBlock block;
            block.universal = universal;
            for (const auto& v : f->vars) {
                if (st.used.count(v)) {
                    std::string v2 = fresh_name(v, st.used);
                    body = rename_free(body, v, v2);
                    block.vars.push_back(v2);
                } else {
                    st.used.insert(v);
                    block.vars.push_back(v);
                }
            }
            prefix.push_back(std::move(block));
            prenex_rec(body, negated, st, prefix, matrix);
            return;
        }
        case FormulaKind::And:
        case FormulaKind::Or: {
            FormulaRef left, right;
            prenex_rec(f->children[0], negated, st, prefix, left);
            prenex_rec(f->children[1], negated, st, prefix, right);
            // de Morgan under an odd number of negations
            bool effective_and = (f->kind == FormulaKind::And) != negated;
            matrix = effective_and ? Formula::land(left, right) : Formula::lor(left, right);
            return;
        }
        default:
            matrix = negated ? Formula::lnot(f) : f;
            return;
    }
}

}  // namespace

FormulaRef negate_nnf(const FormulaRef& f) {
    return to_nnf(Formula::lnot(f));
}

PrenexFormula to_prenex(const FormulaRef& f) {
    PrenexState st;
    std::vector<std::string> free = free_variables(*f);
    st.used.insert(free.begin(), free.end());
    PrenexFormula out;
    prenex_rec(f, false, st, out.prefix, out.matrix);
    out.matrix = to_nnf(out.matrix);
    return out;
}

namespace {

bool matrix_ok(const Formula& f) {
    switch (f.kind) {
        case FormulaKind::Not: return f.children[0]->is_atom();
        case FormulaKind::And:
        case FormulaKind::Or:
            return matrix_ok(*f.children[0]) && matrix_ok(*f.children[1]);
        case FormulaKind::Exists:
        case FormulaKind::Forall: return false;
        default: return true;
    }
}

}  // namespace

bool prenex_invariants_hold(const PrenexFormula& g) {
    if (!g.matrix || !matrix_ok(*g.matrix)) return false;
    std::set<std::string> seen;
    for (const auto& b : g.prefix) {
        if (b.vars.empty()) return false;
        for (const auto& v : b.vars)
            if (!seen.insert(v).second) return false;
    }
    return true;
}

FormulaRef prenex_to_formula(const PrenexFormula& g) {
    FormulaRef f = g.matrix;
    for (auto it = g.prefix.rbegin(); it != g.prefix.rend(); ++it)
        f = it->universal ? Formula::forall(it->vars, f) : Formula::exists(it->vars, f);
    return f;
}

}  // namespace ws1s
