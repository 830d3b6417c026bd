/* formula.hpp -- WS1S formulas: AST, parsing, desugaring, prenex normal form
 *
 * The minimal syntax has four atoms (X sub Y, sing X, X = {0}, X = Y + 1),
 * the connectives ~ & |, and second-order quantifier blocks ex2/all2.
 */

#ifndef WS1S_FORMULA_HPP
#define WS1S_FORMULA_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ws1s {

enum class FormulaKind {
    Sub,     // X sub Y
    Sing,    // sing X
    Zeroth,  // X = {0}
    Succ,    // X = Y + 1
    And,
    Or,
    Not,
    Exists,
    Forall,
};

class Formula;
using FormulaRef = std::shared_ptr<const Formula>;

class Formula {
public:
    FormulaKind kind;
    std::vector<std::string> vars;      // atom operands or quantifier block
    std::vector<FormulaRef> children;

    static FormulaRef sub(std::string x, std::string y);
    static FormulaRef sing(std::string x);
    static FormulaRef zeroth(std::string x);
    static FormulaRef succ(std::string x, std::string y);  // x = y + 1
    static FormulaRef land(FormulaRef a, FormulaRef b);
    static FormulaRef lor(FormulaRef a, FormulaRef b);
    static FormulaRef lnot(FormulaRef a);
    static FormulaRef exists(std::vector<std::string> block, FormulaRef body);
    static FormulaRef forall(std::vector<std::string> block, FormulaRef body);

    bool is_atom() const {
        return kind == FormulaKind::Sub || kind == FormulaKind::Sing ||
               kind == FormulaKind::Zeroth || kind == FormulaKind::Succ;
    }
    bool is_quantifier() const {
        return kind == FormulaKind::Exists || kind == FormulaKind::Forall;
    }

private:
    Formula(FormulaKind k, std::vector<std::string> v, std::vector<FormulaRef> c)
        : kind(k), vars(std::move(v)), children(std::move(c)) {}
    static FormulaRef make(FormulaKind k, std::vector<std::string> v, std::vector<FormulaRef> c);
};

bool structurally_equal(const Formula& a, const Formula& b);

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& msg);
    int line;
    int col;
};

/// Parses the concrete grammar:
///   formula ::= quant | disj ;  quant ::= ("ex2"|"all2") var ("," var)* ":" formula ;
///   disj ::= conj ("|" conj)* ;  conj ::= neg ("&" neg)* ;
///   neg ::= "~" neg | atom | "(" formula ")" ;
///   atom ::= var "sub" var | "sing" var | var "=" "{0}" | var "=" var "+" "1" ;
/// Variables start with an uppercase letter; "#" starts a line comment.
FormulaRef parse_formula(std::string_view text);

/// Inverse of parse_formula up to structural equality.
std::string pretty_print(const Formula& f);

/// Replaces every all2 block by ~ex2~.
FormulaRef desugar(const FormulaRef& f);

/// Free variables in first-occurrence order.
std::vector<std::string> free_variables(const Formula& f);

enum class Task { Validity, Satisfiability };

/// Binds all free variables: validity prepends ~ex2~ (i.e. all2),
/// satisfiability prepends ex2.  Ground formulas are returned unchanged.
FormulaRef close_formula(const FormulaRef& f, Task task);

struct PrenexBlock {
    bool universal = false;
    std::vector<std::string> vars;
};

/// Quantifier prefix (outermost first) over a quantifier-free matrix in
/// negation normal form (Not only directly above atoms).
struct PrenexFormula {
    std::vector<PrenexBlock> prefix;
    FormulaRef matrix;
};

/// Pulls quantifiers to the front left-to-right, renaming bound variables
/// apart where capture would occur, and pushes matrix negations to literals.
PrenexFormula to_prenex(const FormulaRef& f);

/// Negation of a quantifier-free formula, pushed back to the literals.
FormulaRef negate_nnf(const FormulaRef& f);

/// Machine-checkable PrenexFormula invariant: matrix quantifier-free with
/// Not only above atoms; blocks non-empty, duplicate-free, pairwise disjoint.
bool prenex_invariants_hold(const PrenexFormula& g);

/// Reassembles a PrenexFormula into a plain formula (test support).
FormulaRef prenex_to_formula(const PrenexFormula& g);

}  // namespace ws1s

#endif
