/* parser.cpp -- recursive-descent parser for the WS1S concrete grammar */

#include <cctype>
#include <sstream>

#include "ws1s/formula.hpp"

namespace ws1s {

ParseError::ParseError(int line_, int col_, const std::string& msg)
    : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                         std::to_string(col_) + ": " + msg),
      line(line_),
      col(col_) {}

namespace {

enum class Tok {
    Var,      // uppercase-led identifier
    KwEx2,
    KwAll2,
    KwSub,
    KwSing,
    Tilde,
    Amp,
    Pipe,
    LParen,
    RParen,
    Colon,
    Comma,
    Equals,
    LBrace,
    RBrace,
    Plus,
    Zero,
    One,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Tok::End, "", line, col};
        char c = text_[pos_];
        if (std::isupper(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
                name += advance();
            return {Tok::Var, name, line, col};
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            std::string word;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
                word += advance();
            if (word == "ex2") return {Tok::KwEx2, word, line, col};
            if (word == "all2") return {Tok::KwAll2, word, line, col};
            if (word == "sub") return {Tok::KwSub, word, line, col};
            if (word == "sing") return {Tok::KwSing, word, line, col};
            throw ParseError(line, col, "unknown keyword '" + word + "'");
        }
        switch (c) {
            case '~': advance(); return {Tok::Tilde, "~", line, col};
            case '&': advance(); return {Tok::Amp, "&", line, col};
            case '|': advance(); return {Tok::Pipe, "|", line, col};
            case '(': advance(); return {Tok::LParen, "(", line, col};
            case ')': advance(); return {Tok::RParen, ")", line, col};
            case ':': advance(); return {Tok::Colon, ":", line, col};
            case ',': advance(); return {Tok::Comma, ",", line, col};
            case '=': advance(); return {Tok::Equals, "=", line, col};
            case '{': advance(); return {Tok::LBrace, "{", line, col};
            case '}': advance(); return {Tok::RBrace, "}", line, col};
            case '+': advance(); return {Tok::Plus, "+", line, col};
            case '0': advance(); return {Tok::Zero, "0", line, col};
            case '1': advance(); return {Tok::One, "1", line, col};
            default:
                throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
    }

private:
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { shift(); }

    FormulaRef parse() {
        FormulaRef f = formula();
        expect(Tok::End, "end of input");
        return f;
    }

private:
    void shift() { cur_ = lexer_.next(); }

    Token expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind)
            throw ParseError(cur_.line, cur_.col,
                             "expected " + what + ", got '" + (cur_.kind == Tok::End ? "<end>" : cur_.text) + "'");
        Token t = cur_;
        shift();
        return t;
    }

    // formula ::= quant | disj
    FormulaRef formula() {
        if (cur_.kind == Tok::KwEx2 || cur_.kind == Tok::KwAll2) return quant();
        return disj();
    }

    FormulaRef quant() {
        bool is_ex = cur_.kind == Tok::KwEx2;
        Token kw = cur_;
        shift();
        std::vector<std::string> block;
        block.push_back(expect(Tok::Var, "variable").text);
        while (cur_.kind == Tok::Comma) {
            shift();
            block.push_back(expect(Tok::Var, "variable").text);
        }
        expect(Tok::Colon, "':'");
        FormulaRef body = formula();  // scope extends maximally to the right
        try {
            return is_ex ? Formula::exists(std::move(block), std::move(body))
                         : Formula::forall(std::move(block), std::move(body));
        } catch (const std::invalid_argument& e) {
            throw ParseError(kw.line, kw.col, e.what());
        }
    }

    FormulaRef disj() {
        FormulaRef f = conj();
        while (cur_.kind == Tok::Pipe) {
            shift();
            f = Formula::lor(std::move(f), conj());
        }
        return f;
    }

    FormulaRef conj() {
        FormulaRef f = neg();
        while (cur_.kind == Tok::Amp) {
            shift();
            f = Formula::land(std::move(f), neg());
        }
        return f;
    }

    FormulaRef neg() {
        if (cur_.kind == Tok::Tilde) {
            shift();
            return Formula::lnot(neg());
        }
        // a quantifier may follow a negation or connective; its scope
        // extends maximally to the right
        if (cur_.kind == Tok::KwEx2 || cur_.kind == Tok::KwAll2) return quant();
        if (cur_.kind == Tok::LParen) {
            shift();
            FormulaRef f = formula();
            expect(Tok::RParen, "')'");
            return f;
        }
        return atom();
    }

    // atom ::= var "sub" var | "sing" var | var "=" "{0}" | var "=" var "+" "1"
    FormulaRef atom() {
        if (cur_.kind == Tok::KwSing) {
            shift();
            return Formula::sing(expect(Tok::Var, "variable").text);
        }
        Token x = expect(Tok::Var, "atom");
        if (cur_.kind == Tok::KwSub) {
            shift();
            return Formula::sub(x.text, expect(Tok::Var, "variable").text);
        }
        expect(Tok::Equals, "'sub' or '='");
        if (cur_.kind == Tok::LBrace) {
            shift();
            expect(Tok::Zero, "'0'");
            expect(Tok::RBrace, "'}'");
            return Formula::zeroth(x.text);
        }
        Token y = expect(Tok::Var, "'{0}' or variable");
        expect(Tok::Plus, "'+'");
        expect(Tok::One, "'1'");
        return Formula::succ(x.text, y.text);
    }

    Lexer lexer_;
    Token cur_;
};

}  // namespace

FormulaRef parse_formula(std::string_view text) { return Parser(text).parse(); }

}  // namespace ws1s
