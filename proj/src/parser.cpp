#include "qf/parser.hpp"

#include <cctype>
#include <sstream>

#include "qf/errors.hpp"

namespace qf {
namespace {

struct Token {
    enum Kind { Ident, Int, Plus, Minus, Star, Equals, Sep, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
                continue;
            }
            if (c == '\n' || c == ';') {
                Token t{Token::Sep, std::string(1, c), line_, col_};
                advance();
                return t;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
                continue;
            }
            int l = line_, col = col_;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num;
                while (pos_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    num += src_[pos_];
                    advance();
                }
                return {Token::Int, num, l, col};
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string id;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                        src_[pos_] == '_')) {
                    id += src_[pos_];
                    advance();
                }
                return {Token::Ident, id, l, col};
            }
            advance();
            switch (c) {
                case '+': return {Token::Plus, "+", l, col};
                case '-': return {Token::Minus, "-", l, col};
                case '*': return {Token::Star, "*", l, col};
                case '=': return {Token::Equals, "=", l, col};
                default: throw ParseError(std::string("unexpected character '") + c + "'", l, col);
            }
        }
        return {Token::End, "", line_, col_};
    }

  private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
  public:
    explicit Parser(const std::string& src) : lex_(src) { bump(); }

    EquationSystem run() {
        while (cur_.kind != Token::End) {
            if (cur_.kind == Token::Sep) {
                bump();
                continue;
            }
            if (cur_.kind == Token::Ident && cur_.text == "vars") {
                bump();
                parse_vars();
            } else if (cur_.kind == Token::Ident && cur_.text == "layout") {
                bump();
                parse_layout();
            } else {
                parse_equation();
            }
        }
        return std::move(sys_);
    }

  private:
    void bump() { cur_ = lex_.next(); }

    void expect_stmt_end() {
        if (cur_.kind != Token::Sep && cur_.kind != Token::End)
            throw ParseError("expected end of statement, got '" + cur_.text + "'",
                             cur_.line, cur_.col);
    }

    void parse_vars() {
        bool any = false;
        while (cur_.kind == Token::Ident) {
            sys_.intern(classify_variable(cur_.text));
            any = true;
            bump();
        }
        if (!any) throw ParseError("'vars' needs at least one identifier", cur_.line, cur_.col);
        expect_stmt_end();
    }

    void parse_layout() {
        if (cur_.kind != Token::Int)
            throw ParseError("'layout' needs a target integer", cur_.line, cur_.col);
        FactorLayout lay;
        lay.n = std::stoull(cur_.text);
        bump();
        while (cur_.kind == Token::Ident) {
            std::string letter = cur_.text;
            bump();
            if (cur_.kind != Token::Equals)
                throw ParseError("expected '=' in layout entry", cur_.line, cur_.col);
            bump();
            if (cur_.kind != Token::Int)
                throw ParseError("expected interior bit count", cur_.line, cur_.col);
            lay.interiors.push_back(std::stoi(cur_.text));
            bump();
        }
        sys_.layout = lay;
        expect_stmt_end();
    }

    std::uint32_t lookup(const Token& t) {
        int idx = sys_.find(t.text);
        if (idx < 0)
            throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
        return static_cast<std::uint32_t>(idx);
    }

    void parse_equation() {
        BinaryPolynomial poly;
        bool first = true;
        while (true) {
            std::int64_t sign = 1;
            if (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
                sign = cur_.kind == Token::Minus ? -1 : 1;
                bump();
            } else if (!first) {
                break;
            }
            first = false;
            std::int64_t coeff = 1;
            bool have_coeff = false, have_var = false;
            if (cur_.kind == Token::Int) {
                coeff = std::stoll(cur_.text);
                have_coeff = true;
                bump();
                if (cur_.kind == Token::Star) bump();  // optional 2*q1
            }
            Monomial mono;
            if (cur_.kind == Token::Ident) {
                mono.push_back(lookup(cur_));
                have_var = true;
                bump();
                while (cur_.kind == Token::Star) {
                    bump();
                    if (cur_.kind != Token::Ident)
                        throw ParseError("expected variable after '*'", cur_.line, cur_.col);
                    mono.push_back(lookup(cur_));
                    bump();
                }
            }
            if (!have_coeff && !have_var)
                throw ParseError("expected term", cur_.line, cur_.col);
            poly.add_term(std::move(mono), sign * coeff);
        }
        if (cur_.kind != Token::Equals)
            throw ParseError("expected '=' in equation", cur_.line, cur_.col);
        bump();
        std::int64_t rhs_sign = 1;
        if (cur_.kind == Token::Minus) {
            rhs_sign = -1;
            bump();
        }
        if (cur_.kind != Token::Int)
            throw ParseError("expected integer right-hand side", cur_.line, cur_.col);
        poly.add_term({}, -rhs_sign * std::stoll(cur_.text));
        bump();
        expect_stmt_end();
        sys_.equations.push_back(std::move(poly));
    }

    Lexer lex_;
    Token cur_{Token::End, "", 0, 0};
    EquationSystem sys_;
};

}  // namespace

EquationSystem parse_equations(const std::string& text) { return Parser(text).run(); }

std::string print_polynomial(const BinaryPolynomial& poly, const EquationSystem& sys) {
    if (poly.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : poly.terms()) {
        std::int64_t c = coeff;
        if (first) {
            if (c < 0) {
                os << "- ";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (mono.empty()) {
            os << c;
            continue;
        }
        if (c != 1) os << c << " ";
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (i) os << "*";
            os << sys.variables[mono[i]].name;
        }
    }
    return os.str();
}

std::string print_system(const EquationSystem& sys) {
    std::ostringstream os;
    if (!sys.variables.empty()) {
        os << "vars";
        for (const auto& v : sys.variables) os << " " << v.name;
        os << "\n";
    }
    if (sys.layout) {
        os << "layout " << sys.layout->n;
        for (std::size_t i = 0; i < sys.layout->interiors.size(); ++i)
            os << " " << static_cast<char>('p' + i) << "=" << sys.layout->interiors[i];
        os << "\n";
    }
    for (const auto& eq : sys.equations) os << print_polynomial(eq, sys) << " = 0\n";
    return os.str();
}

}  // namespace qf
