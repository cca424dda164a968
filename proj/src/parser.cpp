#include "qtorus/parser.hpp"

#include <cctype>
#include <optional>

namespace qtorus {

namespace {

enum class Tok { Number, Ident, LBracket, RBracket, LParen, RParen, Comma, Caret, Star, Slash,
                 Plus, Minus, End };

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Number: return "number";
        case Tok::Ident: return "identifier";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Caret: return "'^'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= src_.size()) {
            cur_ = {Tok::End, "", line_, col_};
            return;
        }
        char c = src_[pos_];
        auto single = [&](Tok k) {
            cur_ = {k, std::string(1, c), line_, col_};
            ++pos_;
            ++col_;
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
                ++col_;
            }
            cur_ = {Tok::Number, src_.substr(start, pos_ - start), line_,
                    col_ - static_cast<int>(pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
                ++col_;
            }
            cur_ = {Tok::Ident, src_.substr(start, pos_ - start), line_,
                    col_ - static_cast<int>(pos_ - start)};
            return;
        }
        switch (c) {
            case '[': single(Tok::LBracket); return;
            case ']': single(Tok::RBracket); return;
            case '(': single(Tok::LParen); return;
            case ')': single(Tok::RParen); return;
            case ',': single(Tok::Comma); return;
            case '^': single(Tok::Caret); return;
            case '*': single(Tok::Star); return;
            case '/': single(Tok::Slash); return;
            case '+': single(Tok::Plus); return;
            case '-': single(Tok::Minus); return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_{Tok::End, "", 1, 1};
};

enum class Mode { Vector, Word, ScalarOnly };

// One multiplicative term: a scalar coefficient together with the collected
// atoms (commuting variables for vectors, ordered letters for words).
struct TermValue {
    Scalar coeff = Scalar(1);
    Monomial mono;
    Word word;
    bool has_atoms = false;
};

class Parser {
public:
    Parser(const std::string& text, const ParamEnv& env, Mode mode)
        : lex_(text), env_(env), mode_(mode) {}

    MVector parse_vector_input() {
        MVector out = std::get<0>(parse_expr());
        expect(Tok::End);
        return out;
    }

    AlgElement parse_word_input() {
        AlgElement out = std::get<1>(parse_expr());
        expect(Tok::End);
        return out;
    }

    Scalar parse_scalar_input() {
        Scalar out = std::get<2>(parse_expr());
        expect(Tok::End);
        return out;
    }

private:
    [[noreturn]] void fail(const Token& t, const std::string& msg) {
        throw ParseError(t.line, t.col, msg);
    }

    Token expect(Tok k) {
        if (lex_.peek().kind != k)
            fail(lex_.peek(), std::string("expected ") + tok_name(k) + ", got " +
                                  tok_name(lex_.peek().kind));
        return lex_.take();
    }

    long long parse_int() {
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            neg = true;
        }
        Token t = expect(Tok::Number);
        if (t.text.size() > 12) fail(t, "integer literal too large");
        long long v = std::stoll(t.text);
        return neg ? -v : v;
    }

    std::optional<long long> parse_power() {
        if (lex_.peek().kind != Tok::Caret) return std::nullopt;
        lex_.take();
        Token at = lex_.peek();
        long long e = parse_int();
        if (e == 0) fail(at, "zero exponent forbidden");
        return e;
    }

    // Returns the value in all three shapes; only the one matching the mode
    // is meaningful at the top level.
    std::tuple<MVector, AlgElement, Scalar> parse_expr() {
        MVector vec;
        AlgElement word;
        Scalar sc(0);
        bool neg = false;
        if (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus)
            neg = lex_.take().kind == Tok::Minus;
        accumulate(vec, word, sc, parse_term(), neg);
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.take().kind == Tok::Minus;
            accumulate(vec, word, sc, parse_term(), minus);
        }
        return {std::move(vec), std::move(word), std::move(sc)};
    }

    void accumulate(MVector& vec, AlgElement& word, Scalar& sc, TermValue t, bool minus) {
        Scalar c = minus ? -t.coeff : t.coeff;
        if (mode_ == Mode::Vector) {
            vec.add_term(t.mono, c);
        } else if (mode_ == Mode::Word) {
            word.add_word(std::move(t.word), c);
        } else {
            sc += c;
        }
    }

    TermValue parse_term() {
        TermValue acc = parse_factor();
        while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
            bool divide = lex_.take().kind == Tok::Slash;
            Token at = lex_.peek();
            TermValue f = parse_factor();
            if (divide) {
                if (f.has_atoms) fail(at, "cannot divide by a non-scalar");
                if (f.coeff.is_zero()) fail(at, "division by zero");
                acc.coeff = acc.coeff / f.coeff;
            } else {
                acc.coeff = acc.coeff * f.coeff;
                if (f.has_atoms) {
                    acc.has_atoms = true;
                    acc.mono = acc.mono.times(f.mono);
                    acc.word.insert(acc.word.end(), f.word.begin(), f.word.end());
                }
            }
        }
        return acc;
    }

    TermValue parse_factor() {
        TermValue out;
        Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Number: {
                lex_.take();
                out.coeff = Scalar(mpq_class(mpz_class(t.text)));
                return out;
            }
            case Tok::LParen: {
                lex_.take();
                Mode saved = mode_;
                mode_ = Mode::ScalarOnly;
                Scalar inner = std::get<2>(parse_expr());
                mode_ = saved;
                expect(Tok::RParen);
                if (auto p = parse_power()) inner = power_scalar(inner, *p, t);
                out.coeff = inner;
                return out;
            }
            case Tok::Ident:
                return parse_ident_factor();
            default:
                fail(t, std::string("expected a number, symbol, '(' or atom, got ") +
                            tok_name(t.kind));
        }
    }

    Scalar power_scalar(const Scalar& s, long long e, const Token& at) {
        if (e < 0 && s.is_zero()) fail(at, "zero raised to a negative power");
        return s.pow(e);
    }

    TermValue parse_ident_factor() {
        Token t = lex_.take();
        TermValue out;
        const std::string& id = t.text;
        if (id == "q" || id == "mu" || id == "b") {
            Scalar s = id == "q" ? env_.q() : id == "mu" ? env_.mu() : lookup_b(t);
            if (auto p = parse_power()) s = power_scalar(s, *p, t);
            out.coeff = s;
            return out;
        }
        if (id == "x") {
            if (mode_ == Mode::Word) fail(t, "variable atom in an algebra word");
            if (mode_ == Mode::ScalarOnly) fail(t, "atom inside a scalar subexpression");
            expect(Tok::LBracket);
            long long a = parse_int();
            expect(Tok::Comma);
            long long b = parse_int();
            expect(Tok::RBracket);
            long long e = parse_power().value_or(1);
            out.mono = Monomial::variable({a, b}, e);
            out.has_atoms = true;
            return out;
        }
        if (id == "D1" || id == "D2" || id == "E11" || id == "E12" || id == "E21" ||
            id == "E22") {
            if (mode_ == Mode::Vector) fail(t, "generator atom in a module vector");
            if (mode_ == Mode::ScalarOnly) fail(t, "atom inside a scalar subexpression");
            Generator g;
            if (id == "D1") {
                g = Generator::d1();
            } else if (id == "D2") {
                g = Generator::d2();
            } else {
                expect(Tok::LParen);
                long long a = parse_int();
                expect(Tok::Comma);
                long long b = parse_int();
                expect(Tok::RParen);
                GenKind k = id == "E11"   ? GenKind::E11
                            : id == "E12" ? GenKind::E12
                            : id == "E21" ? GenKind::E21
                                          : GenKind::E22;
                g = Generator{k, {a, b}};
            }
            long long e = parse_power().value_or(1);
            if (e < 0) {
                if (g.kind != GenKind::E21)
                    fail(t, "negative powers are only allowed on E21");
                for (long long i = 0; i < -e; ++i) out.word.push_back(Atom::inv_e21(g.n));
            } else {
                for (long long i = 0; i < e; ++i) out.word.push_back(Atom::of(g));
            }
            out.has_atoms = true;
            return out;
        }
        fail(t, "unknown identifier '" + id + "'");
    }

    Scalar lookup_b(const Token& t) {
        if (!env_.has_b()) fail(t, "parameter b is not available in this environment");
        return env_.b();
    }

    Lexer lex_;
    const ParamEnv& env_;
    Mode mode_;
};

}  // namespace

MVector parse_vector(const std::string& text, const ParamEnv& env) {
    return Parser(text, env, Mode::Vector).parse_vector_input();
}

AlgElement parse_word(const std::string& text, const ParamEnv& env) {
    return Parser(text, env, Mode::Word).parse_word_input();
}

Scalar parse_scalar(const std::string& text, const ParamEnv& env) {
    return Parser(text, env, Mode::ScalarOnly).parse_scalar_input();
}

}  // namespace qtorus
