#include "kawt/parser.hpp"

#include <cctype>
#include <vector>

namespace kawt {

namespace {

enum class Tok {
    ident, zero, one,
    at, lbrace, rbrace, lparen, rparen,
    plus, star, semi, bang, amp, pipe,
    end
};

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            int line = line_, col = col_;
            if (pos_ >= src_.size()) {
                out.push_back({Tok::end, "", line, col});
                return out;
            }
            char c = src_[pos_];
            if (std::isalpha((unsigned char)c) || c == '_') {
                std::size_t start = pos_;
                while (pos_ < src_.size() &&
                       (std::isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_'))
                    advance();
                out.push_back({Tok::ident, std::string(src_.substr(start, pos_ - start)), line, col});
                continue;
            }
            if (std::isdigit((unsigned char)c)) {
                std::size_t start = pos_;
                while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_])) advance();
                std::string text(src_.substr(start, pos_ - start));
                if (text == "0") out.push_back({Tok::zero, text, line, col});
                else if (text == "1") out.push_back({Tok::one, text, line, col});
                else throw ParseError(line, col, "numeric literal '" + text +
                                                     "' (only the constants 0 and 1 exist)");
                continue;
            }
            advance();
            switch (c) {
                case '@': out.push_back({Tok::at, "@", line, col}); break;
                case '{': out.push_back({Tok::lbrace, "{", line, col}); break;
                case '}': out.push_back({Tok::rbrace, "}", line, col}); break;
                case '(': out.push_back({Tok::lparen, "(", line, col}); break;
                case ')': out.push_back({Tok::rparen, ")", line, col}); break;
                case '+': out.push_back({Tok::plus, "+", line, col}); break;
                case '*': out.push_back({Tok::star, "*", line, col}); break;
                case ';': out.push_back({Tok::semi, ";", line, col}); break;
                case '!': out.push_back({Tok::bang, "!", line, col}); break;
                case '&': out.push_back({Tok::amp, "&", line, col}); break;
                case '|': out.push_back({Tok::pipe, "|", line, col}); break;
                default:
                    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
            }
        }
    }

private:
    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') { // comment to end of line
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace((unsigned char)c)) {
                advance();
            } else {
                return;
            }
        }
    }
    void advance() {
        if (src_[pos_] == '\n') { line_++; col_ = 1; }
        else col_++;
        pos_++;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> toks, const Signature& sig)
        : toks_(std::move(toks)), sig_(sig) {}

    ProgPtr parse_whole_program() {
        ProgPtr p = parse_sum();
        expect_end();
        return p;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    void next() { if (cur().kind != Tok::end) ++i_; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(cur().line, cur().col, msg);
    }

    void expect(Tok k, const char* what) {
        if (cur().kind != k) fail(std::string("expected ") + what + ", got '" + describe(cur()) + "'");
        next();
    }

    void expect_end() {
        if (cur().kind != Tok::end) fail("trailing input: '" + describe(cur()) + "'");
    }

    static std::string describe(const Token& t) {
        return t.kind == Tok::end ? "end of input" : t.text;
    }

    bool starts_factor() const {
        switch (cur().kind) {
            case Tok::ident: case Tok::zero: case Tok::one:
            case Tok::at: case Tok::lbrace: case Tok::lparen:
            case Tok::semi:
                return true;
            default:
                return false;
        }
    }

    // sum := seqterm ('+' seqterm)*
    ProgPtr parse_sum() {
        ProgPtr p = parse_seq();
        while (cur().kind == Tok::plus) {
            next();
            p = prog_plus(p, parse_seq());
        }
        return p;
    }

    // seqterm := starred (';'? starred)*   (juxtaposition, left-associative)
    ProgPtr parse_seq() {
        ProgPtr p = parse_starred();
        while (true) {
            if (cur().kind == Tok::semi) { next(); }
            if (!starts_factor()) return p;
            p = prog_seq(p, parse_starred());
        }
    }

    ProgPtr parse_starred() {
        ProgPtr p = parse_primary();
        while (cur().kind == Tok::star) {
            next();
            p = prog_star(p);
        }
        return p;
    }

    ProgPtr parse_primary() {
        switch (cur().kind) {
            case Tok::zero: next(); return prog_test(bool_zero());
            case Tok::one: next(); return prog_test(bool_one());
            case Tok::lparen: {
                next();
                ProgPtr p = parse_sum();
                expect(Tok::rparen, "')'");
                return p;
            }
            case Tok::lbrace: {
                next();
                BoolPtr b = parse_bool_or();
                expect(Tok::rbrace, "'}'");
                return prog_test(b);
            }
            case Tok::at: {
                next();
                if (cur().kind == Tok::ident) {
                    int idx = resolve(Signature::Sort::weighting);
                    return prog_weight(weight_var(idx));
                }
                if (cur().kind == Tok::lparen) {
                    next();
                    WeightPtr w = parse_weight_sum();
                    expect(Tok::rparen, "')'");
                    return prog_weight(w);
                }
                fail("expected weighting name or '(' after '@'");
            }
            case Tok::ident: {
                auto hit = sig_.lookup(cur().text);
                if (!hit) fail("undeclared identifier '" + cur().text + "'");
                switch (hit->first) {
                    case Signature::Sort::program: {
                        next();
                        return prog_atomic(hit->second);
                    }
                    case Signature::Sort::boolean:
                        fail("sort clash: '" + cur().text +
                             "' is a Boolean variable; tests belong in braces");
                    case Signature::Sort::weighting:
                        fail("sort clash: '" + cur().text +
                             "' is a weighting variable; write @" + cur().text);
                }
                fail("unreachable");
            }
            case Tok::bang:
                fail("sort clash: negation '!' exists only in the Boolean sort, inside braces");
            default:
                fail("expected a program term, got '" + describe(cur()) + "'");
        }
    }

    // Boolean grammar inside braces: or > and > not, parenthesized freely.
    BoolPtr parse_bool_or() {
        BoolPtr b = parse_bool_and();
        while (cur().kind == Tok::pipe) {
            next();
            b = bool_or(b, parse_bool_and());
        }
        return b;
    }

    BoolPtr parse_bool_and() {
        BoolPtr b = parse_bool_not();
        while (cur().kind == Tok::amp) {
            next();
            b = bool_and(b, parse_bool_not());
        }
        return b;
    }

    BoolPtr parse_bool_not() {
        if (cur().kind == Tok::bang) {
            next();
            return bool_not(parse_bool_not());
        }
        return parse_bool_atom();
    }

    BoolPtr parse_bool_atom() {
        switch (cur().kind) {
            case Tok::zero: next(); return bool_zero();
            case Tok::one: next(); return bool_one();
            case Tok::lparen: {
                next();
                BoolPtr b = parse_bool_or();
                expect(Tok::rparen, "')'");
                return b;
            }
            case Tok::ident: {
                int idx = resolve(Signature::Sort::boolean);
                return bool_var(idx);
            }
            default:
                fail("expected a Boolean expression, got '" + describe(cur()) + "'");
        }
    }

    // Weighting grammar inside @(...): + below juxtaposition-as-mul.
    WeightPtr parse_weight_sum() {
        WeightPtr w = parse_weight_prod();
        while (cur().kind == Tok::plus) {
            next();
            w = weight_add(w, parse_weight_prod());
        }
        return w;
    }

    WeightPtr parse_weight_prod() {
        WeightPtr w = parse_weight_atom();
        while (true) {
            if (cur().kind == Tok::semi) { next(); }
            switch (cur().kind) {
                case Tok::ident: case Tok::zero: case Tok::one: case Tok::lparen:
                    w = weight_mul(w, parse_weight_atom());
                    break;
                default:
                    return w;
            }
        }
    }

    WeightPtr parse_weight_atom() {
        switch (cur().kind) {
            case Tok::zero: next(); return weight_zero();
            case Tok::one: next(); return weight_one();
            case Tok::lparen: {
                next();
                WeightPtr w = parse_weight_sum();
                expect(Tok::rparen, "')'");
                return w;
            }
            case Tok::ident: {
                int idx = resolve(Signature::Sort::weighting);
                return weight_var(idx);
            }
            default:
                fail("expected a weighting expression, got '" + describe(cur()) + "'");
        }
    }

    int resolve(Signature::Sort want) {
        auto hit = sig_.lookup(cur().text);
        if (!hit) fail("undeclared identifier '" + cur().text + "'");
        if (hit->first != want) {
            const char* names[] = {"program", "Boolean", "weighting"};
            fail("sort clash: '" + cur().text + "' is a " +
                 names[(int)hit->first] + " variable, expected a " +
                 names[(int)want] + " variable");
        }
        next();
        return hit->second;
    }

    std::vector<Token> toks_;
    const Signature& sig_;
    std::size_t i_ = 0;
};

} // namespace

ProgPtr parse_program(std::string_view source, const Signature& sig) {
    Lexer lex(source);
    Parser parser(lex.run(), sig);
    return parser.parse_whole_program();
}

std::uint32_t parse_atom_spec(std::string_view source, const Signature& sig) {
    Lexer lex(source);
    std::vector<Token> toks = lex.run();
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError(toks[i].line, toks[i].col, msg);
    };
    if (toks[i].kind != Tok::lbrace) fail("atom must start with '{'");
    ++i;
    std::vector<int> seen(sig.booleans().size(), 0);
    std::uint32_t mask = 0;
    while (toks[i].kind != Tok::rbrace) {
        bool neg = false;
        if (toks[i].kind == Tok::bang) { neg = true; ++i; }
        if (toks[i].kind != Tok::ident) fail("expected a Boolean variable name in atom");
        auto hit = sig.lookup(toks[i].text);
        if (!hit || hit->first != Signature::Sort::boolean)
            fail("'" + toks[i].text + "' is not a declared Boolean variable");
        if (seen[hit->second]++) fail("'" + toks[i].text + "' appears twice in atom");
        if (!neg) mask |= std::uint32_t(1) << hit->second;
        ++i;
    }
    ++i;
    if (toks[i].kind != Tok::end) fail("trailing input after atom");
    for (std::size_t b = 0; b < seen.size(); ++b)
        if (!seen[b])
            throw ParseError(1, 1, "atom does not mention Boolean variable '" +
                                       sig.booleans()[b] + "'");
    return mask;
}

} // namespace kawt
