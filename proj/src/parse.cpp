#include "rqc/parse.hpp"

#include "rqc/error.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace rqc {

namespace {

enum class Tok { Atom, True, False, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

const char* describe(Tok kind) {
    switch (kind) {
    case Tok::Atom: return "atom";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::Not: return "'!'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
    }
    return "?";
}

std::string describe(const Token& t) {
    if (t.kind == Tok::End) {
        return "end of input";
    }
    return "'" + t.text + "'";
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_whitespace();
            int line = line_;
            int column = column_;
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, "", line, column});
                return out;
            }
            char c = text_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string word = take_word();
                Tok kind = Tok::Atom;
                if (word == "true") {
                    kind = Tok::True;
                } else if (word == "false") {
                    kind = Tok::False;
                } else if (word == "not") {
                    kind = Tok::Not;
                }
                out.push_back({kind, std::move(word), line, column});
                continue;
            }
            switch (c) {
            case '!':
                advance();
                out.push_back({Tok::Not, "!", line, column});
                break;
            case '&':
                advance();
                out.push_back({Tok::And, "&", line, column});
                break;
            case '|':
                advance();
                out.push_back({Tok::Or, "|", line, column});
                break;
            case '(':
                advance();
                out.push_back({Tok::LParen, "(", line, column});
                break;
            case ')':
                advance();
                out.push_back({Tok::RParen, ")", line, column});
                break;
            case '-':
                advance();
                if (pos_ < text_.size() && text_[pos_] == '>') {
                    advance();
                    out.push_back({Tok::Implies, "->", line, column});
                } else {
                    throw ParseError(line, column, "'->'", snippet(pos_ - 1));
                }
                break;
            case '<':
                advance();
                if (pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>') {
                    advance();
                    advance();
                    out.push_back({Tok::Iff, "<->", line, column});
                } else {
                    throw ParseError(line, column, "'<->'", snippet(pos_ - 1));
                }
                break;
            default:
                throw ParseError(line, column, "a formula token", snippet(pos_));
            }
        }
    }

private:
    void skip_whitespace() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            advance();
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string take_word() {
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                advance();
            } else {
                break;
            }
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string snippet(std::size_t at) const {
        return "'" + std::string(1, text_[at]) + "'";
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Formula run() {
        if (peek().kind == Tok::End) {
            throw ParseError(peek().line, peek().column, "a formula", "end of input");
        }
        Formula f = parse_iff();
        expect(Tok::End);
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    Token take() { return tokens_[pos_++]; }

    void expect(Tok kind) {
        if (peek().kind != kind) {
            throw ParseError(peek().line, peek().column, describe(kind), describe(peek()));
        }
        ++pos_;
    }

    bool accept(Tok kind) {
        if (peek().kind == kind) {
            ++pos_;
            return true;
        }
        return false;
    }

    Formula parse_iff() {
        Formula lhs = parse_implies();
        if (accept(Tok::Iff)) {
            return Formula::iff(std::move(lhs), parse_iff());
        }
        return lhs;
    }

    Formula parse_implies() {
        Formula lhs = parse_or();
        if (accept(Tok::Implies)) {
            return Formula::implies(std::move(lhs), parse_implies());
        }
        return lhs;
    }

    Formula parse_or() {
        std::vector<Formula> parts;
        parts.push_back(parse_and());
        while (accept(Tok::Or)) {
            parts.push_back(parse_and());
        }
        if (parts.size() == 1) {
            return std::move(parts.front());
        }
        return Formula::disj(std::move(parts));
    }

    Formula parse_and() {
        std::vector<Formula> parts;
        parts.push_back(parse_unary());
        while (accept(Tok::And)) {
            parts.push_back(parse_unary());
        }
        if (parts.size() == 1) {
            return std::move(parts.front());
        }
        return Formula::conj(std::move(parts));
    }

    Formula parse_unary() {
        if (accept(Tok::Not)) {
            return Formula::negate(parse_unary());
        }
        return parse_primary();
    }

    Formula parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::True:
            take();
            return Formula::constant(true);
        case Tok::False:
            take();
            return Formula::constant(false);
        case Tok::Atom:
            return Formula::atom(take().text);
        case Tok::LParen: {
            take();
            Formula inner = parse_iff();
            expect(Tok::RParen);
            return inner;
        }
        default:
            throw ParseError(t.line, t.column, "an atom, constant, '!' or '('", describe(t));
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

Formula parse_formula(std::string_view text) {
    return Parser(Lexer(text).run()).run();
}

} // namespace rqc
