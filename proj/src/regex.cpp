#include "iosub/regex.hpp"

#include <cctype>
#include <utility>

#include "iosub/errors.hpp"

namespace iosub {

RegexPtr Regex::empty() {
    auto r = std::make_shared<Regex>();
    r->kind = Kind::Empty;
    return r;
}

RegexPtr Regex::epsilon() {
    auto r = std::make_shared<Regex>();
    r->kind = Kind::Epsilon;
    return r;
}

RegexPtr Regex::symbol(Symbol s) {
    auto r = std::make_shared<Regex>();
    r->kind = Kind::Sym;
    r->sym = std::move(s);
    return r;
}

RegexPtr Regex::concat(std::vector<RegexPtr> parts) {
    if (parts.size() == 1) return parts.front();
    auto r = std::make_shared<Regex>();
    r->kind = Kind::Concat;
    r->children = std::move(parts);
    return r;
}

RegexPtr Regex::alt(std::vector<RegexPtr> parts) {
    if (parts.size() == 1) return parts.front();
    auto r = std::make_shared<Regex>();
    r->kind = Kind::Alt;
    r->children = std::move(parts);
    return r;
}

RegexPtr Regex::star(RegexPtr child) {
    auto r = std::make_shared<Regex>();
    r->kind = Kind::Star;
    r->children.push_back(std::move(child));
    return r;
}

namespace {

struct Token {
    enum class Kind { Ident, LParen, RParen, Bar, Star, End };
    Kind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            step();
        }
        if (pos_ >= text_.size()) {
            current_ = {Token::Kind::End, "", line_, col_};
            return;
        }
        char c = text_[pos_];
        std::size_t line = line_, col = col_;
        switch (c) {
            case '(': step(); current_ = {Token::Kind::LParen, "(", line, col}; return;
            case ')': step(); current_ = {Token::Kind::RParen, ")", line, col}; return;
            case '|': step(); current_ = {Token::Kind::Bar, "|", line, col}; return;
            case '*': step(); current_ = {Token::Kind::Star, "*", line, col}; return;
            default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string ident;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
                    ident += d;
                    step();
                } else {
                    break;
                }
            }
            current_ = {Token::Kind::Ident, ident, line, col};
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "' in regex", line, col);
    }

    void step() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    Token current_{Token::Kind::End, "", 1, 1};
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    RegexPtr parse() {
        RegexPtr r = parse_alt();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End) {
            throw SyntaxError("unexpected '" + t.text + "' after regex", t.line, t.column);
        }
        return r;
    }

private:
    RegexPtr parse_alt() {
        std::vector<RegexPtr> parts;
        parts.push_back(parse_cat());
        while (lex_.peek().kind == Token::Kind::Bar) {
            lex_.take();
            parts.push_back(parse_cat());
        }
        return Regex::alt(std::move(parts));
    }

    RegexPtr parse_cat() {
        std::vector<RegexPtr> parts;
        parts.push_back(parse_rep());
        while (starts_atom(lex_.peek())) {
            parts.push_back(parse_rep());
        }
        return Regex::concat(std::move(parts));
    }

    RegexPtr parse_rep() {
        RegexPtr atom = parse_atom();
        if (lex_.peek().kind == Token::Kind::Star) {
            lex_.take();
            return Regex::star(std::move(atom));
        }
        return atom;
    }

    RegexPtr parse_atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::Ident:
                if (t.text == "eps") return Regex::epsilon();
                if (t.text == "empty") return Regex::empty();
                return Regex::symbol(Symbol(t.text));
            case Token::Kind::LParen: {
                RegexPtr inner = parse_alt();
                Token close = lex_.take();
                if (close.kind != Token::Kind::RParen) {
                    throw SyntaxError("expected ')'", close.line, close.column);
                }
                return inner;
            }
            default:
                throw SyntaxError("expected symbol, 'eps', 'empty' or '('", t.line, t.column);
        }
    }

    static bool starts_atom(const Token& t) {
        return t.kind == Token::Kind::Ident || t.kind == Token::Kind::LParen;
    }

    Lexer lex_;
};

void collect_alphabet(const Regex& r, std::set<Symbol>& out) {
    switch (r.kind) {
        case Regex::Kind::Sym:
            out.insert(r.sym);
            break;
        case Regex::Kind::Empty:
        case Regex::Kind::Epsilon:
            break;
        default:
            for (const RegexPtr& c : r.children) collect_alphabet(*c, out);
            break;
    }
}

// Precedence: Alt < Concat < Star/atoms.
enum class Prec { Alt = 0, Concat = 1, Atom = 2 };

void render(const Regex& r, Prec context, std::string& out) {
    auto wrap = [&](Prec mine, auto&& body) {
        bool parens = static_cast<int>(mine) < static_cast<int>(context);
        if (parens) out += "(";
        body();
        if (parens) out += ")";
    };
    switch (r.kind) {
        case Regex::Kind::Empty:
            out += "empty";
            break;
        case Regex::Kind::Epsilon:
            out += "eps";
            break;
        case Regex::Kind::Sym:
            out += r.sym.name;
            break;
        case Regex::Kind::Star:
            wrap(Prec::Atom, [&] {
                render(*r.children.front(), Prec::Atom, out);
            });
            out += "*";
            break;
        case Regex::Kind::Concat:
            wrap(Prec::Concat, [&] {
                for (std::size_t i = 0; i < r.children.size(); ++i) {
                    if (i > 0) out += " ";
                    render(*r.children[i], Prec::Atom, out);
                }
            });
            break;
        case Regex::Kind::Alt:
            wrap(Prec::Alt, [&] {
                for (std::size_t i = 0; i < r.children.size(); ++i) {
                    if (i > 0) out += " | ";
                    render(*r.children[i], Prec::Concat, out);
                }
            });
            break;
    }
}

}  // namespace

RegexPtr regex_parse(const std::string& text) {
    Parser p(text);
    return p.parse();
}

std::set<Symbol> regex_alphabet(const Regex& r) {
    std::set<Symbol> out;
    collect_alphabet(r, out);
    return out;
}

std::string regex_to_string(const Regex& r) {
    std::string out;
    render(r, Prec::Alt, out);
    return out;
}

}  // namespace iosub
