#ifndef IOSUB_REGEX_HPP
#define IOSUB_REGEX_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "iosub/symbol.hpp"

namespace iosub {

/// Regular-expression AST. Concat/Alt children are non-empty by
/// construction; singleton lists are collapsed by the parser.
struct Regex;
using RegexPtr = std::shared_ptr<const Regex>;

struct Regex {
    enum class Kind { Empty, Epsilon, Sym, Concat, Alt, Star };

    Kind kind = Kind::Empty;
    Symbol sym;                     // Kind::Sym
    std::vector<RegexPtr> children; // Concat, Alt, Star (one child)

    static RegexPtr empty();
    static RegexPtr epsilon();
    static RegexPtr symbol(Symbol s);
    static RegexPtr concat(std::vector<RegexPtr> parts);
    static RegexPtr alt(std::vector<RegexPtr> parts);
    static RegexPtr star(RegexPtr child);
};

/// Parses the textual grammar
///   alt := cat ("|" cat)* ; cat := rep+ ; rep := atom "*"? ;
///   atom := sym | "eps" | "empty" | "(" alt ")"
/// Tokens are whitespace-separated or delimited by parens/star/bar.
/// Throws SyntaxError with position on malformed input.
RegexPtr regex_parse(const std::string& text);

/// All symbols mentioned in the expression, sorted.
std::set<Symbol> regex_alphabet(const Regex& r);

/// Renders with minimal parentheses; re-parses to an equal tree.
std::string regex_to_string(const Regex& r);

}  // namespace iosub

#endif  // IOSUB_REGEX_HPP
