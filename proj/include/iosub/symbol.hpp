#ifndef IOSUB_SYMBOL_HPP
#define IOSUB_SYMBOL_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace iosub {

/// An interned alphabet letter. Symbols compare by name; the name must match
/// [A-Za-z][A-Za-z0-9_]*.
struct Symbol {
    std::string name;

    Symbol() = default;
    explicit Symbol(std::string n) : name(std::move(n)) {}

    auto operator<=>(const Symbol&) const = default;
};

/// Returns true iff `name` is a well-formed symbol name.
bool is_valid_symbol_name(const std::string& name);

/// A finite word; the empty vector is epsilon.
using Word = std::vector<Symbol>;

/// Number of occurrences of `sym` in `w`.
std::size_t count_occurrences(const Word& w, const Symbol& sym);

/// Space-separated rendering; epsilon renders as the empty string.
std::string word_to_string(const Word& w);

/// Orders words by (length, lexicographic), the enumeration order used
/// throughout.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

}  // namespace iosub

#endif  // IOSUB_SYMBOL_HPP
