#include "iosub/symbol.hpp"

#include <cctype>

namespace iosub {

bool is_valid_symbol_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

std::size_t count_occurrences(const Word& w, const Symbol& sym) {
    std::size_t n = 0;
    for (const Symbol& s : w) {
        if (s == sym) ++n;
    }
    return n;
}

std::string word_to_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ' ';
        out += w[i].name;
    }
    return out;
}

}  // namespace iosub
