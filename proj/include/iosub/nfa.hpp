#ifndef IOSUB_NFA_HPP
#define IOSUB_NFA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "iosub/regex.hpp"
#include "iosub/symbol.hpp"

namespace iosub {

/// Nondeterministic finite automaton over interned symbols. Epsilon
/// transitions are represented by an empty label. Values are immutable
/// once built; every operation below returns a fresh automaton.
struct Nfa {
    struct Transition {
        std::size_t from;
        std::optional<Symbol> label;  // nullopt = epsilon
        std::size_t to;

        auto operator<=>(const Transition&) const = default;
    };

    std::size_t state_count = 0;
    std::set<Transition> transitions;
    std::set<std::size_t> initial;
    std::set<std::size_t> final;
    std::set<Symbol> alphabet;

    std::size_t add_state() { return state_count++; }

    void add_transition(std::size_t from, std::optional<Symbol> label, std::size_t to) {
        if (label) alphabet.insert(*label);
        transitions.insert({from, std::move(label), to});
    }
};

/// Thompson-style construction; the language of the result equals the
/// language of `r`. The alphabet is the set of mentioned symbols.
Nfa regex_to_nfa(const Regex& r);

/// Convenience: parse + construct.
Nfa nfa_from_regex_text(const std::string& text);

bool nfa_member(const Nfa& n, const Word& w);

bool nfa_is_empty(const Nfa& n);

/// Exactly the accepted words of length <= maxlen, sorted by
/// (length, lexicographic). Dead prefixes are pruned, so the cost is
/// proportional to the live prefix tree rather than |alphabet|^maxlen.
std::vector<Word> nfa_enumerate(const Nfa& n, std::size_t maxlen);

Nfa nfa_union(const Nfa& a, const Nfa& b);
Nfa nfa_concat(const Nfa& a, const Nfa& b);

/// Product automaton for the intersection; epsilon moves advance one side
/// at a time. Only states reachable from the initial pair are built.
Nfa nfa_product_intersect(const Nfa& a, const Nfa& b);

/// Image under the string homomorphism `h`; symbols outside the map are
/// fixed. Erasing images are allowed and become epsilon transitions.
Nfa nfa_homomorphism(const Nfa& n, const std::map<Symbol, Word>& h);

/// Standard state-preserving inverse-homomorphism construction: the result
/// accepts w over `source_alphabet` iff h(w) is accepted by `n`.
Nfa nfa_inverse_homomorphism(const Nfa& n, const std::map<Symbol, Word>& h,
                             const std::set<Symbol>& source_alphabet);

/// Occurrence-count constraints for a single symbol.
struct CountConstraint {
    enum class Kind { EQ0, GE1, LE, GT };
    Kind kind;
    std::size_t threshold = 0;  // LE / GT only

    static CountConstraint eq0() { return {Kind::EQ0, 0}; }
    static CountConstraint ge1() { return {Kind::GE1, 0}; }
    static CountConstraint le(std::size_t t) { return {Kind::LE, t}; }
    static CountConstraint gt(std::size_t t) { return {Kind::GT, t}; }
};

/// Accepts exactly the words over `alphabet` whose count of `sym`
/// satisfies the constraint.
Nfa count_constraint_nfa(const std::set<Symbol>& alphabet, const Symbol& sym,
                         const CountConstraint& constraint);

/// True iff L(n) is nonempty and every accepted word has
/// count(sym) > threshold.
bool all_words_exceed_count(const Nfa& n, const Symbol& sym, std::size_t threshold);

/// True iff some accepted word contains `sym`.
bool nfa_some_word_contains(const Nfa& n, const Symbol& sym);

/// Epsilon-free automaton with the same language, restricted to live
/// (reachable and co-reachable) states and reduced by merging
/// forward-bisimilar states. Used as the normalization step ahead of
/// Parikh extraction and fed to the run-enumeration there.
Nfa nfa_normalize(const Nfa& n);

/// Regex with the same language, via state elimination over the
/// normalized automaton.
RegexPtr nfa_to_regex(const Nfa& n);

}  // namespace iosub

#endif  // IOSUB_NFA_HPP
