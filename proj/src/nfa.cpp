#include "iosub/nfa.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <utility>

#include "iosub/errors.hpp"

namespace iosub {

namespace {

std::set<std::size_t> epsilon_closure(const Nfa& n, const std::set<std::size_t>& start) {
    std::set<std::size_t> closure = start;
    std::deque<std::size_t> work(start.begin(), start.end());
    while (!work.empty()) {
        std::size_t q = work.front();
        work.pop_front();
        for (const auto& t : n.transitions) {
            if (t.from == q && !t.label && closure.insert(t.to).second) {
                work.push_back(t.to);
            }
        }
    }
    return closure;
}

std::set<std::size_t> step(const Nfa& n, const std::set<std::size_t>& states, const Symbol& sym) {
    std::set<std::size_t> next;
    for (const auto& t : n.transitions) {
        if (t.label && *t.label == sym && states.count(t.from)) next.insert(t.to);
    }
    return epsilon_closure(n, next);
}

bool contains_final(const Nfa& n, const std::set<std::size_t>& states) {
    for (std::size_t q : states) {
        if (n.final.count(q)) return true;
    }
    return false;
}

/// Per-state shortest distance (in symbols) to acceptance; epsilon moves
/// are free. Unreachable-to-final states get SIZE_MAX.
std::vector<std::size_t> distance_to_final(const Nfa& n) {
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(n.state_count, inf);
    std::deque<std::size_t> work;
    for (std::size_t q : n.final) {
        dist[q] = 0;
        work.push_back(q);
    }
    // 0-1 BFS over reversed transitions (epsilon costs 0, symbol costs 1).
    while (!work.empty()) {
        std::size_t q = work.front();
        work.pop_front();
        for (const auto& t : n.transitions) {
            if (t.to != q) continue;
            std::size_t cost = t.label ? 1 : 0;
            if (dist[q] != inf && dist[q] + cost < dist[t.from]) {
                dist[t.from] = dist[q] + cost;
                if (cost == 0) {
                    work.push_front(t.from);
                } else {
                    work.push_back(t.from);
                }
            }
        }
    }
    return dist;
}

}  // namespace

Nfa regex_to_nfa(const Regex& r) {
    Nfa n;
    for (const Symbol& s : regex_alphabet(r)) n.alphabet.insert(s);

    // Builds the fragment for `r` and returns (entry, exit).
    std::function<std::pair<std::size_t, std::size_t>(const Regex&)> build =
        [&](const Regex& node) -> std::pair<std::size_t, std::size_t> {
        switch (node.kind) {
            case Regex::Kind::Empty: {
                std::size_t in = n.add_state();
                std::size_t out = n.add_state();
                return {in, out};
            }
            case Regex::Kind::Epsilon: {
                std::size_t in = n.add_state();
                std::size_t out = n.add_state();
                n.add_transition(in, std::nullopt, out);
                return {in, out};
            }
            case Regex::Kind::Sym: {
                std::size_t in = n.add_state();
                std::size_t out = n.add_state();
                n.add_transition(in, node.sym, out);
                return {in, out};
            }
            case Regex::Kind::Concat: {
                auto [in, out] = build(*node.children.front());
                for (std::size_t i = 1; i < node.children.size(); ++i) {
                    auto [cin, cout] = build(*node.children[i]);
                    n.add_transition(out, std::nullopt, cin);
                    out = cout;
                }
                return {in, out};
            }
            case Regex::Kind::Alt: {
                std::size_t in = n.add_state();
                std::size_t out = n.add_state();
                for (const RegexPtr& c : node.children) {
                    auto [cin, cout] = build(*c);
                    n.add_transition(in, std::nullopt, cin);
                    n.add_transition(cout, std::nullopt, out);
                }
                return {in, out};
            }
            case Regex::Kind::Star: {
                std::size_t in = n.add_state();
                std::size_t out = n.add_state();
                auto [cin, cout] = build(*node.children.front());
                n.add_transition(in, std::nullopt, out);
                n.add_transition(in, std::nullopt, cin);
                n.add_transition(cout, std::nullopt, cin);
                n.add_transition(cout, std::nullopt, out);
                return {in, out};
            }
        }
        assert(false);
        return {0, 0};
    };

    auto [in, out] = build(r);
    n.initial.insert(in);
    n.final.insert(out);
    return n;
}

Nfa nfa_from_regex_text(const std::string& text) {
    return regex_to_nfa(*regex_parse(text));
}

bool nfa_member(const Nfa& n, const Word& w) {
    std::set<std::size_t> current = epsilon_closure(n, n.initial);
    for (const Symbol& s : w) {
        current = step(n, current, s);
        if (current.empty()) return false;
    }
    return contains_final(n, current);
}

bool nfa_is_empty(const Nfa& n) {
    std::set<std::size_t> reach = epsilon_closure(n, n.initial);
    std::deque<std::size_t> work(reach.begin(), reach.end());
    while (!work.empty()) {
        std::size_t q = work.front();
        work.pop_front();
        if (n.final.count(q)) return false;
        for (const auto& t : n.transitions) {
            if (t.from == q && reach.insert(t.to).second) work.push_back(t.to);
        }
    }
    return true;
}

std::vector<Word> nfa_enumerate(const Nfa& n, std::size_t maxlen) {
    std::vector<Word> result;
    std::vector<std::size_t> dist = distance_to_final(n);
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();

    auto min_dist = [&](const std::set<std::size_t>& states) {
        std::size_t best = inf;
        for (std::size_t q : states) best = std::min(best, dist[q]);
        return best;
    };

    std::vector<Symbol> symbols(n.alphabet.begin(), n.alphabet.end());

    // Breadth-first over determinized prefixes; a prefix survives only if
    // acceptance is still reachable within the remaining length budget.
    struct Item {
        std::set<std::size_t> states;
        Word word;
    };
    std::deque<Item> frontier;
    std::set<std::size_t> start = epsilon_closure(n, n.initial);
    if (min_dist(start) <= maxlen) frontier.push_back({start, {}});

    while (!frontier.empty()) {
        Item item = std::move(frontier.front());
        frontier.pop_front();
        if (contains_final(n, item.states)) result.push_back(item.word);
        if (item.word.size() == maxlen) continue;
        std::size_t budget = maxlen - item.word.size() - 1;
        for (const Symbol& s : symbols) {
            std::set<std::size_t> next = step(n, item.states, s);
            if (next.empty()) continue;
            if (min_dist(next) > budget) continue;
            Word w = item.word;
            w.push_back(s);
            frontier.push_back({std::move(next), std::move(w)});
        }
    }
    std::sort(result.begin(), result.end(), WordOrder{});
    return result;
}

namespace {

/// Copies `src` into `dst` with all state indices shifted by `offset`.
void splice(Nfa& dst, const Nfa& src, std::size_t offset) {
    for (const auto& t : src.transitions) {
        dst.add_transition(t.from + offset, t.label, t.to + offset);
    }
    dst.alphabet.insert(src.alphabet.begin(), src.alphabet.end());
}

}  // namespace

Nfa nfa_union(const Nfa& a, const Nfa& b) {
    Nfa n;
    n.state_count = a.state_count + b.state_count;
    splice(n, a, 0);
    splice(n, b, a.state_count);
    for (std::size_t q : a.initial) n.initial.insert(q);
    for (std::size_t q : a.final) n.final.insert(q);
    for (std::size_t q : b.initial) n.initial.insert(q + a.state_count);
    for (std::size_t q : b.final) n.final.insert(q + a.state_count);
    return n;
}

Nfa nfa_concat(const Nfa& a, const Nfa& b) {
    Nfa n;
    n.state_count = a.state_count + b.state_count;
    splice(n, a, 0);
    splice(n, b, a.state_count);
    for (std::size_t q : a.initial) n.initial.insert(q);
    for (std::size_t qa : a.final) {
        for (std::size_t qb : b.initial) {
            n.add_transition(qa, std::nullopt, qb + a.state_count);
        }
    }
    for (std::size_t q : b.final) n.final.insert(q + a.state_count);
    return n;
}

Nfa nfa_product_intersect(const Nfa& a, const Nfa& b) {
    Nfa n;
    n.alphabet.insert(a.alphabet.begin(), a.alphabet.end());
    n.alphabet.insert(b.alphabet.begin(), b.alphabet.end());

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
    std::deque<std::pair<std::size_t, std::size_t>> work;
    auto id_of = [&](std::size_t qa, std::size_t qb) {
        auto key = std::make_pair(qa, qb);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        std::size_t id = n.add_state();
        ids.emplace(key, id);
        work.push_back(key);
        return id;
    };

    for (std::size_t qa : a.initial) {
        for (std::size_t qb : b.initial) {
            n.initial.insert(id_of(qa, qb));
        }
    }
    while (!work.empty()) {
        auto [qa, qb] = work.front();
        work.pop_front();
        std::size_t from = ids.at({qa, qb});
        if (a.final.count(qa) && b.final.count(qb)) n.final.insert(from);
        for (const auto& t : a.transitions) {
            if (t.from != qa) continue;
            if (!t.label) {
                n.add_transition(from, std::nullopt, id_of(t.to, qb));
            } else {
                for (const auto& u : b.transitions) {
                    if (u.from == qb && u.label && *u.label == *t.label) {
                        n.add_transition(from, t.label, id_of(t.to, u.to));
                    }
                }
            }
        }
        for (const auto& u : b.transitions) {
            if (u.from == qb && !u.label) {
                n.add_transition(from, std::nullopt, id_of(qa, u.to));
            }
        }
    }
    return n;
}

Nfa nfa_homomorphism(const Nfa& n, const std::map<Symbol, Word>& h) {
    Nfa out;
    out.state_count = n.state_count;
    out.initial = n.initial;
    out.final = n.final;
    for (const Symbol& s : n.alphabet) {
        auto it = h.find(s);
        if (it == h.end()) {
            out.alphabet.insert(s);
        } else {
            for (const Symbol& img : it->second) out.alphabet.insert(img);
        }
    }
    for (const auto& t : n.transitions) {
        if (!t.label) {
            out.add_transition(t.from, std::nullopt, t.to);
            continue;
        }
        auto it = h.find(*t.label);
        if (it == h.end()) {
            out.add_transition(t.from, t.label, t.to);
            continue;
        }
        const Word& image = it->second;
        if (image.empty()) {
            out.add_transition(t.from, std::nullopt, t.to);
        } else if (image.size() == 1) {
            out.add_transition(t.from, image.front(), t.to);
        } else {
            // Spell the image along a fresh chain of states.
            std::size_t prev = t.from;
            for (std::size_t i = 0; i + 1 < image.size(); ++i) {
                std::size_t mid = out.add_state();
                out.add_transition(prev, image[i], mid);
                prev = mid;
            }
            out.add_transition(prev, image.back(), t.to);
        }
    }
    return out;
}

Nfa nfa_inverse_homomorphism(const Nfa& n, const std::map<Symbol, Word>& h,
                             const std::set<Symbol>& source_alphabet) {
    Nfa out;
    out.state_count = n.state_count;
    out.initial = n.initial;
    out.final = n.final;
    out.alphabet = source_alphabet;

    // States reachable from each state of n along a fixed word.
    auto reach_along = [&](std::size_t q, const Word& w) {
        std::set<std::size_t> cur = epsilon_closure(n, {q});
        for (const Symbol& s : w) {
            cur = step(n, cur, s);
            if (cur.empty()) break;
        }
        return cur;
    };

    for (const Symbol& s : source_alphabet) {
        auto it = h.find(s);
        Word image = (it != h.end()) ? it->second : Word{s};
        for (std::size_t q = 0; q < n.state_count; ++q) {
            for (std::size_t r : reach_along(q, image)) {
                out.transitions.insert({q, s, r});
            }
        }
    }
    return out;
}

Nfa count_constraint_nfa(const std::set<Symbol>& alphabet, const Symbol& sym,
                         const CountConstraint& constraint) {
    Nfa n;
    n.alphabet = alphabet;
    auto loop_others = [&](std::size_t state) {
        for (const Symbol& s : alphabet) {
            if (s != sym) n.add_transition(state, s, state);
        }
    };
    switch (constraint.kind) {
        case CountConstraint::Kind::EQ0: {
            std::size_t q = n.add_state();
            loop_others(q);
            n.initial.insert(q);
            n.final.insert(q);
            break;
        }
        case CountConstraint::Kind::GE1: {
            std::size_t q0 = n.add_state();
            std::size_t q1 = n.add_state();
            loop_others(q0);
            loop_others(q1);
            n.add_transition(q0, sym, q1);
            n.add_transition(q1, sym, q1);
            n.initial.insert(q0);
            n.final.insert(q1);
            break;
        }
        case CountConstraint::Kind::LE: {
            // Count 0..t; exceeding has no transition.
            std::size_t t = constraint.threshold;
            for (std::size_t i = 0; i <= t; ++i) n.add_state();
            for (std::size_t i = 0; i <= t; ++i) {
                loop_others(i);
                if (i + 1 <= t) n.add_transition(i, sym, i + 1);
                n.final.insert(i);
            }
            n.initial.insert(0);
            break;
        }
        case CountConstraint::Kind::GT: {
            // Count 0..t, plus an accepting sink once count > t.
            std::size_t t = constraint.threshold;
            for (std::size_t i = 0; i <= t + 1; ++i) n.add_state();
            for (std::size_t i = 0; i <= t + 1; ++i) {
                loop_others(i);
                if (i <= t) n.add_transition(i, sym, i + 1);
            }
            n.add_transition(t + 1, sym, t + 1);
            n.initial.insert(0);
            n.final.insert(t + 1);
            break;
        }
    }
    return n;
}

bool all_words_exceed_count(const Nfa& n, const Symbol& sym, std::size_t threshold) {
    if (nfa_is_empty(n)) return false;
    std::set<Symbol> alphabet = n.alphabet;
    alphabet.insert(sym);
    Nfa low = count_constraint_nfa(alphabet, sym, CountConstraint::le(threshold));
    return nfa_is_empty(nfa_product_intersect(n, low));
}

bool nfa_some_word_contains(const Nfa& n, const Symbol& sym) {
    if (!n.alphabet.count(sym)) return false;
    Nfa ge1 = count_constraint_nfa(n.alphabet, sym, CountConstraint::ge1());
    return !nfa_is_empty(nfa_product_intersect(n, ge1));
}

namespace {

/// Epsilon elimination: (p, a, q) whenever some r in closure(p) steps to q
/// on a; a state is final when its closure meets a final state.
Nfa eliminate_epsilon(const Nfa& n) {
    Nfa out;
    out.state_count = n.state_count;
    out.initial = n.initial;
    out.alphabet = n.alphabet;
    for (std::size_t q = 0; q < n.state_count; ++q) {
        std::set<std::size_t> closure = epsilon_closure(n, {q});
        if (contains_final(n, closure)) out.final.insert(q);
        for (std::size_t r : closure) {
            for (const auto& t : n.transitions) {
                if (t.from == r && t.label) out.add_transition(q, t.label, t.to);
            }
        }
    }
    return out;
}

/// Keeps only states both reachable from an initial state and co-reachable
/// to a final state; renumbers densely.
Nfa prune_live(const Nfa& n) {
    std::set<std::size_t> fwd;
    std::deque<std::size_t> work(n.initial.begin(), n.initial.end());
    fwd.insert(n.initial.begin(), n.initial.end());
    while (!work.empty()) {
        std::size_t q = work.front();
        work.pop_front();
        for (const auto& t : n.transitions) {
            if (t.from == q && fwd.insert(t.to).second) work.push_back(t.to);
        }
    }
    std::set<std::size_t> bwd(n.final.begin(), n.final.end());
    work.assign(n.final.begin(), n.final.end());
    while (!work.empty()) {
        std::size_t q = work.front();
        work.pop_front();
        for (const auto& t : n.transitions) {
            if (t.to == q && bwd.insert(t.from).second) work.push_back(t.from);
        }
    }

    std::map<std::size_t, std::size_t> renumber;
    Nfa out;
    out.alphabet = n.alphabet;
    for (std::size_t q = 0; q < n.state_count; ++q) {
        if (fwd.count(q) && bwd.count(q)) renumber[q] = out.add_state();
    }
    for (const auto& t : n.transitions) {
        auto f = renumber.find(t.from);
        auto g = renumber.find(t.to);
        if (f != renumber.end() && g != renumber.end()) {
            out.add_transition(f->second, t.label, g->second);
        }
    }
    for (std::size_t q : n.initial) {
        if (renumber.count(q)) out.initial.insert(renumber.at(q));
    }
    for (std::size_t q : n.final) {
        if (renumber.count(q)) out.final.insert(renumber.at(q));
    }
    return out;
}

/// Partition refinement on (finality, per-symbol successor blocks);
/// merging forward-bisimilar states preserves the language.
Nfa merge_bisimilar(const Nfa& n) {
    if (n.state_count == 0) return n;
    std::map<Symbol, std::size_t> sym_index;
    for (const Symbol& s : n.alphabet) sym_index.emplace(s, sym_index.size());

    std::vector<std::size_t> block(n.state_count, 0);
    for (std::size_t q = 0; q < n.state_count; ++q) {
        block[q] = n.final.count(q) ? 1 : 0;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::vector<std::size_t>, std::size_t> signature_ids;
        std::vector<std::size_t> next(n.state_count, 0);
        for (std::size_t q = 0; q < n.state_count; ++q) {
            // Signature: old block, then sorted (symbol, successor block) pairs.
            std::vector<std::size_t> sig;
            sig.push_back(block[q]);
            std::set<std::pair<std::size_t, std::size_t>> succ;
            for (const auto& t : n.transitions) {
                if (t.from == q && t.label) succ.insert({sym_index.at(*t.label), block[t.to]});
            }
            for (const auto& [s, b] : succ) {
                sig.push_back(s);
                sig.push_back(b);
            }
            auto [it, inserted] = signature_ids.emplace(sig, signature_ids.size());
            next[q] = it->second;
        }
        if (next != block) {
            block = next;
            changed = true;
        }
    }
    std::size_t block_count = *std::max_element(block.begin(), block.end()) + 1;
    Nfa out;
    out.alphabet = n.alphabet;
    out.state_count = block_count;
    for (const auto& t : n.transitions) {
        out.add_transition(block[t.from], t.label, block[t.to]);
    }
    for (std::size_t q : n.initial) out.initial.insert(block[q]);
    for (std::size_t q : n.final) out.final.insert(block[q]);
    return out;
}

}  // namespace

Nfa nfa_normalize(const Nfa& n) {
    Nfa out = merge_bisimilar(prune_live(eliminate_epsilon(n)));
    // Pruning may drop letters from use; keep the declared alphabet stable
    // so dimension order stays predictable for callers.
    out.alphabet = n.alphabet;
    return out;
}

RegexPtr nfa_to_regex(const Nfa& n) {
    Nfa m = nfa_normalize(n);
    if (m.initial.empty() || m.final.empty()) return Regex::empty();

    // State elimination over regex-labelled edges, with fresh start/end.
    std::size_t start = m.state_count;
    std::size_t end = m.state_count + 1;
    std::map<std::pair<std::size_t, std::size_t>, RegexPtr> edge;

    auto add_edge = [&](std::size_t from, std::size_t to, RegexPtr r) {
        auto key = std::make_pair(from, to);
        auto it = edge.find(key);
        if (it == edge.end()) {
            edge.emplace(key, std::move(r));
        } else {
            it->second = Regex::alt({it->second, std::move(r)});
        }
    };

    for (const auto& t : m.transitions) {
        add_edge(t.from, t.to, t.label ? Regex::symbol(*t.label) : Regex::epsilon());
    }
    for (std::size_t q : m.initial) add_edge(start, q, Regex::epsilon());
    for (std::size_t q : m.final) add_edge(q, end, Regex::epsilon());

    auto get = [&](std::size_t from, std::size_t to) -> RegexPtr {
        auto it = edge.find({from, to});
        return it == edge.end() ? nullptr : it->second;
    };

    auto cat3 = [&](RegexPtr a, RegexPtr loop, RegexPtr b) -> RegexPtr {
        std::vector<RegexPtr> parts;
        if (a->kind != Regex::Kind::Epsilon) parts.push_back(a);
        if (loop) {
            if (loop->kind != Regex::Kind::Epsilon && loop->kind != Regex::Kind::Empty) {
                parts.push_back(Regex::star(loop));
            }
        }
        if (b->kind != Regex::Kind::Epsilon) parts.push_back(b);
        if (parts.empty()) return Regex::epsilon();
        return Regex::concat(std::move(parts));
    };

    for (std::size_t victim = 0; victim < m.state_count; ++victim) {
        RegexPtr loop = get(victim, victim);
        std::vector<std::pair<std::size_t, RegexPtr>> in_edges;
        std::vector<std::pair<std::size_t, RegexPtr>> out_edges;
        for (const auto& [key, r] : edge) {
            if (key.second == victim && key.first != victim) in_edges.push_back({key.first, r});
            if (key.first == victim && key.second != victim) out_edges.push_back({key.second, r});
        }
        for (auto it = edge.begin(); it != edge.end();) {
            if (it->first.first == victim || it->first.second == victim) {
                it = edge.erase(it);
            } else {
                ++it;
            }
        }
        for (const auto& [src, rin] : in_edges) {
            for (const auto& [dst, rout] : out_edges) {
                add_edge(src, dst, cat3(rin, loop, rout));
            }
        }
    }

    RegexPtr r = get(start, end);
    return r ? r : Regex::empty();
}

}  // namespace iosub
