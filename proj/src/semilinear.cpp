#include "iosub/semilinear.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>

#include "iosub/errors.hpp"

namespace iosub {

ParikhVector::ParikhVector(std::vector<Symbol> dims_, std::vector<std::uint64_t> counts_)
    : dims(std::move(dims_)), counts(std::move(counts_)) {
    assert(dims.size() == counts.size());
    assert(std::is_sorted(dims.begin(), dims.end()));
    assert(std::adjacent_find(dims.begin(), dims.end()) == dims.end());
}

ParikhVector ParikhVector::zero(std::vector<Symbol> dims_) {
    std::vector<std::uint64_t> counts_(dims_.size(), 0);
    return ParikhVector(std::move(dims_), std::move(counts_));
}

ParikhVector ParikhVector::of_word(const Word& w, std::vector<Symbol> dims_) {
    ParikhVector v = zero(std::move(dims_));
    for (const Symbol& s : w) {
        auto it = std::lower_bound(v.dims.begin(), v.dims.end(), s);
        assert(it != v.dims.end() && *it == s);
        ++v.counts[static_cast<std::size_t>(it - v.dims.begin())];
    }
    return v;
}

std::uint64_t ParikhVector::at(const Symbol& dim) const {
    auto it = std::lower_bound(dims.begin(), dims.end(), dim);
    if (it == dims.end() || *it != dim) return 0;
    return counts[static_cast<std::size_t>(it - dims.begin())];
}

std::uint64_t ParikhVector::total() const {
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts) sum += c;
    return sum;
}

bool ParikhVector::is_zero() const {
    for (std::uint64_t c : counts) {
        if (c != 0) return false;
    }
    return true;
}

ParikhVector ParikhVector::extended_to(const std::vector<Symbol>& new_dims) const {
    ParikhVector out = zero(new_dims);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        auto it = std::lower_bound(new_dims.begin(), new_dims.end(), dims[i]);
        if (it == new_dims.end() || *it != dims[i]) {
            if (counts[i] != 0) {
                throw DimensionMismatchError("cannot drop non-zero dimension " + dims[i].name);
            }
            continue;
        }
        out.counts[static_cast<std::size_t>(it - new_dims.begin())] = counts[i];
    }
    return out;
}

ParikhVector operator+(const ParikhVector& a, const ParikhVector& b) {
    if (a.dims != b.dims) throw DimensionMismatchError("vector addition over differing dims");
    ParikhVector out = a;
    for (std::size_t i = 0; i < out.counts.size(); ++i) out.counts[i] += b.counts[i];
    return out;
}

ParikhVector operator*(std::uint64_t k, const ParikhVector& v) {
    ParikhVector out = v;
    for (auto& c : out.counts) c *= k;
    return out;
}

std::string to_string(const ParikhVector& v) {
    std::string out = "<";
    for (std::size_t i = 0; i < v.dims.size(); ++i) {
        if (i > 0) out += ",";
        out += v.dims[i].name + ":" + std::to_string(v.counts[i]);
    }
    out += ">";
    return out;
}

SemilinearSet canonicalize(SemilinearSet s) {
    for (LinearSet& c : s.components) {
        std::vector<ParikhVector> periods;
        for (ParikhVector& p : c.periods) {
            if (!p.is_zero()) periods.push_back(std::move(p));
        }
        std::sort(periods.begin(), periods.end());
        periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
        c.periods = std::move(periods);
    }
    std::sort(s.components.begin(), s.components.end());
    s.components.erase(std::unique(s.components.begin(), s.components.end()),
                       s.components.end());
    return s;
}

namespace {

bool linear_member(const LinearSet& c, const ParikhVector& v) {
    // Residual after the base; then backtracking over period multiplicities.
    for (std::size_t i = 0; i < v.counts.size(); ++i) {
        if (v.counts[i] < c.base.counts[i]) return false;
    }
    std::vector<std::uint64_t> residual(v.counts.size());
    for (std::size_t i = 0; i < v.counts.size(); ++i) {
        residual[i] = v.counts[i] - c.base.counts[i];
    }

    std::function<bool(std::size_t, std::vector<std::uint64_t>&)> solve =
        [&](std::size_t idx, std::vector<std::uint64_t>& rem) -> bool {
        bool all_zero = true;
        for (std::uint64_t r : rem) {
            if (r != 0) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) return true;
        if (idx == c.periods.size()) return false;
        const ParikhVector& p = c.periods[idx];
        // Periods are non-zero, so some coordinate bounds the multiplicity.
        std::uint64_t kmax = UINT64_MAX;
        for (std::size_t i = 0; i < p.counts.size(); ++i) {
            if (p.counts[i] != 0) kmax = std::min(kmax, rem[i] / p.counts[i]);
        }
        for (std::uint64_t k = 0; k <= kmax; ++k) {
            std::vector<std::uint64_t> next = rem;
            for (std::size_t i = 0; i < p.counts.size(); ++i) next[i] -= k * p.counts[i];
            if (solve(idx + 1, next)) return true;
        }
        return false;
    };
    return solve(0, residual);
}

/// True iff every vector of `b` lies in `a` (syntactic check: b's base is
/// a member of `a` and each period of b is a period of a).
bool subsumes(const LinearSet& a, const LinearSet& b) {
    if (!linear_member(a, b.base)) return false;
    for (const ParikhVector& p : b.periods) {
        if (!std::binary_search(a.periods.begin(), a.periods.end(), p)) return false;
    }
    return true;
}

}  // namespace

bool semilinear_member(const SemilinearSet& s, const ParikhVector& v) {
    if (s.dims != v.dims) throw DimensionMismatchError("semilinear_member over differing dims");
    for (const LinearSet& c : s.components) {
        if (linear_member(c, v)) return true;
    }
    return false;
}

namespace {

struct RunKey {
    std::size_t state;
    std::uint64_t mask;
    std::vector<std::uint64_t> counts;

    auto operator<=>(const RunKey&) const = default;
};

}  // namespace

SemilinearSet parikh(const Nfa& n) {
    Nfa m = nfa_normalize(n);

    SemilinearSet out;
    out.dims.assign(m.alphabet.begin(), m.alphabet.end());
    if (m.state_count == 0) return out;

    std::map<Symbol, std::size_t> dim_index;
    for (std::size_t i = 0; i < out.dims.size(); ++i) dim_index[out.dims[i]] = i;

    // Adjacency with dimension-indexed labels; m is epsilon-free.
    struct Edge {
        std::size_t to;
        std::size_t dim;
    };
    std::vector<std::vector<Edge>> adj(m.state_count);
    for (const auto& t : m.transitions) {
        adj[t.from].push_back({t.to, dim_index.at(*t.label)});
    }
    for (auto& edges : adj) {
        std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
            return std::tie(a.to, a.dim) < std::tie(b.to, b.dim);
        });
    }

    const std::size_t nstates = m.state_count;
    assert(nstates <= 63);

    // Simple cycles whose states all lie in a given subset; enumerated once
    // per anchor state (the smallest state on the cycle) and filtered per
    // subset below.
    struct Cycle {
        std::uint64_t mask;
        ParikhVector vec;
    };
    std::vector<Cycle> cycles;
    {
        std::vector<std::uint64_t> counts(out.dims.size(), 0);
        std::function<void(std::size_t, std::size_t, std::uint64_t)> dfs =
            [&](std::size_t anchor, std::size_t current, std::uint64_t mask) {
                for (const Edge& e : adj[current]) {
                    if (e.to == anchor) {
                        ++counts[e.dim];
                        cycles.push_back({mask, ParikhVector(out.dims, counts)});
                        --counts[e.dim];
                    } else if (e.to > anchor && !(mask & (1ull << e.to))) {
                        ++counts[e.dim];
                        dfs(anchor, e.to, mask | (1ull << e.to));
                        --counts[e.dim];
                    }
                }
            };
        for (std::size_t anchor = 0; anchor < nstates; ++anchor) {
            dfs(anchor, anchor, 1ull << anchor);
        }
    }

    std::uint64_t full = (nstates >= 64) ? ~0ull : ((1ull << nstates) - 1);
    for (std::uint64_t subset = 1; subset <= full; ++subset) {
        bool has_initial = false, has_final = false;
        std::size_t size = 0;
        for (std::size_t q = 0; q < nstates; ++q) {
            if (subset & (1ull << q)) {
                ++size;
                if (m.initial.count(q)) has_initial = true;
                if (m.final.count(q)) has_final = true;
            }
        }
        if (!has_initial || !has_final) continue;

        const std::size_t bound = size * (size + 1);

        // DP over (state, visited-subset, Parikh vector) for runs confined
        // to `subset`, by increasing run length.
        std::set<RunKey> seen;
        std::deque<RunKey> frontier;
        for (std::size_t q : m.initial) {
            if (!(subset & (1ull << q))) continue;
            RunKey k{q, 1ull << q, std::vector<std::uint64_t>(out.dims.size(), 0)};
            if (seen.insert(k).second) frontier.push_back(k);
        }

        std::set<ParikhVector> bases;
        while (!frontier.empty()) {
            RunKey k = std::move(frontier.front());
            frontier.pop_front();
            if (k.mask == subset && m.final.count(k.state)) {
                bases.insert(ParikhVector(out.dims, k.counts));
            }
            std::uint64_t len = 0;
            for (std::uint64_t c : k.counts) len += c;
            if (len + 1 >= bound) continue;
            for (const Edge& e : adj[k.state]) {
                if (!(subset & (1ull << e.to))) continue;
                RunKey next{e.to, k.mask | (1ull << e.to), k.counts};
                ++next.counts[e.dim];
                if (seen.insert(next).second) frontier.push_back(std::move(next));
            }
        }
        if (bases.empty()) continue;

        std::vector<ParikhVector> periods;
        for (const Cycle& c : cycles) {
            if ((c.mask & subset) == c.mask) periods.push_back(c.vec);
        }
        std::sort(periods.begin(), periods.end());
        periods.erase(std::unique(periods.begin(), periods.end()), periods.end());

        for (const ParikhVector& base : bases) {
            out.components.push_back({base, periods});
        }
    }

    out = canonicalize(std::move(out));

    // Drop components wholly contained in another; keeps the set small and
    // gives leaf languages like a^2 a^* a single-component image.
    std::vector<LinearSet> kept;
    for (std::size_t i = 0; i < out.components.size(); ++i) {
        bool absorbed = false;
        for (std::size_t j = 0; j < out.components.size() && !absorbed; ++j) {
            if (i == j) continue;
            if (subsumes(out.components[j], out.components[i])) {
                // Break ties between mutually-subsuming equal sets by index.
                if (subsumes(out.components[i], out.components[j]) && i < j) continue;
                absorbed = true;
            }
        }
        if (!absorbed) kept.push_back(out.components[i]);
    }
    out.components = std::move(kept);
    return out;
}

std::vector<ParikhVector> semilinear_vectors_up_to(const SemilinearSet& s, std::uint64_t bound) {
    std::set<ParikhVector> found;
    for (const LinearSet& c : s.components) {
        bool base_ok = true;
        for (std::uint64_t v : c.base.counts) {
            if (v > bound) {
                base_ok = false;
                break;
            }
        }
        if (!base_ok) continue;
        // BFS over period multiples staying within the bound.
        std::set<ParikhVector> seen{c.base};
        std::deque<ParikhVector> work{c.base};
        while (!work.empty()) {
            ParikhVector v = std::move(work.front());
            work.pop_front();
            found.insert(v);
            for (const ParikhVector& p : c.periods) {
                ParikhVector next = v + p;
                bool ok = true;
                for (std::uint64_t x : next.counts) {
                    if (x > bound) {
                        ok = false;
                        break;
                    }
                }
                if (ok && seen.insert(next).second) work.push_back(next);
            }
        }
    }
    return std::vector<ParikhVector>(found.begin(), found.end());
}

}  // namespace iosub
