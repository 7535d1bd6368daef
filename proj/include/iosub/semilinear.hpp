#ifndef IOSUB_SEMILINEAR_HPP
#define IOSUB_SEMILINEAR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "iosub/nfa.hpp"
#include "iosub/symbol.hpp"

namespace iosub {

/// Occurrence-count vector over a sorted, duplicate-free dimension list.
struct ParikhVector {
    std::vector<Symbol> dims;
    std::vector<std::uint64_t> counts;

    ParikhVector() = default;
    ParikhVector(std::vector<Symbol> dims_, std::vector<std::uint64_t> counts_);

    static ParikhVector zero(std::vector<Symbol> dims_);
    static ParikhVector of_word(const Word& w, std::vector<Symbol> dims_);

    std::uint64_t at(const Symbol& dim) const;
    std::uint64_t total() const;
    bool is_zero() const;

    /// Same vector re-expressed over a superset dimension list.
    ParikhVector extended_to(const std::vector<Symbol>& new_dims) const;

    auto operator<=>(const ParikhVector&) const = default;
};

ParikhVector operator+(const ParikhVector& a, const ParikhVector& b);
ParikhVector operator*(std::uint64_t k, const ParikhVector& v);

std::string to_string(const ParikhVector& v);

/// base + natural combinations of the periods.
struct LinearSet {
    ParikhVector base;
    std::vector<ParikhVector> periods;  // sorted, duplicate-free

    auto operator<=>(const LinearSet&) const = default;
};

/// Finite union of linear sets over a shared dimension list. The empty
/// language is the set with zero components.
struct SemilinearSet {
    std::vector<Symbol> dims;
    std::vector<LinearSet> components;
};

/// Sorts and dedupes components and their periods (zero periods dropped).
SemilinearSet canonicalize(SemilinearSet s);

/// True iff v lies in the set; bounded backtracking over period
/// multiplicities. Throws DimensionMismatchError on differing dims.
bool semilinear_member(const SemilinearSet& s, const ParikhVector& v);

/// Constructive Parikh image of L(n), extensionally equal to p(L(n)).
/// For every live-state subset S containing an initial and a final state,
/// bases are Parikh vectors of accepting runs visiting exactly S with
/// fewer than |S|*(|S|+1) transitions, and periods are Parikh vectors of
/// the simple cycles inside S. The result is deduped and linear sets
/// subsumed by another component are dropped.
SemilinearSet parikh(const Nfa& n);

/// All vectors of the set whose coordinates are all <= bound, sorted.
std::vector<ParikhVector> semilinear_vectors_up_to(const SemilinearSet& s, std::uint64_t bound);

}  // namespace iosub

#endif  // IOSUB_SEMILINEAR_HPP
