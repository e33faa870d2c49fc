#ifndef SWAPPOLY_PATTERN_HPP
#define SWAPPOLY_PATTERN_HPP

#include "swappoly/evaluate.hpp"

namespace swappoly {

// Work budget for streaming alternation sums, counted in monomial
// evaluations (one leaf of the permutation enumeration = one evaluated
// monomial tuple). 10^7 admits the 9! sums of d = 3 and refuses 16!.
struct StreamBudget {
    unsigned long long max_monomial_evals = 10'000'000ULL;
};

// A tensor product of monomial slots, alternated in one or two variable
// sets. Each letter of the pattern must occur exactly once and belong to
// exactly one alternation set (multilinearity).
struct MonomialPattern {
    std::vector<std::vector<Letter>> slots;
    std::vector<std::vector<Letter>> alt_sets; // 1 or 2 sets

    static MonomialPattern single(std::vector<std::vector<Letter>> slots);
};

// Exact streaming evaluation of Alt_{set1}(Alt_{set2}) applied to the slot
// tensor, without materializing the symbolic expansion. Result is identical
// to alternate(...) + eval_tensor. Work = prod |set_i|!.
TensorOperator alt_eval_stream(const MonomialPattern& pat, const Assignment& a,
                               const StreamBudget& budget = {}, int threads = 1);

// One chain item: a slot of the X pattern (side 0) or Y pattern (side 1).
struct ChainItem {
    int side;
    int slot;
};

// How the X monomials and Y monomials interleave into the target tensor
// slots: one chain per target slot, items multiplied left to right.
struct InterleaveDescriptor {
    std::vector<std::vector<ChainItem>> chains;
};

// Factorized evaluation of Alt_X Alt_Y over an interleaved product of
// X-monomials and Y-monomials: computes T_X = Alt_X(x-slots tensor) and
// T_Y = Alt_Y(y-slots tensor) by streaming (|X|! + |Y|! instead of the
// naive |X|!|Y|!), then contracts them bilinearly per the descriptor.
TensorOperator split_alt_eval(const MonomialPattern& xpat, const MonomialPattern& ypat,
                              const InterleaveDescriptor& inter, const Assignment& a,
                              const StreamBudget& budget = {}, int threads = 1);

// The contraction step alone, reusable when the alternated tensors are shared
// between several interleavings of the same slot patterns.
TensorOperator contract_interleave(const TensorOperator& tx, const TensorOperator& ty,
                                   const InterleaveDescriptor& inter);

} // namespace swappoly

#endif
