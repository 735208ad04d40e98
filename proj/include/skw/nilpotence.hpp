#pragma once

#include "skw/monomial.hpp"

namespace skw {

// Decision for sigma-nilpotence at a target radical power n. Uses the
// finite-order reduction: every monomial with k Y-factors has image
// delta_{j1}...delta_{jk}(R) with exponents mod d, so the span of all
// length-k images satisfies U_{k+1} = sum_j delta_j(U_k). The state space is
// finite, so the sequence is eventually periodic and containment in Jac^n is
// decidable exactly.
struct NilpotenceResult {
    bool nilpotent;
    // nilpotent: minimal m with U_k <= Jac^n for all k >= m.
    unsigned witness_m = 0;
    // not nilpotent: a concrete composition delta_{j1}..delta_{jk} whose
    // image escapes Jac^n inside the cycle, plus the stable span.
    std::vector<unsigned> counterexample;
    Submodule stable_span;
    unsigned cycle_start = 0, cycle_len = 0;
};

NilpotenceResult check_sigma_nilpotent(const SkewPtr& s, unsigned n);

// Span of all monomial images of length exactly k (the U_k above).
Submodule monomial_span(const SkewPtr& s, unsigned k);

} // namespace skw
