#pragma once

#include "gk/groupspec.hpp"
#include "gk/numth.hpp"

namespace gk::adjacency {

// Class-index criteria for odd non-characteristic primes. All predicates
// normalize the pair internally and return true iff adjacent.

// B_n(q)/C_n(q): non-adjacent iff eta(k)+eta(l) > n and l/k is not an odd
// natural number (pair ordered by eta).
bool adjacent_bc(unsigned n, unsigned k, unsigned l);

// D_n^eps(q): non-adjacent iff 2eta(k)+2eta(l) > 2n-(1-eps(-1)^(k+l)), l/k is
// not odd, and (for eps=+) the chain n=l=2eta(l)=2eta(k)=2k fails.
bool adjacent_d(unsigned n, int eps, unsigned k, unsigned l);

// A_{n-1}^eps(q), classes with nu_eps >= 2 and away from the characteristic:
// non-adjacent iff nu_eps(k)+nu_eps(l) > n and neither value divides the
// other. Reconstructed from the proofs' usage of the companion criterion.
bool adjacent_linear(unsigned n, int eps, unsigned k, unsigned l);

// Exceptional groups, items 1-7 of the non-adjacency list. r_is_3 marks that
// the prime on the small-index side is 3 (G2/E6/2E6 special clauses),
// r_is_5_k4 that it is 5 with e(5,q) = 4 (the E8 l=20 clause).
bool adjacent_exceptional(Family f, const numth::PrimePower& q, unsigned k, unsigned l,
                          bool r_is_3, bool r_is_5_k4);

// Suzuki/Ree groups on S-class indices; named vertices 2 and 3 are flagged.
// A flagged side ignores its index argument.
bool adjacent_suzree(Family f, unsigned i, unsigned j, bool left_is_2, bool left_is_3);

}  // namespace gk::adjacency
