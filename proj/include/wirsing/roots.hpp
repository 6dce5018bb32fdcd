#ifndef WIRSING_ROOTS_HPP
#define WIRSING_ROOTS_HPP

#include <vector>

#include "wirsing/interval.hpp"
#include "wirsing/polynomial.hpp"

namespace wirsing {

//=============================================================================
// Certified complex root isolation.
//
// conjugate_boxes(f, prec) returns deg(f) pairwise-disjoint complex boxes,
// one true root of f in each, every box of width at most
// 2^(1-prec) * max(1, |center|).  Ordering is canonical and stable: it is
// fixed at the first (coarsest) certification on a deterministic precision
// ladder and preserved under refinement, so a root index always denotes the
// same conjugate regardless of the precision later requested.
//
// f must be squarefree of degree >= 1.  Degrees 1 and 2 use exact closed
// forms; higher degrees use Aberth-Ehrlich iteration followed by rigorous
// interval certification (the bound min_j |z - zeta_j| <= deg * |f/f'|(z),
// plus a pigeonhole argument once the boxes are pairwise disjoint).
//
// Throws PrecisionExhausted if certification fails below the internal
// hard ceiling.
//=============================================================================

std::vector<CInterval> conjugate_boxes(const IntPoly& f, mpfr_prec_t prec);

// drop all cached isolations (tests / memory hygiene)
void clear_root_cache();

} // namespace wirsing

#endif
