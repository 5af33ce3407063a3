#pragma once

// The abstract group layer over the sequence types: the semidirect product
// (k^x)^Z x| Z, the recursive multiplication of truncated level towers, the
// closed-form products at levels 2 and 3, and the action of the semidirect
// product on towers.

#include "hq/morphism.hpp"
#include "hq/sequences.hpp"

namespace hq {

/// Element (alpha, r) of (k^x)^Z x| Z with
/// (alpha, r)(beta, t) = (alpha * shift(beta, -r), r + t).
struct SemidirectElt {
    AlphaSeq alpha;
    int r = 0;
    bool operator==(const SemidirectElt&) const = default;
};

SemidirectElt semidirect_mul(const SemidirectElt& a, const SemidirectElt& b);
SemidirectElt semidirect_inverse(const SemidirectElt& a);

/// Product of truncated towers by the level recursion: delta^(1) is the sum,
/// and for j >= 2 the level is read off the degree-j defect of the composite
/// word against the already-extracted partial product. Towers of unequal
/// depth are aligned by zero-padding.
BetaTower g_mul(const BetaTower& b, const BetaTower& c);

/// Closed forms for the product levels 2 and 3 (pointwise sequence algebra):
///   delta^(2) = beta^(2) + gamma^(2) - (2)_q beta^(1) gamma^(1)[1]
///   delta^(3) = beta^(3) + gamma^(3)
///               - (3)_q (beta^(2) gamma^(1)[2] - beta^(2)[1] gamma^(1))
///               - (3)!_q (beta^(1) + gamma^(1)) beta^(1)[1] gamma^(1)[2]
/// The recursion in g_mul is the authority; these are cross-checked against
/// it by the verification suites.
BetaSeq g_mul_closed(int level, const BetaTower& b, const BetaTower& c);

/// Two-sided inverse for g_mul at the tower's depth.
BetaTower g_inverse(const BetaTower& b);

/// (alpha, r) . (beta^(i))_i = (alpha^{-1}<i> beta^(i)[-r])_i, levelwise.
BetaTower act(const SemidirectElt& a, const BetaTower& b);

} // namespace hq
