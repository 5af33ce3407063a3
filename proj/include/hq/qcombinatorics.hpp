#pragma once

// q-analog combinatorial quantities over the configured ground field.
//
// Conventions chosen so that summation loops need no boundary branching:
// the q-integer of 0 is 0 (empty sum) and the q-binomial vanishes outside
// 0 <= i <= n.

#include "hq/field.hpp"

namespace hq {

/// (n)_q = 1 + q + ... + q^{n-1}; n >= 0, with (0)_q = 0.
Scalar q_int(int n);

/// (n)!_q = (n)_q (n-1)_q ... (1)_q; (0)!_q = 1.
Scalar q_factorial(int n);

/// Gaussian binomial via the Pascal recurrence
/// binom(n,i)_q = q^i binom(n-1,i)_q + binom(n-1,i-1)_q,
/// memoized per field configuration; 0 outside 0 <= i <= n.
Scalar q_binom(int n, int i);

/// Falling product (n,m)_q = (n)_q (n-1)_q ... (n-m+1)_q for 0 < m <= n.
Scalar q_falling(int n, int m);

/// Iterated binomial binom(m,t)_{q,l} = prod_{i=0}^{l-1} binom(m-it,t)_q
/// for 1 <= t <= m and 1 <= l <= m/t.
Scalar q_multi_binom(int m, int t, int l);

} // namespace hq
