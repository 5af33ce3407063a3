#pragma once

// Hopf structure of H = k_q[x, x^-1, y]:
// generators x (invertible, grouplike) and y with the single relation
// yx = q xy, and
//   Delta(x) = x (x) x,   Delta(y) = y (x) x + 1 (x) y,
//   eps(x) = 1,           eps(y) = 0,
//   S(x) = x^-1,          S(y) = -q^-1 x^-1 y.
// All maps below are exact linear (or bilinear) extensions of their values
// on the monomial basis.

#include "hq/element.hpp"

namespace hq {

/// Product in H. On monomials, moving y^b across x^c costs q^{bc}:
///   (x^a y^b)(x^c y^d) = q^{bc} x^{a+c} y^{b+d}.
Element multiply(const Element& a, const Element& b);

/// Delta(x^n y^m) = sum_i binom(m,i)_q x^n y^i (x) x^{n+i} y^{m-i}.
TensorElement comultiply(const Element& a);

/// eps(x^n y^m) = 1 if m = 0, else 0, extended linearly.
Scalar counit(const Element& a);

/// Antipode. Anti-multiplicative extension of the generator values; on a
/// monomial this normalizes to
///   S(x^n y^m) = (-1)^m q^{-m(m+1)/2 - mn} x^{-n-m} y^m,
/// which is cross-checked against products of generator images in the tests.
Element antipode(const Element& a);

/// Terms of exact y-degree d (the H(d) component of the grading).
Element graded_component(const Element& a, int d);

/// Componentwise product on H (x) H: (a (x) b)(c (x) d) = ac (x) bd.
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b);

/// Outer product a (x) b.
TensorElement tensor_of(const Element& a, const Element& b);

} // namespace hq
