#pragma once

// Surface syntax for elements of H. The grammar admits only normal-form
// monomials (x-power before y-power); products are a command, not syntax:
//
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := [rational] ['*' qpart] ['*' xpart] ['*' ypart]
//   rational := digits ['/' digits]
//   qpart    := 'q' ['^' int]      xpart := 'x' ['^' int]
//   ypart    := 'y' ['^' nat]
//
// with at least one component per term, '*' only between present components,
// and insignificant whitespace. Bare q, x, y mean exponent 1. In numeric
// mode a q literal is substituted by the configured value.

#include "hq/element.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hq {

/// Parses an expression; throws std::invalid_argument with the offending
/// position on malformed input (negative y-exponents included).
Element parse_element(const std::string& text);

/// Deterministic text form, terms sorted by (n, m) then ascending q-power;
/// parse_element(render_element(a)) == a. Coefficients must be Laurent
/// polynomials in q over the rationals (a non-monomial denominator cannot be
/// written in the term grammar and raises std::domain_error; JSON output is
/// the lossless fallback).
std::string render_element(const Element& a);

/// Tensor rendering with " (x) " separating the two legs of each term.
std::string render_tensor(const TensorElement& t);

/// Splits a scalar into (rational coefficient, q-exponent) pairs, ascending;
/// throws std::domain_error when the denominator is not a monomial in q.
std::vector<std::pair<BigRat, long long>> laurent_split(const Scalar& c);

} // namespace hq
