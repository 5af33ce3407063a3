#pragma once

// Exact solver for the (x^m, 1)-primitive space within a window:
// all h in span{x^n y^j : (n, j) in window} with
//   Delta(h) = h (x) x^m + 1 (x) h.
// The constraints equate coefficients over every monomial pair that occurs;
// nothing is truncated.

#include "hq/element.hpp"

#include <vector>

namespace hq {

/// Reduced echelon basis (pivots normalized to 1) of the solution space.
/// The window must contain the monomials 1, x, y and x^m.
std::vector<Element> primitive_space(int m, const Window& window);

} // namespace hq
