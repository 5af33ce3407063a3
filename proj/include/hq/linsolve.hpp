#pragma once

// Exact Gaussian elimination over the ground field on sparse rows.
// Produces the reduced row echelon form with pivots normalized to 1,
// which makes every downstream basis deterministic.

#include "hq/field.hpp"

#include <map>
#include <vector>

namespace hq {

using SparseRow = std::map<int, Scalar>; // column -> nonzero coefficient

struct Rref {
    std::vector<SparseRow> rows; // one per pivot, sorted by pivot column
    std::vector<int> pivot_cols; // parallel to rows
    int ncols = 0;

    int rank() const { return static_cast<int>(rows.size()); }
};

/// Reduced row echelon form; input rows may contain explicit zeros.
Rref rref(std::vector<SparseRow> rows, int ncols);

/// Basis of the null space, one vector per free column (ascending),
/// with entry 1 at that free column.
std::vector<std::vector<Scalar>> kernel_basis(const Rref& r);

/// Canonical basis of the row span (the RREF rows, densified). Two setups
/// span the same subspace iff these agree.
std::vector<std::vector<Scalar>> canonical_span(const std::vector<std::vector<Scalar>>& vectors);

} // namespace hq
