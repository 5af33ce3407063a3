#include "hq/linsolve.hpp"

#include <algorithm>

namespace hq {

namespace {

void drop_zeros(SparseRow& row) {
    for (auto it = row.begin(); it != row.end();)
        it = it->second.is_zero() ? row.erase(it) : std::next(it);
}

// row -= c * other
void axpy(SparseRow& row, const Scalar& c, const SparseRow& other) {
    for (const auto& [col, v] : other) {
        auto it = row.find(col);
        if (it == row.end()) {
            Scalar nv = -(c * v);
            if (!nv.is_zero()) row.emplace(col, std::move(nv));
        } else {
            it->second -= c * v;
            if (it->second.is_zero()) row.erase(it);
        }
    }
}

} // namespace

Rref rref(std::vector<SparseRow> rows, int ncols) {
    for (auto& r : rows) drop_zeros(r);
    Rref out;
    out.ncols = ncols;
    std::vector<bool> used(rows.size(), false);
    for (int col = 0; col < ncols; ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i]) continue;
            auto it = rows[i].begin();
            if (it != rows[i].end() && it->first == col) { pivot = i; break; }
        }
        if (pivot == rows.size()) continue;
        used[pivot] = true;
        SparseRow prow = rows[pivot];
        Scalar inv = prow.at(col).inverse();
        for (auto& [c, v] : prow) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot) continue;
            auto it = rows[i].find(col);
            if (it == rows[i].end()) continue;
            axpy(rows[i], it->second, prow);
        }
        for (auto& done : out.rows) {
            auto it = done.find(col);
            if (it == done.end()) continue;
            axpy(done, it->second, prow);
        }
        out.rows.push_back(std::move(prow));
        out.pivot_cols.push_back(col);
    }
    return out;
}

std::vector<std::vector<Scalar>> kernel_basis(const Rref& r) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(r.ncols), false);
    for (int p : r.pivot_cols) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < r.ncols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Scalar> v(static_cast<std::size_t>(r.ncols), Scalar::zero());
        v[static_cast<std::size_t>(free)] = Scalar::one();
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            auto it = r.rows[i].find(free);
            if (it != r.rows[i].end())
                v[static_cast<std::size_t>(r.pivot_cols[i])] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Scalar>> canonical_span(const std::vector<std::vector<Scalar>>& vectors) {
    int ncols = 0;
    for (const auto& v : vectors) ncols = std::max(ncols, static_cast<int>(v.size()));
    std::vector<SparseRow> rows;
    for (const auto& v : vectors) {
        SparseRow r;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) r.emplace(static_cast<int>(j), v[j]);
        rows.push_back(std::move(r));
    }
    Rref rr = rref(std::move(rows), ncols);
    std::vector<std::vector<Scalar>> out;
    for (const auto& row : rr.rows) {
        std::vector<Scalar> dense(static_cast<std::size_t>(ncols), Scalar::zero());
        for (const auto& [c, v] : row) dense[static_cast<std::size_t>(c)] = v;
        out.push_back(std::move(dense));
    }
    return out;
}

} // namespace hq
