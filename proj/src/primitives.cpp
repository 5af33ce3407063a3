#include "hq/primitives.hpp"

#include "hq/hopf.hpp"
#include "hq/linsolve.hpp"

#include <stdexcept>

namespace hq {

std::vector<Element> primitive_space(int m, const Window& window) {
    window.validate();
    if (!window.contains(0, 0) || !window.contains(1, 0) || !window.contains(0, 1) ||
        !window.contains(m, 0))
        throw std::invalid_argument("primitive_space: window must contain 1, x, y and x^m");

    // column order: candidate monomials ascending
    std::vector<MonKey> cols;
    for (int n = window.n_lo; n <= window.n_hi; ++n)
        for (int j = 0; j <= window.m_max; ++j) cols.push_back(MonKey{n, j});

    // one equation per tensor-basis pair touched by any candidate
    std::map<TensorElement::Key, SparseRow> eqs;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const MonKey mon = cols[c];
        TensorElement constraint = comultiply(Element::monomial(mon.n, mon.m));
        constraint += -tensor_of(Element::monomial(mon.n, mon.m), Element::monomial(m, 0));
        constraint += -tensor_of(Element::unit(), Element::monomial(mon.n, mon.m));
        for (const auto& [key, coeff] : constraint.terms()) {
            auto& row = eqs[key];
            auto it = row.find(static_cast<int>(c));
            if (it == row.end())
                row.emplace(static_cast<int>(c), coeff);
            else {
                it->second += coeff;
                if (it->second.is_zero()) row.erase(it);
            }
        }
    }

    std::vector<SparseRow> rows;
    rows.reserve(eqs.size());
    for (auto& [key, row] : eqs) rows.push_back(std::move(row));

    Rref rr = rref(std::move(rows), static_cast<int>(cols.size()));
    std::vector<Element> basis;
    for (const auto& vec : kernel_basis(rr)) {
        Element e;
        for (std::size_t c = 0; c < cols.size(); ++c) e.add_term(cols[c], vec[c]);
        basis.push_back(std::move(e));
    }
    return basis;
}

} // namespace hq
