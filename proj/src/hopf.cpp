#include "hq/hopf.hpp"

#include "hq/qcombinatorics.hpp"

namespace hq {

Element multiply(const Element& a, const Element& b) {
    Element out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            long long qexp = static_cast<long long>(ka.m) * kb.n;
            Scalar c = ca * cb * Scalar::q_power(qexp);
            out.add_term(MonKey{ka.n + kb.n, ka.m + kb.m}, c);
        }
    }
    return out;
}

TensorElement comultiply(const Element& a) {
    TensorElement out;
    for (const auto& [k, c] : a.terms()) {
        for (int i = 0; i <= k.m; ++i) {
            Scalar w = c * q_binom(k.m, i);
            out.add_term({MonKey{k.n, i}, MonKey{k.n + i, k.m - i}}, w);
        }
    }
    return out;
}

Scalar counit(const Element& a) {
    Scalar acc = Scalar::zero();
    for (const auto& [k, c] : a.terms())
        if (k.m == 0) acc += c;
    return acc;
}

Element antipode(const Element& a) {
    Element out;
    for (const auto& [k, c] : a.terms()) {
        long long m = k.m;
        long long qexp = -(m * (m + 1)) / 2 - m * k.n;
        Scalar sign = (m % 2 == 0) ? Scalar::one() : -Scalar::one();
        out.add_term(MonKey{-k.n - k.m, k.m}, c * sign * Scalar::q_power(qexp));
    }
    return out;
}

Element graded_component(const Element& a, int d) {
    Element out;
    for (const auto& [k, c] : a.terms())
        if (k.m == d) out.add_term(k, c);
    return out;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            Element left = multiply(Element::monomial(ka.first.n, ka.first.m),
                                    Element::monomial(kb.first.n, kb.first.m));
            Element right = multiply(Element::monomial(ka.second.n, ka.second.m),
                                     Element::monomial(kb.second.n, kb.second.m));
            Scalar c = ca * cb;
            for (const auto& [kl, cl] : left.terms())
                for (const auto& [kr, cr] : right.terms())
                    out.add_term({kl, kr}, c * cl * cr);
        }
    }
    return out;
}

TensorElement tensor_of(const Element& a, const Element& b) {
    TensorElement out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out.add_term({ka, kb}, ca * cb);
    return out;
}

} // namespace hq
