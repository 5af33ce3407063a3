#pragma once

// Normal-form elements of the Hopf algebra H on the basis {x^n y^m},
// n ranging over the integers and m over the non-negative integers.
// An Element stores only nonzero coefficients, so equality is map equality.

#include "hq/field.hpp"

#include <map>
#include <optional>
#include <utility>

namespace hq {

/// Basis monomial index: x^n y^m.
struct MonKey {
    int n = 0;
    int m = 0;
    auto operator<=>(const MonKey&) const = default;
};

/// Finite truncation frame for window-bound computations:
/// x-exponents in [n_lo, n_hi], y-degrees in [0, m_max].
struct Window {
    int n_lo = 0;
    int n_hi = 0;
    int m_max = 0;

    bool contains(int n, int m) const { return n >= n_lo && n <= n_hi && m >= 0 && m <= m_max; }
    bool contains(const MonKey& k) const { return contains(k.n, k.m); }
    void validate() const;
    bool operator==(const Window&) const = default;
};

class Element {
public:
    Element() = default;

    static Element zero() { return Element(); }
    static Element unit() { return monomial(0, 0); }
    static Element monomial(int n, int m, const Scalar& c = Scalar::one());

    const std::map<MonKey, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const MonKey& k) const;
    Scalar coeff(int n, int m) const { return coeff(MonKey{n, m}); }
    /// Largest y-degree present; empty for the zero element.
    std::optional<int> top_y_degree() const;

    void add_term(const MonKey& k, const Scalar& c); // merges, drops zeros

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element scaled(const Scalar& c) const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o) { return *this += -o; }
    bool operator==(const Element& o) const = default;

private:
    std::map<MonKey, Scalar> terms_;
};

/// Element of H (x) H on the basis of monomial pairs; same canonical-form
/// discipline as Element.
class TensorElement {
public:
    using Key = std::pair<MonKey, MonKey>;

    TensorElement() = default;

    static TensorElement zero() { return TensorElement(); }
    static TensorElement term(const MonKey& a, const MonKey& b, const Scalar& c = Scalar::one());

    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Key& k) const;

    void add_term(const Key& k, const Scalar& c);

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator-() const;
    TensorElement scaled(const Scalar& c) const;
    TensorElement& operator+=(const TensorElement& o);
    bool operator==(const TensorElement& o) const = default;

private:
    std::map<Key, Scalar> terms_;
};

} // namespace hq
