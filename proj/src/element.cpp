#include "hq/element.hpp"

#include <stdexcept>

namespace hq {

void Window::validate() const {
    if (n_lo > n_hi) throw std::invalid_argument("Window: n_lo > n_hi");
    if (m_max < 0) throw std::invalid_argument("Window: negative m_max");
}

Element Element::monomial(int n, int m, const Scalar& c) {
    if (m < 0) throw std::invalid_argument("Element::monomial: negative y-exponent");
    Element e;
    e.add_term(MonKey{n, m}, c);
    return e;
}

Scalar Element::coeff(const MonKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar::zero() : it->second;
}

std::optional<int> Element::top_y_degree() const {
    std::optional<int> top;
    for (const auto& [k, c] : terms_)
        if (!top || k.m > *top) top = k.m;
    return top;
}

void Element::add_term(const MonKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element Element::operator+(const Element& o) const {
    Element r(*this);
    r += o;
    return r;
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator-() const {
    Element r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

Element Element::scaled(const Scalar& c) const {
    Element r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add_term(k, v * c);
    return r;
}

TensorElement TensorElement::term(const MonKey& a, const MonKey& b, const Scalar& c) {
    TensorElement t;
    t.add_term({a, b}, c);
    return t;
}

Scalar TensorElement::coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar::zero() : it->second;
}

void TensorElement::add_term(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement r(*this);
    r += o;
    return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TensorElement TensorElement::operator-(const TensorElement& o) const { return *this + (-o); }

TensorElement TensorElement::operator-() const {
    TensorElement r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

TensorElement TensorElement::scaled(const Scalar& c) const {
    TensorElement r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add_term(k, v * c);
    return r;
}

} // namespace hq
