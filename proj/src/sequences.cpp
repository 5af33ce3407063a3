#include "hq/sequences.hpp"

#include <stdexcept>

namespace hq {

BetaSeq BetaSeq::indicator(int n, const Scalar& v) {
    BetaSeq b;
    b.set(n, v);
    return b;
}

Scalar BetaSeq::at(int n) const {
    auto it = vals_.find(n);
    return it == vals_.end() ? Scalar::zero() : it->second;
}

void BetaSeq::set(int n, const Scalar& v) {
    if (v.is_zero())
        vals_.erase(n);
    else
        vals_[n] = v;
}

std::optional<std::pair<int, int>> BetaSeq::support_range() const {
    if (vals_.empty()) return std::nullopt;
    return std::make_pair(vals_.begin()->first, vals_.rbegin()->first);
}

BetaSeq BetaSeq::operator+(const BetaSeq& o) const {
    BetaSeq r(*this);
    for (const auto& [n, v] : o.vals_) r.set(n, r.at(n) + v);
    return r;
}

BetaSeq BetaSeq::operator-(const BetaSeq& o) const { return *this + (-o); }

BetaSeq BetaSeq::operator-() const {
    BetaSeq r;
    for (const auto& [n, v] : vals_) r.vals_.emplace(n, -v);
    return r;
}

BetaSeq BetaSeq::shifted(int r) const {
    BetaSeq out;
    for (const auto& [n, v] : vals_) out.vals_.emplace(n - r, v);
    return out;
}

BetaSeq BetaSeq::pointwise(const BetaSeq& o) const {
    BetaSeq out;
    for (const auto& [n, v] : vals_) {
        Scalar w = o.at(n);
        if (!w.is_zero()) out.vals_.emplace(n, v * w);
    }
    return out;
}

BetaSeq BetaSeq::scaled(const Scalar& c) const {
    BetaSeq out;
    if (c.is_zero()) return out;
    for (const auto& [n, v] : vals_) out.set(n, v * c);
    return out;
}

Scalar AlphaSeq::at(int n) const {
    auto it = dev_.find(n);
    return it == dev_.end() ? Scalar::one() : it->second;
}

void AlphaSeq::set(int n, const Scalar& v) {
    if (v.is_zero()) throw std::invalid_argument("AlphaSeq: values must be nonzero");
    if (v.is_one())
        dev_.erase(n);
    else
        dev_[n] = v;
}

std::optional<std::pair<int, int>> AlphaSeq::support_range() const {
    if (dev_.empty()) return std::nullopt;
    return std::make_pair(dev_.begin()->first, dev_.rbegin()->first);
}

AlphaSeq AlphaSeq::operator*(const AlphaSeq& o) const {
    AlphaSeq r(*this);
    for (const auto& [n, v] : o.dev_) r.set(n, r.at(n) * v);
    return r;
}

AlphaSeq AlphaSeq::inverse() const {
    AlphaSeq r;
    for (const auto& [n, v] : dev_) r.dev_.emplace(n, v.inverse());
    return r;
}

AlphaSeq AlphaSeq::shifted(int r) const {
    AlphaSeq out;
    for (const auto& [n, v] : dev_) out.dev_.emplace(n - r, v);
    return out;
}

Scalar AlphaSeq::run(int n, int m) const {
    Scalar acc = Scalar::one();
    for (int i = 0; i < m; ++i) acc *= at(n + i);
    return acc;
}

Scalar beta_run(const BetaSeq& beta, int n, int t, int m) {
    if (t < 1) throw std::invalid_argument("beta_run: step t must be >= 1");
    if (m < 0) throw std::invalid_argument("beta_run: negative length");
    Scalar acc = Scalar::one();
    for (int i = 0; i < m; ++i) {
        acc *= beta.at(n + i * t);
        if (acc.is_zero()) break;
    }
    return acc;
}

AlphaSeq alpha_angle(const AlphaSeq& alpha, int i) {
    if (i < 1) throw std::invalid_argument("alpha_angle: requires i >= 1");
    auto range = alpha.support_range();
    AlphaSeq out;
    if (!range) return out;
    for (int n = range->first - i + 1; n <= range->second; ++n) {
        Scalar v = alpha.run(n, i);
        if (!v.is_one()) out.set(n, v);
    }
    return out;
}

BetaSeq scale(const AlphaSeq& a, const BetaSeq& b) {
    BetaSeq out;
    for (const auto& [n, v] : b.support()) out.set(n, a.at(n) * v);
    return out;
}

BetaTower::BetaTower(std::vector<BetaSeq> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) throw std::invalid_argument("BetaTower: depth must be >= 1");
}

BetaTower BetaTower::zero(int depth) {
    if (depth < 1) throw std::invalid_argument("BetaTower: depth must be >= 1");
    return BetaTower(std::vector<BetaSeq>(static_cast<std::size_t>(depth)));
}

const BetaSeq& BetaTower::level(int s) const {
    if (s < 1 || s > depth()) throw std::out_of_range("BetaTower::level");
    return levels_[static_cast<std::size_t>(s) - 1];
}

BetaSeq& BetaTower::level(int s) {
    if (s < 1 || s > depth()) throw std::out_of_range("BetaTower::level");
    return levels_[static_cast<std::size_t>(s) - 1];
}

bool BetaTower::is_zero() const {
    for (const auto& l : levels_)
        if (!l.is_zero()) return false;
    return true;
}

BetaTower BetaTower::truncated(int d) const {
    if (d < 1 || d > depth()) throw std::invalid_argument("BetaTower::truncated: bad depth");
    return BetaTower(std::vector<BetaSeq>(levels_.begin(), levels_.begin() + d));
}

BetaTower BetaTower::padded(int d) const {
    if (d < depth()) throw std::invalid_argument("BetaTower::padded: bad depth");
    std::vector<BetaSeq> l = levels_;
    l.resize(static_cast<std::size_t>(d));
    return BetaTower(std::move(l));
}

} // namespace hq
