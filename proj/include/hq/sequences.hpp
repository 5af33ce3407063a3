#pragma once

// Z-indexed parameter sequences.
//
// BetaSeq lives in the additive group k^Z: finitely many nonzero values,
// 0 elsewhere. AlphaSeq lives in the multiplicative group (k^x)^Z: finitely
// many deviations from 1, all values nonzero. Shifts follow the convention
// shift(s, r) at n = s at n+r.

#include "hq/field.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hq {

class BetaSeq {
public:
    BetaSeq() = default;

    static BetaSeq indicator(int n, const Scalar& v = Scalar::one());

    Scalar at(int n) const;
    void set(int n, const Scalar& v); // storing 0 erases the entry
    const std::map<int, Scalar>& support() const { return vals_; }
    bool is_zero() const { return vals_.empty(); }
    /// [min, max] of the support; empty for the zero sequence.
    std::optional<std::pair<int, int>> support_range() const;

    BetaSeq operator+(const BetaSeq& o) const;
    BetaSeq operator-(const BetaSeq& o) const;
    BetaSeq operator-() const;
    bool operator==(const BetaSeq& o) const = default;

    BetaSeq shifted(int r) const;
    BetaSeq pointwise(const BetaSeq& o) const; // entrywise product
    BetaSeq scaled(const Scalar& c) const;

private:
    std::map<int, Scalar> vals_;
};

class AlphaSeq {
public:
    AlphaSeq() = default; // constant 1

    Scalar at(int n) const;
    void set(int n, const Scalar& v); // throws on 0; storing 1 erases the entry
    const std::map<int, Scalar>& deviation() const { return dev_; }
    bool is_identity() const { return dev_.empty(); }
    std::optional<std::pair<int, int>> support_range() const;

    AlphaSeq operator*(const AlphaSeq& o) const;
    AlphaSeq inverse() const;
    bool operator==(const AlphaSeq& o) const = default;

    AlphaSeq shifted(int r) const;
    /// Consecutive run alpha_{n,m} = prod_{i=0}^{m-1} at(n+i), empty product 1.
    Scalar run(int n, int m) const;

private:
    std::map<int, Scalar> dev_;
};

inline BetaSeq shift(const BetaSeq& s, int r) { return s.shifted(r); }
inline AlphaSeq shift(const AlphaSeq& s, int r) { return s.shifted(r); }

/// beta_{n,t;m} = prod_{i=0}^{m-1} beta_{n+it}; t >= 1, m >= 0.
Scalar beta_run(const BetaSeq& beta, int n, int t, int m);

/// alpha<i> = alpha alpha[1] ... alpha[i-1]; i >= 1.
AlphaSeq alpha_angle(const AlphaSeq& alpha, int i);

/// Mixed pointwise product: the scalar sequence scales the additive one.
BetaSeq scale(const AlphaSeq& a, const BetaSeq& b);

/// Truncated element of the level tower: levels (beta^(1), ..., beta^(depth)).
class BetaTower {
public:
    BetaTower() : levels_(1) {} // depth-1 zero tower
    explicit BetaTower(std::vector<BetaSeq> levels); // at least one level
    static BetaTower zero(int depth);

    int depth() const { return static_cast<int>(levels_.size()); }
    const BetaSeq& level(int s) const; // 1-based
    BetaSeq& level(int s);
    const std::vector<BetaSeq>& levels() const { return levels_; }
    bool is_zero() const;

    BetaTower truncated(int depth) const; // drop levels above depth
    BetaTower padded(int depth) const;    // append zero levels up to depth
    bool operator==(const BetaTower& o) const = default;

private:
    std::vector<BetaSeq> levels_;
};

} // namespace hq
