#pragma once

// Exact ground-field arithmetic.
//
// The coefficient field K comes in two flavours, selected by a process-wide
// configuration:
//   * symbolic — rational functions in an indeterminate q over the rationals,
//     stored as reduced fractions of integer-coefficient polynomials;
//   * numeric  — arbitrary-precision rationals with q fixed to a rational
//     value (q = 0 and q = -1 are rejected; q = 1 is allowed).
//
// Every Scalar is immutable after construction and remembers which mode it
// was built under; mixing modes in one expression is a logic error.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hq {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Dense polynomial in q with integer coefficients, ascending powers,
/// no trailing zero coefficient (the zero polynomial has no coefficients).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly constant(BigInt v);
    static IntPoly q_power(int k); // q^k, k >= 0

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    int low_degree() const;                                        // 0 for zero
    bool is_monomial() const;
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& leading() const { return c_.back(); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    BigInt content() const; // gcd of coefficients, >= 0
    IntPoly primitive_part() const;
    static IntPoly gcd(const IntPoly& a, const IntPoly& b); // positive leading coeff
    IntPoly divide_exact(const IntPoly& d) const;           // throws if not exact

    BigRat eval(const BigRat& x) const;
    std::string str() const; // "1 + q - 2*q^2"

private:
    std::vector<BigInt> c_;
    void trim();
};

/// Reduced fraction num/den of integer polynomials in q.
/// Canonical form: gcd(num, den) = 1 in Z[q] (contents included), den has a
/// positive leading coefficient, zero is 0/1. Equality is componentwise.
class RatFunc {
public:
    RatFunc() : den_(IntPoly::constant(1)) {}
    RatFunc(IntPoly num, IntPoly den); // reduces; throws on zero denominator

    static RatFunc integer(BigInt v);
    static RatFunc rational(const BigRat& v);
    static RatFunc q_power(int k); // any k, negative gives 1/q^-k

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc inverse() const; // throws on zero
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str() const;

private:
    IntPoly num_, den_;
    void reduce();
    struct raw_tag {};
    RatFunc(IntPoly num, IntPoly den, raw_tag); // already coprime, sign-normalizes only
};

enum class FieldMode { symbolic, numeric };

struct FieldConfig {
    FieldMode mode = FieldMode::symbolic;
    BigRat q = 0; // used in numeric mode only
};

FieldConfig symbolic_field();
FieldConfig numeric_field(const BigRat& q);

/// Installs the process-wide field configuration. Numeric mode rejects
/// q = 0 and q = -1. Resets all q-combinatorial caches.
void set_field(const FieldConfig& cfg);
FieldConfig field();
std::uint64_t field_generation();

/// RAII helper for tests and batch drivers that switch modes.
class ScopedField {
public:
    explicit ScopedField(const FieldConfig& cfg);
    ~ScopedField();
    ScopedField(const ScopedField&) = delete;
    ScopedField& operator=(const ScopedField&) = delete;

private:
    FieldConfig saved_;
};

/// An element of the ground field K in the currently configured mode.
class Scalar {
public:
    Scalar(); // zero in the current mode

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return from_int(1); }
    static Scalar from_int(long long v);
    static Scalar from_ratio(long long num, long long den);
    static Scalar rational(const BigRat& v);
    static Scalar q_power(long long k);
    static Scalar q() { return q_power(1); }
    /// sum c_i q^i; in numeric mode the configured q value is substituted.
    static Scalar from_q_coeffs(const std::vector<long long>& coeffs);
    static Scalar symbolic(RatFunc f);

    FieldMode mode() const { return mode_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws on division by zero
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const; // throws on zero
    Scalar pow(long long e) const;

    const RatFunc& sym() const; // throws unless symbolic
    const BigRat& rat() const;  // throws unless numeric

    std::string str() const;

private:
    FieldMode mode_;
    RatFunc sym_;
    BigRat num_;
    void check_same_mode(const Scalar& o) const;
};

} // namespace hq
