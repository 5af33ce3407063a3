#include "hq/field.hpp"

#include <atomic>
#include <mutex>
#include <sstream>
#include <utility>

namespace hq {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::q_power(int k) {
    if (k < 0) throw std::invalid_argument("IntPoly::q_power: negative exponent");
    IntPoly p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, BigInt(0));
    p.c_.back() = 1;
    return p;
}

int IntPoly::low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

bool IntPoly::is_monomial() const {
    if (c_.empty()) return false;
    return low_degree() == degree();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(c));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& v : c_) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    return g < 0 ? BigInt(-g) : g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    BigInt g = content();
    IntPoly r(*this);
    for (auto& v : r.c_) v /= g;
    return r;
}

namespace {

// a <- a shifted by q^k and scaled
IntPoly shift_scale(const IntPoly& p, int k, const BigInt& s) {
    if (p.is_zero() || s == 0) return IntPoly();
    std::vector<BigInt> c(p.coeffs().size() + static_cast<std::size_t>(k), BigInt(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i + static_cast<std::size_t>(k)] = p.coeffs()[i] * s;
    return IntPoly(std::move(c));
}

// pseudo-remainder of a by b (b nonzero); each step kills the leading term
IntPoly prem(IntPoly a, const IntPoly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int k = a.degree() - b.degree();
        a = shift_scale(a, 0, b.leading()) - shift_scale(b, k, a.leading());
    }
    return a;
}

} // namespace

IntPoly IntPoly::gcd(const IntPoly& a0, const IntPoly& b0) {
    if (a0.is_zero() && b0.is_zero()) return IntPoly();
    if (a0.is_zero()) return b0.leading() < 0 ? -b0 : b0;
    if (b0.is_zero()) return a0.leading() < 0 ? -a0 : a0;
    if (a0.degree() == 0 || b0.degree() == 0)
        return IntPoly::constant(boost::multiprecision::gcd(a0.content(), b0.content()));
    BigInt c = boost::multiprecision::gcd(a0.content(), b0.content());
    IntPoly a = a0.primitive_part();
    IntPoly b = b0.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    // primitive PRS
    while (!b.is_zero()) {
        IntPoly r = prem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    if (a.leading() < 0) a = -a;
    return IntPoly::constant(c) * a;
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
    if (d.is_zero()) throw std::logic_error("IntPoly::divide_exact: zero divisor");
    if (is_zero()) return IntPoly();
    if (degree() < d.degree()) throw std::logic_error("IntPoly::divide_exact: not divisible");
    std::vector<BigInt> res(static_cast<std::size_t>(degree() - d.degree()) + 1, BigInt(0));
    IntPoly r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        if (r.leading() % d.leading() != 0) throw std::logic_error("IntPoly::divide_exact: not divisible");
        BigInt t = r.leading() / d.leading();
        int k = r.degree() - d.degree();
        res[static_cast<std::size_t>(k)] = t;
        r = r - shift_scale(d, k, t);
    }
    if (!r.is_zero()) throw std::logic_error("IntPoly::divide_exact: not divisible");
    return IntPoly(std::move(res));
}

BigRat IntPoly::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        BigInt v = c_[i];
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        bool unit = (v == 1) && i > 0;
        if (!unit) os << v.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
}

RatFunc::RatFunc(IntPoly num, IntPoly den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) { den_ = IntPoly::constant(1); return; }
    if (den_.leading() < 0) { num_ = -num_; den_ = -den_; }
}

void RatFunc::reduce() {
    if (num_.is_zero()) { den_ = IntPoly::constant(1); return; }
    if (!den_.is_one()) {
        IntPoly g;
        if (den_.is_monomial()) {
            // gcd with c*q^d is gcd of contents times the common q-power
            BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
            int k = std::min(num_.low_degree(), den_.low_degree());
            g = shift_scale(IntPoly::constant(c), k, 1);
        } else {
            g = IntPoly::gcd(num_, den_);
        }
        if (!g.is_one()) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
    }
    if (den_.leading() < 0) { num_ = -num_; den_ = -den_; }
}

RatFunc RatFunc::integer(BigInt v) { return RatFunc(IntPoly::constant(std::move(v)), IntPoly::constant(1), raw_tag{}); }

RatFunc RatFunc::rational(const BigRat& v) {
    return RatFunc(IntPoly::constant(boost::multiprecision::numerator(v)),
                   IntPoly::constant(boost::multiprecision::denominator(v)), raw_tag{});
}

RatFunc RatFunc::q_power(int k) {
    if (k >= 0) return RatFunc(IntPoly::q_power(k), IntPoly::constant(1), raw_tag{});
    return RatFunc(IntPoly::constant(1), IntPoly::q_power(-k), raw_tag{});
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.is_one() && b.den_.is_one())
        return RatFunc(a.num_ * b.num_, IntPoly::constant(1), RatFunc::raw_tag{});
    // cross-reduce; the remaining parts are pairwise coprime
    IntPoly g1 = IntPoly::gcd(a.num_, b.den_);
    IntPoly g2 = IntPoly::gcd(b.num_, a.den_);
    IntPoly n = a.num_.divide_exact(g1) * b.num_.divide_exact(g2);
    IntPoly d = a.den_.divide_exact(g2) * b.den_.divide_exact(g1);
    return RatFunc(std::move(n), std::move(d), RatFunc::raw_tag{});
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc::inverse: zero");
    return RatFunc(den_, num_, raw_tag{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    if (num_.degree() > 0 || n.find(' ') != std::string::npos) n = "(" + n + ")";
    if (den_.degree() > 0 || d.find(' ') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

// ---------------------------------------------------------------------------
// Field configuration

namespace {

std::mutex g_field_mu;
FieldConfig g_field_cfg; // defaults to symbolic
std::atomic<std::uint64_t> g_field_gen{1};

} // namespace

FieldConfig symbolic_field() { return FieldConfig{FieldMode::symbolic, BigRat(0)}; }

FieldConfig numeric_field(const BigRat& q) { return FieldConfig{FieldMode::numeric, q}; }

void set_field(const FieldConfig& cfg) {
    if (cfg.mode == FieldMode::numeric && (cfg.q == 0 || cfg.q == -1))
        throw std::invalid_argument("set_field: numeric q must avoid 0 and -1");
    std::lock_guard<std::mutex> lk(g_field_mu);
    g_field_cfg = cfg;
    g_field_gen.fetch_add(1);
}

FieldConfig field() {
    std::lock_guard<std::mutex> lk(g_field_mu);
    return g_field_cfg;
}

std::uint64_t field_generation() { return g_field_gen.load(); }

ScopedField::ScopedField(const FieldConfig& cfg) : saved_(field()) { set_field(cfg); }

ScopedField::~ScopedField() { set_field(saved_); }

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar() : mode_(field().mode), num_(0) {}

Scalar Scalar::from_int(long long v) { return rational(BigRat(v)); }

Scalar Scalar::from_ratio(long long num, long long den) { return rational(BigRat(num, den)); }

Scalar Scalar::rational(const BigRat& v) {
    Scalar s;
    if (s.mode_ == FieldMode::symbolic)
        s.sym_ = RatFunc::rational(v);
    else
        s.num_ = v;
    return s;
}

Scalar Scalar::q_power(long long k) {
    Scalar s;
    if (s.mode_ == FieldMode::symbolic) {
        s.sym_ = RatFunc::q_power(static_cast<int>(k));
    } else {
        BigRat q = field().q;
        BigRat acc = 1;
        long long e = k >= 0 ? k : -k;
        for (long long i = 0; i < e; ++i) acc *= q;
        s.num_ = k >= 0 ? acc : BigRat(1) / acc;
    }
    return s;
}

Scalar Scalar::from_q_coeffs(const std::vector<long long>& coeffs) {
    Scalar acc;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        acc += from_int(coeffs[i]) * q_power(static_cast<long long>(i));
    }
    return acc;
}

Scalar Scalar::symbolic(RatFunc f) {
    if (field().mode != FieldMode::symbolic)
        throw std::logic_error("Scalar::symbolic: field is in numeric mode");
    Scalar s;
    s.sym_ = std::move(f);
    return s;
}

bool Scalar::is_zero() const {
    return mode_ == FieldMode::symbolic ? sym_.is_zero() : num_ == 0;
}

bool Scalar::is_one() const {
    return mode_ == FieldMode::symbolic ? sym_.is_one() : num_ == 1;
}

void Scalar::check_same_mode(const Scalar& o) const {
    if (mode_ != o.mode_) throw std::logic_error("Scalar: mixed field modes");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_mode(o);
    Scalar r(*this);
    if (mode_ == FieldMode::symbolic)
        r.sym_ = sym_ + o.sym_;
    else
        r.num_ = num_ + o.num_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_mode(o);
    Scalar r(*this);
    if (mode_ == FieldMode::symbolic)
        r.sym_ = sym_ * o.sym_;
    else
        r.num_ = num_ * o.num_;
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r(*this);
    if (mode_ == FieldMode::symbolic)
        r.sym_ = -sym_;
    else
        r.num_ = -num_;
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_mode(o);
    return mode_ == FieldMode::symbolic ? sym_ == o.sym_ : num_ == o.num_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar::inverse: zero");
    Scalar r(*this);
    if (mode_ == FieldMode::symbolic)
        r.sym_ = sym_.inverse();
    else
        r.num_ = BigRat(1) / num_;
    return r;
}

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = Scalar::one();
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

const RatFunc& Scalar::sym() const {
    if (mode_ != FieldMode::symbolic) throw std::logic_error("Scalar::sym: numeric scalar");
    return sym_;
}

const BigRat& Scalar::rat() const {
    if (mode_ != FieldMode::numeric) throw std::logic_error("Scalar::rat: symbolic scalar");
    return num_;
}

std::string Scalar::str() const {
    if (mode_ == FieldMode::symbolic) return sym_.str();
    std::ostringstream os;
    os << num_;
    return os.str();
}

} // namespace hq
