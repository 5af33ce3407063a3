#include "hq/parser.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hq {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::size_t pos() const { return pos_; }
    void rewind(std::size_t p) { pos_ = p; }

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "syntax error at position " << pos_ << ": " << msg;
        throw std::invalid_argument(os.str());
    }

    BigInt digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return BigInt(s_.substr(start, pos_ - start));
    }

    long long integer() {
        bool neg = accept('-');
        BigInt v = digits();
        if (v > BigInt(1) << 40) fail("exponent out of range");
        long long out = v.convert_to<long long>();
        return neg ? -out : out;
    }

    BigRat rational() {
        BigInt num = digits();
        if (accept('/')) {
            BigInt den = digits();
            if (den == 0) fail("zero denominator");
            return BigRat(num, den);
        }
        return BigRat(num);
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

struct TermParts {
    BigRat coef = 1;
    long long q_exp = 0;
    long long x_exp = 0;
    long long y_exp = 0;
};

// [rational] ['*' q..] ['*' x..] ['*' y..], at least one component
TermParts parse_term(Cursor& c) {
    TermParts t;
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        t.coef = c.rational();
        any = true;
    }
    auto part = [&](char sym) -> std::pair<bool, long long> {
        std::size_t save = c.pos();
        if (any && !c.accept('*')) return {false, 0};
        if (c.peek() != sym) {
            c.rewind(save);
            return {false, 0};
        }
        c.accept(sym);
        long long e = 1;
        if (c.accept('^')) e = c.integer();
        any = true;
        return {true, e};
    };
    if (auto [ok, e] = part('q'); ok) t.q_exp = e;
    if (auto [ok, e] = part('x'); ok) t.x_exp = e;
    if (auto [ok, e] = part('y'); ok) {
        if (e < 0) c.fail("negative y exponent");
        t.y_exp = e;
    }
    if (!any) c.fail("expected a term");
    return t;
}

constexpr long long kExpLimit = 1000000;

} // namespace

Element parse_element(const std::string& text) {
    Cursor c(text);
    Element out;
    bool neg = c.accept('-');
    while (true) {
        TermParts t = parse_term(c);
        if (t.x_exp < -kExpLimit || t.x_exp > kExpLimit || t.y_exp > kExpLimit)
            c.fail("exponent out of range");
        Scalar coef = Scalar::rational(neg ? BigRat(-t.coef) : t.coef) * Scalar::q_power(t.q_exp);
        out.add_term(MonKey{static_cast<int>(t.x_exp), static_cast<int>(t.y_exp)}, coef);
        if (c.eof()) break;
        if (c.accept('+'))
            neg = false;
        else if (c.accept('-'))
            neg = true;
        else
            c.fail("expected '+' or '-'");
    }
    return out;
}

std::vector<std::pair<BigRat, long long>> laurent_split(const Scalar& c) {
    std::vector<std::pair<BigRat, long long>> out;
    if (c.mode() == FieldMode::numeric) {
        if (c.rat() != 0) out.emplace_back(c.rat(), 0);
        return out;
    }
    const RatFunc& f = c.sym();
    if (f.is_zero()) return out;
    if (!f.den().is_monomial())
        throw std::domain_error(
            "scalar has a non-monomial denominator and cannot be written in the term grammar");
    const BigInt& d = f.den().leading();
    long long shift = f.den().degree();
    const auto& coeffs = f.num().coeffs();
    for (std::size_t p = 0; p < coeffs.size(); ++p) {
        if (coeffs[p] == 0) continue;
        out.emplace_back(BigRat(coeffs[p], d), static_cast<long long>(p) - shift);
    }
    return out;
}

namespace {

// one grammar term; sign handled by the caller
std::string render_term(const BigRat& mag, long long q_exp, int n, int m) {
    std::ostringstream os;
    bool have = false;
    if (mag != 1 || (q_exp == 0 && n == 0 && m == 0)) {
        os << mag;
        have = true;
    }
    auto put = [&](char sym, long long e) {
        if (e == 0) return;
        if (have) os << "*";
        os << sym;
        if (e != 1) os << "^" << e;
        have = true;
    };
    put('q', q_exp);
    put('x', n);
    put('y', m);
    return os.str();
}

void append_signed(std::ostringstream& os, bool first, const BigRat& a, const std::string& body) {
    if (first) {
        if (a < 0) os << "-";
    } else {
        os << (a < 0 ? " - " : " + ");
    }
    os << body;
}

} // namespace

std::string render_element(const Element& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : a.terms()) {
        for (const auto& [coef, q_exp] : laurent_split(c)) {
            BigRat mag = coef < 0 ? BigRat(-coef) : coef;
            append_signed(os, first, coef, render_term(mag, q_exp, k.n, k.m));
            first = false;
        }
    }
    return os.str();
}

std::string render_tensor(const TensorElement& t) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t.terms()) {
        for (const auto& [coef, q_exp] : laurent_split(c)) {
            BigRat mag = coef < 0 ? BigRat(-coef) : coef;
            std::string body = render_term(mag, q_exp, k.first.n, k.first.m) + " (x) " +
                               render_term(1, 0, k.second.n, k.second.m);
            append_signed(os, first, coef, body);
            first = false;
        }
    }
    return os.str();
}

} // namespace hq
