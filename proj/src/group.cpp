#include "hq/group.hpp"

#include "hq/qcombinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace hq {

SemidirectElt semidirect_mul(const SemidirectElt& a, const SemidirectElt& b) {
    return SemidirectElt{a.alpha * shift(b.alpha, -a.r), a.r + b.r};
}

SemidirectElt semidirect_inverse(const SemidirectElt& a) {
    return SemidirectElt{shift(a.alpha.inverse(), a.r), -a.r};
}

namespace {

// c with diff == c (x^{n+j} - x^n); diff must have that two-point shape
Scalar two_point_defect(const Element& diff, int n, int j) {
    if (diff.is_zero()) return Scalar::zero();
    Scalar c = diff.coeff(n + j, 0);
    if (c.is_zero() || !(diff == Element::monomial(n + j, 0, c) + Element::monomial(n, 0, -c)))
        throw std::logic_error("g_mul: level defect is not a multiple of x^{n+j} - x^n");
    return c;
}

void widen(std::optional<std::pair<int, int>>& range, const BetaSeq& s) {
    auto r = s.support_range();
    if (!r) return;
    if (!range)
        range = r;
    else
        range = std::make_pair(std::min(range->first, r->first), std::max(range->second, r->second));
}

} // namespace

BetaTower g_mul(const BetaTower& b0, const BetaTower& c0) {
    int d = std::max(b0.depth(), c0.depth());
    BetaTower b = b0.padded(d);
    BetaTower c = c0.padded(d);

    BetaTower delta = BetaTower::zero(d);
    delta.level(1) = b.level(1) + c.level(1);

    std::optional<std::pair<int, int>> range;
    for (int s = 1; s <= d; ++s) {
        widen(range, b.level(s));
        widen(range, c.level(s));
    }
    widen(range, delta.level(1));
    if (!range) return delta;

    Morphism composite = compose(tower_word(b), tower_word(c));
    for (int j = 2; j <= d; ++j) {
        Morphism partial = tower_word(delta.truncated(j - 1));
        BetaSeq level;
        // a defect at n needs a support point within [n, n+j]
        for (int n = range->first - j - 1; n <= range->second + 1; ++n) {
            Element diff = apply(composite, Element::monomial(n, j)) -
                           apply(partial, Element::monomial(n, j));
            Scalar v = two_point_defect(diff, n, j);
            if (!v.is_zero()) level.set(n, v);
        }
        delta.level(j) = level;
        widen(range, level);
    }
    return delta;
}

BetaSeq g_mul_closed(int level, const BetaTower& b, const BetaTower& c) {
    if (level != 2 && level != 3)
        throw std::invalid_argument("g_mul_closed: only levels 2 and 3 have closed forms");
    if (b.depth() < level || c.depth() < level)
        throw std::invalid_argument("g_mul_closed: tower depth below requested level");
    const BetaSeq& b1 = b.level(1);
    const BetaSeq& c1 = c.level(1);
    if (level == 2)
        return b.level(2) + c.level(2) - b1.pointwise(shift(c1, 1)).scaled(q_int(2));
    const BetaSeq& b2 = b.level(2);
    BetaSeq mid = (b2.pointwise(shift(c1, 2)) - shift(b2, 1).pointwise(c1)).scaled(q_int(3));
    BetaSeq low = (b1 + c1).pointwise(shift(b1, 1)).pointwise(shift(c1, 2)).scaled(q_factorial(3));
    return b.level(3) + c.level(3) - mid - low;
}

BetaTower g_inverse(const BetaTower& b) {
    int d = b.depth();
    BetaTower c = BetaTower::zero(d);
    c.level(1) = -b.level(1);
    for (int j = 2; j <= d; ++j) c.level(j) = -g_mul(b, c).level(j);
    return c;
}

BetaTower act(const SemidirectElt& a, const BetaTower& b) {
    AlphaSeq inv = a.alpha.inverse();
    std::vector<BetaSeq> levels;
    levels.reserve(static_cast<std::size_t>(b.depth()));
    for (int i = 1; i <= b.depth(); ++i)
        levels.push_back(scale(alpha_angle(inv, i), shift(b.level(i), -a.r)));
    return BetaTower(std::move(levels));
}

} // namespace hq
