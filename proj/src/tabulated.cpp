#include "hq/tabulated.hpp"

#include "hq/hopf.hpp"
#include "hq/qcombinatorics.hpp"

#include <sstream>

namespace hq {

namespace {

std::string key_str(const MonKey& k) {
    std::ostringstream os;
    os << "(n=" << k.n << ", m=" << k.m << ")";
    return os.str();
}

} // namespace

const Element& TabulatedMorphism::image(const MonKey& k) const {
    auto it = table.find(k);
    if (it == table.end())
        throw WindowAdequacyError(k, "tabulated morphism has no entry at " + key_str(k));
    return it->second;
}

TabulatedMorphism tabulate(const Morphism& f, const Window& window) {
    window.validate();
    TabulatedMorphism out;
    out.window = window;
    for (int n = window.n_lo; n <= window.n_hi; ++n)
        for (int m = 0; m <= window.m_max; ++m)
            out.table.emplace(MonKey{n, m}, apply(f, Element::monomial(n, m)));
    return out;
}

Element apply(const TabulatedMorphism& t, const Element& a) {
    Element out;
    for (const auto& [k, c] : a.terms()) out += t.image(k).scaled(c);
    return out;
}

namespace {

// shared Delta/eps check parameterized over the image-of-monomial accessor;
// the accessor may return nullptr for "outside the table"
template <typename ImageFn>
CoalgebraReport check_coalgebra(const Window& window, ImageFn&& img) {
    CoalgebraReport rep;
    // low degrees first, so a reported counterexample is minimal in m
    for (int m = 0; m <= window.m_max; ++m) {
        for (int n = window.n_lo; n <= window.n_hi; ++n) {
            const Element* fx = img(n, m);
            if (!fx) continue;

            Scalar eps = counit(*fx);
            Scalar expected = (m == 0) ? Scalar::one() : Scalar::zero();
            if (!(eps == expected)) {
                rep.pass = false;
                rep.counterexample = MonKey{n, m};
                rep.detail = "counit mismatch at " + key_str(MonKey{n, m});
                return rep;
            }

            bool delta_checkable = true;
            TensorElement rhs;
            for (int i = 0; i <= m && delta_checkable; ++i) {
                const Element* left = img(n, i);
                const Element* right = img(n + i, m - i);
                if (!left || !right) {
                    delta_checkable = false;
                    break;
                }
                rhs += tensor_of(*left, *right).scaled(q_binom(m, i));
            }
            if (!delta_checkable) continue;
            if (!(comultiply(*fx) == rhs)) {
                rep.pass = false;
                rep.counterexample = MonKey{n, m};
                rep.detail = "comultiplication mismatch at " + key_str(MonKey{n, m});
                return rep;
            }
            ++rep.checked;
        }
    }
    rep.detail = "ok";
    return rep;
}

} // namespace

CoalgebraReport is_coalgebra_map(const Morphism& f, const Window& window) {
    window.validate();
    std::map<MonKey, Element> memo;
    auto img = [&](int n, int m) -> const Element* {
        auto [it, inserted] = memo.try_emplace(MonKey{n, m});
        if (inserted) it->second = apply(f, Element::monomial(n, m));
        return &it->second;
    };
    return check_coalgebra(window, img);
}

CoalgebraReport is_coalgebra_map(const TabulatedMorphism& t) {
    auto img = [&](int n, int m) -> const Element* {
        auto it = t.table.find(MonKey{n, m});
        return it == t.table.end() ? nullptr : &it->second;
    };
    return check_coalgebra(t.window, img);
}

namespace {

// The whole-table shift r: every y-degree-0 entry must be a single monomial
// c x^{n+r}. Returns r.
int table_shift(const TabulatedMorphism& t) {
    std::optional<int> r;
    for (int n = t.window.n_lo; n <= t.window.n_hi; ++n) {
        const Element& im = t.image(MonKey{n, 0});
        if (im.terms().size() != 1 || im.terms().begin()->first.m != 0)
            throw TriangularityError(MonKey{n, 0},
                                     "grouplike row entry at " + key_str(MonKey{n, 0}) +
                                         " is not a single y-degree-0 monomial");
        int shift = im.terms().begin()->first.n - n;
        if (r && *r != shift)
            throw TriangularityError(MonKey{n, 0}, "grouplike row has an inconsistent shift");
        r = shift;
    }
    return *r;
}

// Leading coefficient of a triangular entry: the y-degree-m part of the image
// of x^n y^m must be exactly c x^{n+r} y^m, c != 0.
Scalar leading_coeff(const TabulatedMorphism& t, const MonKey& k, int r) {
    const Element& im = t.image(k);
    Element top = graded_component(im, k.m);
    if (auto d = im.top_y_degree(); d && *d > k.m)
        throw TriangularityError(k, "image of " + key_str(k) + " exceeds y-degree " +
                                        std::to_string(k.m));
    if (top.terms().size() != 1 || top.terms().begin()->first != MonKey{k.n + r, k.m})
        throw TriangularityError(k, "image of " + key_str(k) +
                                        " has no single leading term at the shifted monomial");
    return top.terms().begin()->second;
}

} // namespace

TabulatedMorphism invert(const TabulatedMorphism& t) {
    t.window.validate();
    int r = table_shift(t);
    const Window dom{t.window.n_lo + r, t.window.n_hi + r, t.window.m_max};

    std::map<MonKey, Element> inv;
    std::map<MonKey, MonKey> failed; // entry -> first missing dependency
    for (int m = 0; m <= t.window.m_max; ++m) {
        for (int n = t.window.n_lo; n <= t.window.n_hi; ++n) {
            const MonKey src{n, m};
            const MonKey dst{n + r, m};
            Scalar c = leading_coeff(t, src, r);
            Element rest = t.image(src) - Element::monomial(dst.n, dst.m, c);
            // dst image: c^{-1} (x^n y^m - inverse(rest))
            Element acc = Element::monomial(n, m);
            std::optional<MonKey> missing;
            for (const auto& [k, v] : rest.terms()) {
                if (!dom.contains(k)) {
                    missing = k;
                    break;
                }
                if (auto f = failed.find(k); f != failed.end()) {
                    missing = f->second;
                    break;
                }
                acc -= inv.at(k).scaled(v);
            }
            if (missing) {
                failed.emplace(dst, *missing);
                continue;
            }
            inv.emplace(dst, acc.scaled(c.inverse()));
        }
    }

    // largest contiguous x-interval whose columns are fully defined
    auto column_ok = [&](int n) {
        for (int m = 0; m <= dom.m_max; ++m)
            if (!inv.count(MonKey{n, m})) return false;
        return true;
    };
    int best_lo = 0, best_hi = -1;
    for (int n = dom.n_lo; n <= dom.n_hi;) {
        if (!column_ok(n)) {
            ++n;
            continue;
        }
        int hi = n;
        while (hi + 1 <= dom.n_hi && column_ok(hi + 1)) ++hi;
        if (hi - n > best_hi - best_lo) {
            best_lo = n;
            best_hi = hi;
        }
        n = hi + 1;
    }
    if (best_hi < best_lo) {
        const auto& [entry, miss] = *failed.begin();
        throw WindowAdequacyError(miss, "invert: back-substitution for " + key_str(entry) +
                                            " needs " + key_str(miss) + " outside the window");
    }

    TabulatedMorphism out;
    out.window = Window{best_lo, best_hi, dom.m_max};
    for (int n = best_lo; n <= best_hi; ++n)
        for (int m = 0; m <= dom.m_max; ++m) out.table.emplace(MonKey{n, m}, inv.at(MonKey{n, m}));
    return out;
}

Morphism DecompositionResult::to_morphism() const {
    return compose(compose(tower_word(tower), phi_alpha(alpha)), theta(r));
}

DecompositionResult decompose(const TabulatedMorphism& t, int depth) {
    t.window.validate();
    if (depth < 1) throw std::invalid_argument("decompose: depth must be >= 1");
    if (depth > t.window.m_max)
        throw std::invalid_argument("decompose: depth exceeds the window's m_max");
    if (!t.window.contains(0, 0))
        throw std::invalid_argument("decompose: window must contain the unit monomial");

    CoalgebraReport rep = is_coalgebra_map(t);
    if (!rep.pass)
        throw NotCoalgebraError(*rep.counterexample, "decompose: input is not a coalgebra map: " +
                                                         rep.detail);

    // shift from the grouplike row
    int r;
    try {
        r = table_shift(t);
    } catch (const TriangularityError& e) {
        throw NotCoalgebraError(e.where(), "decompose: grouplike row is not a shifted basis row");
    }
    if (!(t.image(MonKey{0, 0}) == Element::monomial(r, 0)))
        throw NotCoalgebraError(MonKey{0, 0}, "decompose: image of 1 is not a grouplike");

    // Degree-1 images give alpha and force the expected shape after
    // stripping. The image of x^n y leads with alpha_{n+r} x^{n+r} y, so the
    // coefficient read at column n belongs to index n + r of the canonical
    // parameter.
    AlphaSeq alpha;
    if (t.window.m_max >= 1) {
        for (int n = t.window.n_lo; n <= t.window.n_hi; ++n) {
            const Element& im = t.image(MonKey{n, 1});
            Element top = graded_component(im, 1);
            Element low = im - top;
            if (auto d = im.top_y_degree(); d && *d > 1)
                throw NotCoalgebraError(MonKey{n, 1}, "decompose: degree-1 image has y-degree > 1");
            if (top.terms().size() != 1 || top.terms().begin()->first != MonKey{n + r, 1})
                throw NotCoalgebraError(MonKey{n, 1},
                                        "decompose: degree-1 image lacks the alpha x^{n+r} y term");
            Scalar mu0 = low.coeff(n + r, 0);
            Scalar mu1 = low.coeff(n + r + 1, 0);
            if (!(low == Element::monomial(n + r + 1, 0, mu1) + Element::monomial(n + r, 0, mu0)) ||
                !(mu0 + mu1).is_zero())
                throw NotCoalgebraError(MonKey{n, 1},
                                        "decompose: degree-1 image tail is not a multiple of x^{n+r+1} - x^{n+r}");
            alpha.set(n + r, top.terms().begin()->second);
        }
    }

    // strip theta_r and phi_alpha: phi'(x^n y^m) = alpha_{n,m}^{-1} phi(x^{n-r} y^m)
    auto stripped = [&](int n, int m) {
        return t.image(MonKey{n - r, m}).scaled(alpha.run(n, m).inverse());
    };

    BetaTower tower = BetaTower::zero(depth);
    Morphism partial; // phi^(1) ... phi^(i-1)
    for (int i = 1; i <= depth; ++i) {
        BetaSeq level;
        for (int n = t.window.n_lo + r; n <= t.window.n_hi + r; ++n) {
            Element diff = stripped(n, i) - apply(partial, Element::monomial(n, i));
            if (diff.is_zero()) continue;
            Scalar c = diff.coeff(n + i, 0);
            if (c.is_zero() ||
                !(diff == Element::monomial(n + i, 0, c) + Element::monomial(n, 0, -c)))
                throw WindowAdequacyError(MonKey{n, i},
                                          "decompose: level-" + std::to_string(i) +
                                              " defect at " + key_str(MonKey{n, i}) +
                                              " is not a multiple of x^{n+i} - x^n");
            level.set(n, c);
        }
        tower.level(i) = level;
        partial = compose(partial, phi_beta(i, level));
    }

    DecompositionResult result{r, alpha, tower};

    // reconstruction must reproduce the table up to y-degree = depth
    Morphism rebuilt = result.to_morphism();
    for (int n = t.window.n_lo; n <= t.window.n_hi; ++n) {
        for (int m = 0; m <= std::min(depth, t.window.m_max); ++m) {
            if (!(apply(rebuilt, Element::monomial(n, m)) == t.image(MonKey{n, m})))
                throw WindowAdequacyError(MonKey{n, m},
                                          "decompose: reconstruction mismatch at " +
                                              key_str(MonKey{n, m}) +
                                              " (window too narrow for the parameters)");
        }
    }
    return result;
}

} // namespace hq
