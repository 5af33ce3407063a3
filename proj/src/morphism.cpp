#include "hq/morphism.hpp"

#include "hq/qcombinatorics.hpp"

#include <stdexcept>

namespace hq {

Morphism theta(int r) { return Morphism({ThetaAtom{r}}); }

Morphism phi_alpha(const AlphaSeq& alpha) { return Morphism({PhiAlphaAtom{alpha}}); }

Morphism phi_beta(int s, const BetaSeq& beta) {
    if (s < 1) throw std::invalid_argument("phi_beta: level s must be >= 1");
    return Morphism({PhiBetaAtom{s, beta}});
}

Morphism compose(const Morphism& f, const Morphism& g) {
    std::vector<MorphismAtom> word = f.word();
    word.insert(word.end(), g.word().begin(), g.word().end());
    return Morphism(std::move(word));
}

Morphism inverse_graded(const Morphism& f) {
    std::vector<MorphismAtom> word;
    for (auto it = f.word().rbegin(); it != f.word().rend(); ++it) {
        if (const auto* t = std::get_if<ThetaAtom>(&*it))
            word.push_back(ThetaAtom{-t->r});
        else if (const auto* p = std::get_if<PhiAlphaAtom>(&*it))
            word.push_back(PhiAlphaAtom{p->alpha.inverse()});
        else
            throw std::invalid_argument("inverse_graded: word contains a level atom");
    }
    return Morphism(std::move(word));
}

Morphism tower_word(const BetaTower& tower) {
    std::vector<MorphismAtom> word;
    for (int s = 1; s <= tower.depth(); ++s) word.push_back(PhiBetaAtom{s, tower.level(s)});
    return Morphism(std::move(word));
}

namespace {

Element apply_theta(int r, const Element& a) {
    Element out;
    for (const auto& [k, c] : a.terms()) out.add_term(MonKey{k.n + r, k.m}, c);
    return out;
}

Element apply_phi_alpha(const AlphaSeq& alpha, const Element& a) {
    if (alpha.is_identity()) return a;
    Element out;
    for (const auto& [k, c] : a.terms()) out.add_term(k, c * alpha.run(k.n, k.m));
    return out;
}

Element apply_phi_beta_monomial(int s, const BetaSeq& beta, const MonKey& k, const Scalar& c) {
    Element out = Element::monomial(k.n, k.m, c);
    for (int i = 1; i <= k.m / s; ++i) {
        Scalar mb = c * q_multi_binom(k.m, s, i);
        Scalar plus = mb * beta_run(beta, k.n, s, i);
        Scalar minus = mb * beta_run(beta, k.n, s, i - 1) * beta.at(k.n + k.m - s);
        out.add_term(MonKey{k.n + i * s, k.m - i * s}, plus);
        out.add_term(MonKey{k.n + i * s - s, k.m - i * s}, -minus);
    }
    return out;
}

Element apply_phi_beta(int s, const BetaSeq& beta, const Element& a) {
    if (beta.is_zero()) return a;
    Element out;
    for (const auto& [k, c] : a.terms()) out += apply_phi_beta_monomial(s, beta, k, c);
    return out;
}

} // namespace

Element apply_atom(const MorphismAtom& atom, const Element& a) {
    if (const auto* t = std::get_if<ThetaAtom>(&atom)) return apply_theta(t->r, a);
    if (const auto* p = std::get_if<PhiAlphaAtom>(&atom)) return apply_phi_alpha(p->alpha, a);
    const auto& b = std::get<PhiBetaAtom>(atom);
    return apply_phi_beta(b.s, b.beta, a);
}

Element apply(const Morphism& f, const Element& a) {
    Element cur = a;
    for (auto it = f.word().rbegin(); it != f.word().rend(); ++it) cur = apply_atom(*it, cur);
    return cur;
}

} // namespace hq
