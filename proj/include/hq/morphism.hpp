#pragma once

// Coalgebra endomorphisms of H as words over three atomic families:
//
//   Theta(r):        x^n y^m -> x^{n+r} y^m                      (shift)
//   PhiAlpha(alpha): x^n y^m -> alpha_{n,m} x^n y^m,             (graded)
//                    alpha_{n,m} = prod_{i<m} alpha_{n+i}
//   PhiBeta(s,beta): identity below y-degree s; for m >= s adds
//                    sum_{i=1}^{floor(m/s)} binom(m,s)_{q,i}
//                      (beta_{n,s;i} x^{n+is}
//                       - beta_{n,s;i-1} beta_{n+m-s} x^{n+is-s}) y^{m-is}
//
// Composition order: the word [a, b, ..., z] acts as a o b o ... o z, i.e.
// the LAST atom is applied first, matching the convention that the
// juxtaposition (phi psi)(h) means phi(psi(h)). Words are never simplified;
// canonical parameters come out of decompose() only.

#include "hq/element.hpp"
#include "hq/sequences.hpp"

#include <variant>
#include <vector>

namespace hq {

struct ThetaAtom {
    int r = 0;
    bool operator==(const ThetaAtom&) const = default;
};

struct PhiAlphaAtom {
    AlphaSeq alpha;
    bool operator==(const PhiAlphaAtom&) const = default;
};

struct PhiBetaAtom {
    int s = 1;
    BetaSeq beta;
    bool operator==(const PhiBetaAtom&) const = default;
};

using MorphismAtom = std::variant<ThetaAtom, PhiAlphaAtom, PhiBetaAtom>;

class Morphism {
public:
    Morphism() = default; // identity (empty word)
    explicit Morphism(std::vector<MorphismAtom> word) : word_(std::move(word)) {}

    const std::vector<MorphismAtom>& word() const { return word_; }
    bool operator==(const Morphism&) const = default;

private:
    std::vector<MorphismAtom> word_;
};

Morphism theta(int r);
Morphism phi_alpha(const AlphaSeq& alpha);
Morphism phi_beta(int s, const BetaSeq& beta); // s >= 1

/// apply(compose(f, g), a) = apply(f, apply(g, a)).
Morphism compose(const Morphism& f, const Morphism& g);

/// Inverse for words of Theta/PhiAlpha atoms only (the graded families have
/// closed inverses; the level families do not). Throws on a PhiBeta atom.
Morphism inverse_graded(const Morphism& f);

/// Word phi^(1)_{B1} ... phi^(depth)_{Bdepth} realizing a tower.
Morphism tower_word(const BetaTower& tower);

Element apply_atom(const MorphismAtom& atom, const Element& a);
Element apply(const Morphism& f, const Element& a);

} // namespace hq
