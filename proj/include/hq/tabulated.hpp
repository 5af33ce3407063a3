#pragma once

// Window-tabulated linear maps: coalgebra-map certification, triangular
// inversion, and the canonical decomposition of a tabulated coalgebra
// automorphism into (tower, alpha, r) with
//
//     phi = phi^(1)_{beta^(1)} ... phi^(depth)_{beta^(depth)} phi_alpha theta_r.
//
// Window adequacy is a checked precondition everywhere: an index escaping the
// window aborts with the offending index, never a silent truncation.

#include "hq/element.hpp"
#include "hq/morphism.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace hq {

class WindowAdequacyError : public std::runtime_error {
public:
    WindowAdequacyError(const MonKey& missing, const std::string& what)
        : std::runtime_error(what), missing_(missing) {}
    const MonKey& missing() const { return missing_; }

private:
    MonKey missing_;
};

class TriangularityError : public std::runtime_error {
public:
    TriangularityError(const MonKey& where, const std::string& what)
        : std::runtime_error(what), where_(where) {}
    const MonKey& where() const { return where_; }

private:
    MonKey where_;
};

class NotCoalgebraError : public std::runtime_error {
public:
    NotCoalgebraError(const MonKey& counterexample, const std::string& what)
        : std::runtime_error(what), counterexample_(counterexample) {}
    const MonKey& counterexample() const { return counterexample_; }

private:
    MonKey counterexample_;
};

struct TabulatedMorphism {
    Window window;
    std::map<MonKey, Element> table;

    const Element& image(const MonKey& k) const; // throws WindowAdequacyError
    bool operator==(const TabulatedMorphism&) const = default;
};

TabulatedMorphism tabulate(const Morphism& f, const Window& window);

/// Linear extension through the table; throws WindowAdequacyError when a
/// needed monomial has no entry.
Element apply(const TabulatedMorphism& t, const Element& a);

struct CoalgebraReport {
    bool pass = true;
    std::optional<MonKey> counterexample;
    std::string detail;
    int checked = 0;
};

/// Verifies Delta(f(x^n y^m)) = (f (x) f)(Delta(x^n y^m)) and eps o f = eps
/// on every window monomial; reports the first counterexample.
CoalgebraReport is_coalgebra_map(const Morphism& f, const Window& window);

/// Same for a table. Delta-compatibility is checkable only where the pairs
/// (n+i, m-i) stay inside the window (n + m <= n_hi); the counit identity is
/// checked on every entry.
CoalgebraReport is_coalgebra_map(const TabulatedMorphism& t);

/// Degree-by-degree back-substitution inverse of a triangular table: each
/// entry must be c x^{n+r} y^m + (lower y-degree) with c != 0 and a shift r
/// common to the whole table. The inverse lives on the shifted window,
/// shrunk to the largest x-interval on which back-substitution closes.
TabulatedMorphism invert(const TabulatedMorphism& t);

struct DecompositionResult {
    int r = 0;
    AlphaSeq alpha;
    BetaTower tower;

    /// Word realizing tower * phi_alpha * theta_r (last atom applied first).
    Morphism to_morphism() const;
    bool operator==(const DecompositionResult&) const = default;
};

/// Extracts r from the grouplike row, alpha from the degree-1 images, then
/// the level sequences beta^(1..depth) by the defect recursion; verifies the
/// reconstruction reproduces the table up to y-degree = depth.
DecompositionResult decompose(const TabulatedMorphism& t, int depth);

} // namespace hq
