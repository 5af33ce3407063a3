#include "hq/verify.hpp"

#include "hq/hopf.hpp"
#include "hq/linsolve.hpp"
#include "hq/morphism.hpp"
#include "hq/primitives.hpp"
#include "hq/qcombinatorics.hpp"
#include "hq/tabulated.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace hq {

bool SuiteResult::pass() const {
    for (const auto& c : cases)
        if (!c.pass) return false;
    return true;
}

int SuiteResult::failed() const {
    int n = 0;
    for (const auto& c : cases)
        if (!c.pass) ++n;
    return n;
}

namespace {

std::string mon_str(int n, int m) {
    std::ostringstream os;
    os << "(" << n << "," << m << ")";
    return os.str();
}

void add_case(SuiteResult& out, std::string id, bool pass, std::string detail = "") {
    out.cases.push_back(CaseResult{std::move(id), pass, std::move(detail)});
}

void sink(const VerifyOptions& opts, const Element& e) {
    if (opts.element_sink) opts.element_sink(e);
}

long long rand_int(std::mt19937_64& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

} // namespace

Scalar random_beta_value(std::mt19937_64& rng) {
    Scalar v = Scalar::from_ratio(rand_int(rng, -3, 3), rand_int(rng, 1, 3));
    if (rand_int(rng, 0, 3) == 0) v *= Scalar::q();
    if (rand_int(rng, 0, 7) == 0) v *= Scalar::one() + Scalar::q();
    return v;
}

Scalar random_alpha_value(std::mt19937_64& rng) {
    long long num = rand_int(rng, 1, 3);
    if (rand_int(rng, 0, 1)) num = -num;
    Scalar v = Scalar::from_ratio(num, rand_int(rng, 1, 3));
    return v * Scalar::q_power(rand_int(rng, -1, 1));
}

BetaSeq random_beta_seq(std::mt19937_64& rng, int lo, int hi) {
    BetaSeq b;
    for (int n = lo; n <= hi; ++n)
        if (rand_int(rng, 0, 1)) b.set(n, random_beta_value(rng));
    return b;
}

AlphaSeq random_alpha_seq(std::mt19937_64& rng, int lo, int hi) {
    AlphaSeq a;
    for (int n = lo; n <= hi; ++n)
        if (rand_int(rng, 0, 1)) a.set(n, random_alpha_value(rng));
    return a;
}

BetaTower random_tower(std::mt19937_64& rng, int depth, int lo, int hi) {
    std::vector<BetaSeq> levels;
    for (int s = 0; s < depth; ++s) levels.push_back(random_beta_seq(rng, lo, hi));
    return BetaTower(std::move(levels));
}

namespace {

// ---------------------------------------------------------------------------
// hopf-axioms

using Key3 = std::array<MonKey, 3>;

std::map<Key3, Scalar> delta_on_left(const TensorElement& t) {
    std::map<Key3, Scalar> out;
    for (const auto& [k, c] : t.terms()) {
        TensorElement d = comultiply(Element::monomial(k.first.n, k.first.m));
        for (const auto& [dk, dc] : d.terms()) {
            Key3 key{dk.first, dk.second, k.second};
            Scalar v = c * dc;
            auto [it, inserted] = out.emplace(key, v);
            if (!inserted) {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

std::map<Key3, Scalar> delta_on_right(const TensorElement& t) {
    std::map<Key3, Scalar> out;
    for (const auto& [k, c] : t.terms()) {
        TensorElement d = comultiply(Element::monomial(k.second.n, k.second.m));
        for (const auto& [dk, dc] : d.terms()) {
            Key3 key{k.first, dk.first, dk.second};
            Scalar v = c * dc;
            auto [it, inserted] = out.emplace(key, v);
            if (!inserted) {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

Element counit_left(const TensorElement& t) { // (eps (x) id)
    Element out;
    for (const auto& [k, c] : t.terms())
        if (k.first.m == 0) out.add_term(k.second, c);
    return out;
}

Element counit_right(const TensorElement& t) { // (id (x) eps)
    Element out;
    for (const auto& [k, c] : t.terms())
        if (k.second.m == 0) out.add_term(k.first, c);
    return out;
}

SuiteResult suite_hopf_axioms(const VerifyOptions& opts) {
    SuiteResult out{"hopf-axioms", {}};
    const Window& w = opts.window;
    for (int n = w.n_lo; n <= w.n_hi; ++n) {
        for (int m = 0; m <= w.m_max; ++m) {
            Element a = Element::monomial(n, m);
            TensorElement da = comultiply(a);

            add_case(out, "coassoc" + mon_str(n, m), delta_on_left(da) == delta_on_right(da));

            bool cu = counit_left(da) == a && counit_right(da) == a;
            add_case(out, "counit" + mon_str(n, m), cu);

            Element s_conv; // m(S (x) id) Delta
            Element conv_s; // m(id (x) S) Delta
            for (const auto& [k, c] : da.terms()) {
                s_conv += multiply(antipode(Element::monomial(k.first.n, k.first.m)),
                                   Element::monomial(k.second.n, k.second.m))
                              .scaled(c);
                conv_s += multiply(Element::monomial(k.first.n, k.first.m),
                                   antipode(Element::monomial(k.second.n, k.second.m)))
                              .scaled(c);
            }
            Element eps_unit = Element::unit().scaled(counit(a));
            add_case(out, "antipode" + mon_str(n, m), s_conv == eps_unit && conv_s == eps_unit);
            sink(opts, antipode(a));

            bool graded = true;
            for (const auto& [k, c] : da.terms())
                graded = graded && (k.first.m + k.second.m == m);
            add_case(out, "graded-delta" + mon_str(n, m), graded);

            bool mult = true;
            std::string detail;
            for (int n2 = w.n_lo; n2 <= w.n_hi && mult; ++n2) {
                for (int m2 = 0; m2 <= w.m_max && mult; ++m2) {
                    Element b = Element::monomial(n2, m2);
                    Element ab = multiply(a, b);
                    if (!(comultiply(ab) == tensor_multiply(da, comultiply(b)))) {
                        mult = false;
                        detail = "fails against " + mon_str(n2, m2);
                    }
                }
            }
            add_case(out, "delta-multiplicative" + mon_str(n, m), mult, detail);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// primitives

SuiteResult suite_primitives(const VerifyOptions& opts) {
    SuiteResult out{"primitives", {}};
    const Window w{-3, 4, 5};

    auto dense = [&](const Element& e) {
        std::vector<Scalar> v;
        for (int n = w.n_lo; n <= w.n_hi; ++n)
            for (int j = 0; j <= w.m_max; ++j) v.push_back(e.coeff(n, j));
        return v;
    };
    auto same_span = [&](const std::vector<Element>& got, const std::vector<Element>& expect) {
        std::vector<std::vector<Scalar>> gv, ev;
        for (const auto& e : got) gv.push_back(dense(e));
        for (const auto& e : expect) ev.push_back(dense(e));
        return canonical_span(gv) == canonical_span(ev);
    };

    for (int m : {1, -2, 2, 3}) {
        std::vector<Element> basis = primitive_space(m, w);
        for (const auto& e : basis) sink(opts, e);
        std::vector<Element> expect;
        if (m == 1) {
            expect.push_back(Element::monomial(0, 1));
            expect.push_back(Element::monomial(1, 0) - Element::unit());
        } else {
            expect.push_back(Element::monomial(m, 0) - Element::unit());
        }
        bool ok = basis.size() == expect.size() && same_span(basis, expect);
        std::ostringstream id;
        id << "dimension-and-basis(m=" << m << ")";
        add_case(out, id.str(), ok,
                 ok ? "" : "dimension " + std::to_string(basis.size()));
    }
    add_case(out, "dimension-and-basis(m=0)", primitive_space(0, w).empty());
    return out;
}

// ---------------------------------------------------------------------------
// coalgebra-maps

SuiteResult suite_coalgebra_maps(const VerifyOptions& opts) {
    SuiteResult out{"coalgebra-maps", {}};
    std::mt19937_64 rng(opts.seed);
    const Window& w = opts.window;

    for (int r = -3; r <= 3; ++r) {
        CoalgebraReport rep = is_coalgebra_map(theta(r), w);
        add_case(out, "theta(r=" + std::to_string(r) + ")", rep.pass, rep.detail);
    }
    for (int k = 0; k < 20; ++k) {
        CoalgebraReport rep = is_coalgebra_map(phi_alpha(random_alpha_seq(rng, -2, 2)), w);
        add_case(out, "phi_alpha[" + std::to_string(k) + "]", rep.pass, rep.detail);
    }
    for (int s = 1; s <= 3; ++s) {
        for (int k = 0; k < 20; ++k) {
            Morphism f = phi_beta(s, random_beta_seq(rng, -2, 2));
            CoalgebraReport rep = is_coalgebra_map(f, w);
            add_case(out,
                     "phi_beta(s=" + std::to_string(s) + ")[" + std::to_string(k) + "]",
                     rep.pass, rep.detail);
            sink(opts, apply(f, Element::monomial(0, std::min(3, w.m_max))));
        }
    }

    // deliberately corrupted table: y -> y^2, everything else fixed
    Window cw{std::min(w.n_lo, 0), std::max(w.n_hi, 1), std::max(w.m_max, 1)};
    TabulatedMorphism bad = tabulate(Morphism(), cw);
    bad.table[MonKey{0, 1}] = Element::monomial(0, 2);
    CoalgebraReport rep = is_coalgebra_map(bad);
    bool caught = !rep.pass && rep.counterexample && *rep.counterexample == MonKey{0, 1};
    add_case(out, "corrupted-map-detected", caught, rep.detail);
    return out;
}

// ---------------------------------------------------------------------------
// graded-iso

SuiteResult suite_graded_iso(const VerifyOptions& opts) {
    SuiteResult out{"graded-iso", {}};
    std::mt19937_64 rng(opts.seed);
    const Window& w = opts.window;

    for (int k = 0; k < 20; ++k) {
        AlphaSeq a = random_alpha_seq(rng, -2, 2);
        AlphaSeq b = random_alpha_seq(rng, -2, 2);
        TabulatedMorphism lhs = tabulate(compose(phi_alpha(a), phi_alpha(b)), w);
        TabulatedMorphism rhs = tabulate(phi_alpha(a * b), w);
        add_case(out, "product[" + std::to_string(k) + "]", lhs == rhs);
        for (const auto& [key, img] : rhs.table) sink(opts, img);
    }
    for (int k = 0; k < 20; ++k) {
        SemidirectElt a{random_alpha_seq(rng, -2, 2), static_cast<int>(rand_int(rng, -2, 2))};
        SemidirectElt b{random_alpha_seq(rng, -2, 2), static_cast<int>(rand_int(rng, -2, 2))};
        auto realize = [](const SemidirectElt& e) {
            return compose(phi_alpha(e.alpha), theta(e.r));
        };
        TabulatedMorphism lhs = tabulate(compose(realize(a), realize(b)), w);
        TabulatedMorphism rhs = tabulate(realize(semidirect_mul(a, b)), w);
        add_case(out, "semidirect-law[" + std::to_string(k) + "]", lhs == rhs);
    }
    return out;
}

// ---------------------------------------------------------------------------
// filtration

Morphism random_aut0_word(std::mt19937_64& rng) {
    std::vector<MorphismAtom> word;
    int atoms = static_cast<int>(rand_int(rng, 1, 3));
    for (int i = 0; i < atoms; ++i) {
        if (rand_int(rng, 0, 1))
            word.push_back(PhiAlphaAtom{random_alpha_seq(rng, -2, 2)});
        else
            word.push_back(
                PhiBetaAtom{static_cast<int>(rand_int(rng, 1, 3)), random_beta_seq(rng, -2, 2)});
    }
    if (rand_int(rng, 0, 1)) { // conjugate by a shift; the net shift stays 0
        int r = static_cast<int>(rand_int(rng, -2, 2));
        word.insert(word.begin(), ThetaAtom{r});
        word.push_back(ThetaAtom{-r});
    }
    return Morphism(std::move(word));
}

SuiteResult suite_filtration(const VerifyOptions& opts) {
    SuiteResult out{"filtration", {}};
    std::mt19937_64 rng(opts.seed);
    const Window& w = opts.window;

    for (int k = 0; k < 20; ++k) {
        Morphism f = random_aut0_word(rng);
        std::map<std::pair<int, int>, Scalar> lead;
        auto leading = [&](int n, int m) {
            auto it = lead.find({n, m});
            if (it == lead.end())
                it = lead.emplace(std::make_pair(n, m),
                                  apply(f, Element::monomial(n, m)).coeff(n, m))
                         .first;
            return it->second;
        };
        bool ok = true;
        std::string detail;
        for (int n = w.n_lo; n <= w.n_hi && ok; ++n) {
            for (int m = 0; m <= w.m_max && ok; ++m) {
                Element img = apply(f, Element::monomial(n, m));
                sink(opts, img);
                auto top = img.top_y_degree();
                if (!top || *top > m) {
                    ok = false;
                    detail = "image of " + mon_str(n, m) + " escapes the filtration";
                    break;
                }
                if (leading(n, m).is_zero()) {
                    ok = false;
                    detail = "zero leading coefficient at " + mon_str(n, m);
                    break;
                }
                for (int i = 0; i <= m && ok; ++i) {
                    if (!(leading(n, m) == leading(n, i) * leading(n + i, m - i))) {
                        ok = false;
                        detail = "leading coefficients not multiplicative at " + mon_str(n, m) +
                                 " split i=" + std::to_string(i);
                    }
                }
            }
        }
        add_case(out, "aut0-word[" + std::to_string(k) + "]", ok, detail);
    }
    return out;
}

// ---------------------------------------------------------------------------
// f-homomorphisms

// degree-s defect of a word that fixes lower degrees: f_s(phi) with
// phi(x^n y^s) = x^n y^s + d_n (x^{n+s} - x^n)
BetaSeq degree_defect(const Morphism& f, int s, int lo, int hi, bool& shape_ok) {
    BetaSeq d;
    shape_ok = true;
    for (int n = lo; n <= hi; ++n) {
        Element diff = apply(f, Element::monomial(n, s)) - Element::monomial(n, s);
        if (diff.is_zero()) continue;
        Scalar c = diff.coeff(n + s, 0);
        if (c.is_zero() ||
            !(diff == Element::monomial(n + s, 0, c) + Element::monomial(n, 0, -c))) {
            shape_ok = false;
            return d;
        }
        d.set(n, c);
    }
    return d;
}

SuiteResult suite_f_homomorphisms(const VerifyOptions& opts) {
    SuiteResult out{"f-homomorphisms", {}};
    std::mt19937_64 rng(opts.seed);

    for (int s = 1; s <= 3; ++s) {
        for (int k = 0; k < 20; ++k) {
            BetaSeq beta = random_beta_seq(rng, -2, 2);
            BetaSeq gamma = random_beta_seq(rng, -2, 2);
            Morphism comp = compose(phi_beta(s, beta), phi_beta(s, gamma));
            bool fixes_below = true;
            for (int m = 0; m < s && fixes_below; ++m)
                for (int n = -4; n <= 4 && fixes_below; ++n)
                    fixes_below = apply(comp, Element::monomial(n, m)) == Element::monomial(n, m);
            bool shape_ok = false;
            BetaSeq defect = degree_defect(comp, s, -4 - s, 4 + s, shape_ok);
            bool ok = fixes_below && shape_ok && defect == beta + gamma;
            add_case(out, "defect-additive(s=" + std::to_string(s) + ")[" + std::to_string(k) + "]",
                     ok);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// conjugation

SuiteResult suite_conjugation(const VerifyOptions& opts) {
    SuiteResult out{"conjugation", {}};
    std::mt19937_64 rng(opts.seed);
    const Window& w = opts.window;

    for (int s = 1; s <= 3; ++s) {
        for (int k = 0; k < 20; ++k) {
            AlphaSeq alpha = random_alpha_seq(rng, -2, 2);
            BetaSeq beta = random_beta_seq(rng, -2, 2);
            int r = static_cast<int>(rand_int(rng, -2, 2));
            Morphism graded = compose(phi_alpha(alpha), theta(r));
            Morphism conj = compose(compose(graded, phi_beta(s, beta)), inverse_graded(graded));
            BetaSeq closed_param = scale(alpha_angle(alpha.inverse(), s), shift(beta, -r));
            TabulatedMorphism lhs = tabulate(conj, w);
            TabulatedMorphism rhs = tabulate(phi_beta(s, closed_param), w);
            add_case(out, "conjugate(s=" + std::to_string(s) + ")[" + std::to_string(k) + "]",
                     lhs == rhs);
            for (const auto& [key, img] : lhs.table) sink(opts, img);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// g-law

SuiteResult suite_g_law(const VerifyOptions& opts) {
    SuiteResult out{"g-law", {}};
    std::mt19937_64 rng(opts.seed);

    for (int k = 0; k < 25; ++k) {
        BetaTower b = random_tower(rng, 2, -3, 3);
        BetaTower c = random_tower(rng, 2, -3, 3);
        BetaTower d = g_mul(b, c);
        bool ok = d.level(1) == b.level(1) + c.level(1) && d.level(2) == g_mul_closed(2, b, c);
        add_case(out, "closed-form-depth2[" + std::to_string(k) + "]", ok);
    }
    for (int k = 0; k < 25; ++k) {
        BetaTower b = random_tower(rng, 3, -3, 3);
        BetaTower c = random_tower(rng, 3, -3, 3);
        BetaTower d = g_mul(b, c);
        bool ok = d.level(1) == b.level(1) + c.level(1) &&
                  d.level(2) == g_mul_closed(2, b, c) && d.level(3) == g_mul_closed(3, b, c);
        add_case(out, "closed-form-depth3[" + std::to_string(k) + "]", ok);
    }
    for (int k = 0; k < 20; ++k) {
        BetaTower a = random_tower(rng, 4, -3, 3);
        BetaTower b = random_tower(rng, 4, -3, 3);
        BetaTower c = random_tower(rng, 4, -3, 3);
        bool ok = g_mul(g_mul(a, b), c) == g_mul(a, g_mul(b, c));
        add_case(out, "associative-depth4[" + std::to_string(k) + "]", ok);
    }
    for (int k = 0; k < 10; ++k) {
        BetaTower b = random_tower(rng, 3, -3, 3);
        BetaTower inv = g_inverse(b);
        bool ok = g_mul(b, inv).is_zero() && g_mul(inv, b).is_zero() &&
                  g_mul(b, BetaTower::zero(3)) == b;
        add_case(out, "inverse-and-identity[" + std::to_string(k) + "]", ok);
    }
    return out;
}

// ---------------------------------------------------------------------------
// tower-consistency

SuiteResult suite_tower_consistency(const VerifyOptions& opts) {
    SuiteResult out{"tower-consistency", {}};
    std::mt19937_64 rng(opts.seed);

    for (int k = 0; k < 20; ++k) {
        BetaTower a = random_tower(rng, 4, -3, 3);
        BetaTower b = random_tower(rng, 4, -3, 3);
        BetaTower d = g_mul(a, b);
        bool ok = true;
        for (int i = 1; i < 4 && ok; ++i)
            ok = d.truncated(i) == g_mul(a.truncated(i), b.truncated(i));
        add_case(out, "truncation-homomorphism[" + std::to_string(k) + "]", ok);
    }
    for (int k = 0; k < 20; ++k) {
        SemidirectElt a{random_alpha_seq(rng, -2, 2), static_cast<int>(rand_int(rng, -2, 2))};
        SemidirectElt b{random_alpha_seq(rng, -2, 2), static_cast<int>(rand_int(rng, -2, 2))};
        BetaTower t = random_tower(rng, 3, -2, 2);
        BetaTower u = random_tower(rng, 3, -2, 2);
        bool action_law = act(semidirect_mul(a, b), t) == act(a, act(b, t));
        bool automorphism = act(a, g_mul(t, u)) == g_mul(act(a, t), act(a, u));
        SemidirectElt e = semidirect_mul(a, semidirect_inverse(a));
        bool inverse_law = e.alpha.is_identity() && e.r == 0;
        add_case(out, "semidirect-action[" + std::to_string(k) + "]",
                 action_law && automorphism && inverse_law);
    }
    const Window w{-6, 6, 3};
    for (int k = 0; k < 10; ++k) {
        BetaTower a = random_tower(rng, 3, -2, 2);
        BetaTower b = random_tower(rng, 3, -2, 2);
        TabulatedMorphism lhs = tabulate(compose(tower_word(a), tower_word(b)), w);
        TabulatedMorphism rhs = tabulate(tower_word(g_mul(a, b)), w);
        add_case(out, "tower-word-multiplicative[" + std::to_string(k) + "]", lhs == rhs);
        for (const auto& [key, img] : rhs.table) sink(opts, img);
    }
    return out;
}

// ---------------------------------------------------------------------------
// decompose-roundtrip

SuiteResult suite_decompose_roundtrip(const VerifyOptions& opts) {
    SuiteResult out{"decompose-roundtrip", {}};
    std::mt19937_64 rng(opts.seed);

    for (int k = 0; k < 20; ++k) {
        int depth = static_cast<int>(rand_int(rng, 1, 5));
        BetaTower tower = random_tower(rng, depth, -2, 2);
        AlphaSeq alpha = random_alpha_seq(rng, -2, 2);
        int r = static_cast<int>(rand_int(rng, -2, 2));
        Morphism f =
            compose(compose(tower_word(tower), phi_alpha(alpha)), theta(r));
        Window w{-9, 9, depth};
        TabulatedMorphism tab = tabulate(f, w);
        std::string id = "roundtrip[" + std::to_string(k) + "]";
        try {
            DecompositionResult d = decompose(tab, depth);
            bool ok = d.r == r && d.alpha == alpha && d.tower == tower;
            add_case(out, id, ok, ok ? "" : "recovered parameters differ");
        } catch (const std::exception& e) {
            add_case(out, id, false, e.what());
        }
        for (const auto& [key, img] : tab.table) sink(opts, img);
    }
    return out;
}

using SuiteFn = SuiteResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"hopf-axioms", suite_hopf_axioms},
        {"primitives", suite_primitives},
        {"coalgebra-maps", suite_coalgebra_maps},
        {"graded-iso", suite_graded_iso},
        {"filtration", suite_filtration},
        {"f-homomorphisms", suite_f_homomorphisms},
        {"conjugation", suite_conjugation},
        {"g-law", suite_g_law},
        {"tower-consistency", suite_tower_consistency},
        {"decompose-roundtrip", suite_decompose_roundtrip},
    };
    return table;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : suite_table()) v.push_back(name);
        return v;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts) {
    opts.window.validate();
    if (name == "all") {
        SuiteResult out{"all", {}};
        for (const auto& [suite, fn] : suite_table()) {
            SuiteResult r = fn(opts);
            for (auto& c : r.cases) {
                c.id = suite + "/" + c.id;
                out.cases.push_back(std::move(c));
            }
        }
        return out;
    }
    for (const auto& [suite, fn] : suite_table())
        if (suite == name) return fn(opts);
    throw std::invalid_argument("unknown verification suite: " + name);
}

} // namespace hq
