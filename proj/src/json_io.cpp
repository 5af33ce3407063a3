#include "hq/json_io.hpp"

#include <limits>

namespace hq {

namespace {

json big_to_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

BigInt big_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

json poly_to_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(big_to_json(c));
    return arr;
}

IntPoly poly_from_json(const json& j) {
    std::vector<BigInt> c;
    for (const auto& v : j) c.push_back(big_from_json(v));
    return IntPoly(std::move(c));
}

} // namespace

void to_json(json& j, const Scalar& s) {
    if (s.mode() == FieldMode::symbolic)
        j = json{{"num", poly_to_json(s.sym().num())}, {"den", poly_to_json(s.sym().den())}};
    else
        j = json{{"rat", s.rat().str()}};
}

void from_json(const json& j, Scalar& s) {
    if (j.contains("rat")) {
        if (field().mode != FieldMode::numeric)
            throw std::invalid_argument("numeric scalar payload under a symbolic field");
        s = Scalar::rational(BigRat(j.at("rat").get<std::string>()));
        return;
    }
    if (field().mode != FieldMode::symbolic)
        throw std::invalid_argument("symbolic scalar payload under a numeric field");
    s = Scalar::symbolic(RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den"))));
}

void to_json(json& j, const Window& w) {
    j = json{{"n_lo", w.n_lo}, {"n_hi", w.n_hi}, {"m_max", w.m_max}};
}

void from_json(const json& j, Window& w) {
    j.at("n_lo").get_to(w.n_lo);
    j.at("n_hi").get_to(w.n_hi);
    j.at("m_max").get_to(w.m_max);
    w.validate();
}

void to_json(json& j, const Element& e) {
    json terms = json::array();
    for (const auto& [k, c] : e.terms()) terms.push_back(json{{"n", k.n}, {"m", k.m}, {"c", c}});
    j = json{{"terms", std::move(terms)}};
}

void from_json(const json& j, Element& e) {
    e = Element();
    for (const auto& t : j.at("terms"))
        e.add_term(MonKey{t.at("n").get<int>(), t.at("m").get<int>()}, t.at("c").get<Scalar>());
}

void to_json(json& j, const TensorElement& t) {
    json terms = json::array();
    for (const auto& [k, c] : t.terms())
        terms.push_back(json{{"n1", k.first.n},
                             {"m1", k.first.m},
                             {"n2", k.second.n},
                             {"m2", k.second.m},
                             {"c", c}});
    j = json{{"terms", std::move(terms)}};
}

void from_json(const json& j, TensorElement& t) {
    t = TensorElement();
    for (const auto& x : j.at("terms"))
        t.add_term({MonKey{x.at("n1").get<int>(), x.at("m1").get<int>()},
                    MonKey{x.at("n2").get<int>(), x.at("m2").get<int>()}},
                   x.at("c").get<Scalar>());
}

void to_json(json& j, const BetaSeq& b) {
    json supp = json::array();
    for (const auto& [n, c] : b.support()) supp.push_back(json{{"n", n}, {"c", c}});
    j = json{{"support", std::move(supp)}};
}

void from_json(const json& j, BetaSeq& b) {
    b = BetaSeq();
    for (const auto& x : j.at("support")) b.set(x.at("n").get<int>(), x.at("c").get<Scalar>());
}

void to_json(json& j, const AlphaSeq& a) {
    json dev = json::array();
    for (const auto& [n, c] : a.deviation()) dev.push_back(json{{"n", n}, {"c", c}});
    j = json{{"deviation", std::move(dev)}};
}

void from_json(const json& j, AlphaSeq& a) {
    a = AlphaSeq();
    for (const auto& x : j.at("deviation")) a.set(x.at("n").get<int>(), x.at("c").get<Scalar>());
}

void to_json(json& j, const BetaTower& t) {
    j = json{{"levels", t.levels()}};
}

void from_json(const json& j, BetaTower& t) {
    std::vector<BetaSeq> levels;
    j.at("levels").get_to(levels);
    t = BetaTower(std::move(levels));
}

void to_json(json& j, const SemidirectElt& e) {
    j = json{{"alpha", e.alpha}, {"r", e.r}};
}

void from_json(const json& j, SemidirectElt& e) {
    j.at("alpha").get_to(e.alpha);
    j.at("r").get_to(e.r);
}

void to_json(json& j, const Morphism& m) {
    json word = json::array();
    for (const auto& atom : m.word()) {
        if (const auto* t = std::get_if<ThetaAtom>(&atom))
            word.push_back(json{{"theta", t->r}});
        else if (const auto* p = std::get_if<PhiAlphaAtom>(&atom))
            word.push_back(json{{"phi_alpha", p->alpha}});
        else {
            const auto& b = std::get<PhiBetaAtom>(atom);
            word.push_back(json{{"phi_beta", json{{"s", b.s}, {"beta", b.beta}}}});
        }
    }
    j = json{{"word", std::move(word)}};
}

void from_json(const json& j, Morphism& m) {
    std::vector<MorphismAtom> word;
    for (const auto& a : j.at("word")) {
        if (a.contains("theta"))
            word.push_back(ThetaAtom{a.at("theta").get<int>()});
        else if (a.contains("phi_alpha"))
            word.push_back(PhiAlphaAtom{a.at("phi_alpha").get<AlphaSeq>()});
        else if (a.contains("phi_beta")) {
            const auto& pb = a.at("phi_beta");
            int s = pb.at("s").get<int>();
            if (s < 1) throw std::invalid_argument("phi_beta atom: level s must be >= 1");
            word.push_back(PhiBetaAtom{s, pb.at("beta").get<BetaSeq>()});
        } else
            throw std::invalid_argument("unknown morphism atom");
    }
    m = Morphism(std::move(word));
}

void to_json(json& j, const TabulatedMorphism& t) {
    json table = json::array();
    for (const auto& [k, img] : t.table)
        table.push_back(json{{"n", k.n}, {"m", k.m}, {"image", img}});
    j = json{{"window", t.window}, {"table", std::move(table)}};
}

void from_json(const json& j, TabulatedMorphism& t) {
    t = TabulatedMorphism();
    j.at("window").get_to(t.window);
    for (const auto& e : j.at("table"))
        t.table.emplace(MonKey{e.at("n").get<int>(), e.at("m").get<int>()},
                        e.at("image").get<Element>());
}

void to_json(json& j, const DecompositionResult& d) {
    j = json{{"r", d.r}, {"alpha", d.alpha}, {"tower", d.tower}};
}

void from_json(const json& j, DecompositionResult& d) {
    j.at("r").get_to(d.r);
    j.at("alpha").get_to(d.alpha);
    j.at("tower").get_to(d.tower);
}

void to_json(json& j, const CoalgebraReport& r) {
    j = json{{"pass", r.pass}, {"detail", r.detail}, {"checked", r.checked}};
    if (r.counterexample)
        j["counterexample"] = json{{"n", r.counterexample->n}, {"m", r.counterexample->m}};
}

void to_json(json& j, const FieldConfig& c) {
    if (c.mode == FieldMode::symbolic)
        j = json{{"mode", "symbolic"}};
    else
        j = json{{"mode", "numeric"}, {"q", c.q.str()}};
}

void from_json(const json& j, FieldConfig& c) {
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "symbolic") {
        c = symbolic_field();
    } else if (mode == "numeric") {
        c = numeric_field(BigRat(j.at("q").get<std::string>()));
    } else {
        throw std::invalid_argument("field mode must be \"symbolic\" or \"numeric\"");
    }
}

} // namespace hq
