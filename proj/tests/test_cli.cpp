#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hq/hopf.hpp"
#include "hq/json_io.hpp"
#include "hq/morphism.hpp"
#include "hq/parser.hpp"
#include "hq/verify.hpp"

#include <random>

using namespace hq;

namespace {

Element mon(int n, int m) { return Element::monomial(n, m); }

} // namespace

TEST_CASE("parse_element grammar") {
    ScopedField f(symbolic_field());
    CHECK(parse_element("x^-2*y^3") == mon(-2, 3));
    CHECK(parse_element("3/2*q^2*x*y + x^-1") ==
          mon(1, 1).scaled(Scalar::from_ratio(3, 2) * Scalar::q_power(2)) + mon(-1, 0));
    CHECK(parse_element("0") == Element::zero());
    CHECK(parse_element("q") == Element::unit().scaled(Scalar::q()));
    CHECK(parse_element("  - x  +  2 * y ") == mon(0, 1).scaled(Scalar::from_int(2)) - mon(1, 0));
    CHECK(parse_element("x - x") == Element::zero());
    CHECK(parse_element("q^-1*x^2") == mon(2, 0).scaled(Scalar::q_power(-1)));
    CHECK(parse_element("5") == Element::unit().scaled(Scalar::from_int(5)));
}

TEST_CASE("parse_element rejects malformed input with a position") {
    ScopedField f(symbolic_field());
    CHECK_THROWS_WITH_AS(parse_element("y^-1"), doctest::Contains("negative y exponent"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_element(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("x*"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("xy"), std::invalid_argument);   // missing '*'
    CHECK_THROWS_AS(parse_element("x*q"), std::invalid_argument);  // wrong component order
    CHECK_THROWS_AS(parse_element("x^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("x + "), std::invalid_argument);
    try {
        parse_element("x + #");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("position 4") != std::string::npos);
    }
}

TEST_CASE("render_element output format") {
    ScopedField f(symbolic_field());
    CHECK(render_element(Element::zero()) == "0");
    CHECK(render_element(mon(1, 1)) == "x*y");
    CHECK(render_element(Element::unit()) == "1");
    CHECK(render_element(mon(0, 1).scaled(-Scalar::one())) == "-y");
    // a polynomial coefficient splits across q-powers
    Element e = mon(1, 1).scaled(Scalar::one() + Scalar::q());
    CHECK(render_element(e) == "x*y + q*x*y");
    CHECK(parse_element(render_element(e)) == e);
    CHECK(render_element(mon(-1, 0).scaled(Scalar::from_ratio(-2, 3))) == "-2/3*x^-1");
}

TEST_CASE("parse-render round-trip on generated elements") {
    for (const auto& cfg : {symbolic_field(), numeric_field(BigRat(7, 2))}) {
        ScopedField f(cfg);
        std::mt19937_64 rng(41);
        for (int k = 0; k < 30; ++k) {
            Element e;
            int terms = 1 + static_cast<int>(k % 4);
            for (int t = 0; t < terms; ++t) {
                Scalar c = random_beta_value(rng) * Scalar::q_power(static_cast<long long>(k % 3) - 1);
                e += Element::monomial(static_cast<int>(rng() % 9) - 4,
                                       static_cast<int>(rng() % 5), c);
            }
            CHECK(parse_element(render_element(e)) == e);
        }
        // images of the structure maps round-trip as well
        Element a = parse_element("3/2*x^-2*y^2 + q*y");
        CHECK(parse_element(render_element(antipode(a))) == antipode(a));
        CHECK(parse_element(render_element(multiply(a, a))) == multiply(a, a));
    }
}

TEST_CASE("tensor rendering uses the (x) separator") {
    ScopedField f(symbolic_field());
    CHECK(render_tensor(comultiply(mon(0, 1))) == "1 (x) y + y (x) x");
    CHECK(render_tensor(TensorElement()) == "0");
}

TEST_CASE("laurent_split and the inexpressible case") {
    ScopedField f(symbolic_field());
    Scalar c = Scalar::from_ratio(3, 2) * Scalar::q_power(-1) + Scalar::q();
    auto parts = laurent_split(c);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::make_pair(BigRat(3, 2), -1LL));
    CHECK(parts[1] == std::make_pair(BigRat(1), 1LL));
    // 1/(1+q) has no representation in the term grammar
    Scalar bad = (Scalar::one() + Scalar::q()).inverse();
    CHECK_THROWS_AS(laurent_split(bad), std::domain_error);
    CHECK_THROWS_AS(render_element(Element::unit().scaled(bad)), std::domain_error);
}

TEST_CASE("field config JSON") {
    FieldConfig sym = json::parse(R"({"mode":"symbolic"})").get<FieldConfig>();
    CHECK(sym.mode == FieldMode::symbolic);
    FieldConfig num = json::parse(R"({"mode":"numeric","q":"5/3"})").get<FieldConfig>();
    CHECK(num.mode == FieldMode::numeric);
    CHECK(num.q == BigRat(5, 3));
    CHECK_THROWS_AS(json::parse(R"({"mode":"float"})").get<FieldConfig>(), std::invalid_argument);
    CHECK(json(num).dump() == R"({"mode":"numeric","q":"5/3"})");
}

TEST_CASE("window JSON and validation") {
    Window w = json::parse(R"({"n_lo":-3,"n_hi":4,"m_max":5})").get<Window>();
    CHECK(w == Window{-3, 4, 5});
    CHECK_THROWS_AS(json::parse(R"({"n_lo":3,"n_hi":-4,"m_max":5})").get<Window>(),
                    std::invalid_argument);
}

TEST_CASE("verification suites are addressable") {
    ScopedField f(symbolic_field());
    CHECK(suite_names().size() == 10);
    VerifyOptions opts;
    opts.window = Window{-2, 2, 3};
    opts.seed = 7;
    SuiteResult r = run_suite("primitives", opts);
    CHECK(r.pass());
    CHECK_THROWS_AS(run_suite("no-such-suite", opts), std::invalid_argument);
}
