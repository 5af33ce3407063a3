#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hq/group.hpp"
#include "hq/json_io.hpp"
#include "hq/qcombinatorics.hpp"
#include "hq/tabulated.hpp"
#include "hq/verify.hpp"

#include <random>

using namespace hq;

TEST_CASE("shift") {
    ScopedField f(symbolic_field());
    std::mt19937_64 rng(1);
    BetaSeq b = random_beta_seq(rng, -3, 3);
    CHECK(shift(b, 0) == b);
    BetaSeq e0 = BetaSeq::indicator(0);
    CHECK(shift(e0, 1).at(-1) == Scalar::one()); // sigma[1]_{-1} = sigma_0
    CHECK(shift(e0, 1).support().size() == 1);
    for (int r = -3; r <= 3; ++r)
        for (int t = -3; t <= 3; ++t) CHECK(shift(shift(b, r), t) == shift(b, r + t));
    AlphaSeq a = random_alpha_seq(rng, -3, 3);
    CHECK(shift(shift(a, 2), -2) == a);
}

TEST_CASE("beta_run") {
    ScopedField f(symbolic_field());
    std::mt19937_64 rng(2);
    BetaSeq b = random_beta_seq(rng, -3, 3);
    CHECK(beta_run(b, 0, 2, 0) == Scalar::one());
    for (int n = -2; n <= 2; ++n) {
        Scalar direct = Scalar::one();
        for (int i = 0; i < 3; ++i) direct *= b.at(n + i);
        CHECK(beta_run(b, n, 1, 3) == direct);
    }
    BetaSeq gap = BetaSeq::indicator(0, Scalar::from_int(5)); // zero at 1
    CHECK(beta_run(gap, 0, 1, 2) == Scalar::zero());
    CHECK_THROWS_AS(beta_run(b, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("alpha_angle") {
    ScopedField f(symbolic_field());
    std::mt19937_64 rng(3);
    AlphaSeq a = random_alpha_seq(rng, -3, 3);
    CHECK(alpha_angle(a, 1) == a);
    CHECK_THROWS_AS(alpha_angle(a, 0), std::invalid_argument);
    // constant block: interior values of the i-fold product are c^i
    AlphaSeq c;
    for (int n = -5; n <= 5; ++n) c.set(n, Scalar::from_int(3));
    AlphaSeq c3 = alpha_angle(c, 3);
    for (int n = -5; n <= 3; ++n) CHECK(c3.at(n) == Scalar::from_int(27));
    // multiplicativity
    AlphaSeq b = random_alpha_seq(rng, -3, 3);
    for (int i = 1; i <= 4; ++i) CHECK(alpha_angle(a * b, i) == alpha_angle(a, i) * alpha_angle(b, i));
    // definition as a pointwise run
    for (int i = 1; i <= 4; ++i)
        for (int n = -6; n <= 6; ++n) CHECK(alpha_angle(a, i).at(n) == a.run(n, i));
}

TEST_CASE("semidirect product") {
    ScopedField f(symbolic_field());
    std::mt19937_64 rng(4);
    AlphaSeq a = random_alpha_seq(rng, -2, 2);
    AlphaSeq b = random_alpha_seq(rng, -2, 2);
    CHECK(semidirect_mul({a, 0}, {b, 0}) == SemidirectElt{a * b, 0});
    CHECK(semidirect_mul({AlphaSeq(), 2}, {AlphaSeq(), -5}) == SemidirectElt{AlphaSeq(), -3});
    for (int r = -2; r <= 2; ++r)
        for (int t = -2; t <= 2; ++t)
            CHECK(semidirect_mul({a, r}, {b, t}) == SemidirectElt{a * shift(b, -r), r + t});
    for (int r = -2; r <= 2; ++r) {
        SemidirectElt e{a, r};
        SemidirectElt left = semidirect_mul(semidirect_inverse(e), e);
        SemidirectElt right = semidirect_mul(e, semidirect_inverse(e));
        CHECK(left == SemidirectElt{});
        CHECK(right == SemidirectElt{});
    }
    SemidirectElt c{b, 1};
    SemidirectElt d{random_alpha_seq(rng, -2, 2), -2};
    SemidirectElt e{a, 2};
    CHECK(semidirect_mul(semidirect_mul(c, d), e) == semidirect_mul(c, semidirect_mul(d, e)));
}

TEST_CASE("g_mul basics") {
    ScopedField f(symbolic_field());
    std::mt19937_64 rng(5);
    // depth 1 is the additive group
    BetaTower b1(std::vector<BetaSeq>{random_beta_seq(rng, -3, 3)});
    BetaTower c1(std::vector<BetaSeq>{random_beta_seq(rng, -3, 3)});
    CHECK(g_mul(b1, c1) == BetaTower({b1.level(1) + c1.level(1)}));
    // zero tower is a two-sided identity
    BetaTower b = random_tower(rng, 3, -3, 3);
    CHECK(g_mul(b, BetaTower::zero(3)) == b);
    CHECK(g_mul(BetaTower::zero(3), b) == b);
    // unequal depths align by padding
    CHECK(g_mul(b, BetaTower::zero(1)) == b);
}

TEST_CASE("g_mul depth-2 reference value") {
    ScopedField f(symbolic_field());
    // beta^(1) = e_0, gamma^(1) = e_1, level-2 inputs zero: the product's
    // level 2 is supported at 0 with value -(1+q)
    BetaTower b = BetaTower::zero(2), c = BetaTower::zero(2);
    b.level(1) = BetaSeq::indicator(0);
    c.level(1) = BetaSeq::indicator(1);
    BetaTower d = g_mul(b, c);
    CHECK(d.level(1) == b.level(1) + c.level(1));
    BetaSeq expect = BetaSeq::indicator(0, -(Scalar::one() + Scalar::q()));
    CHECK(d.level(2) == expect);
    CHECK(g_mul_closed(2, b, c) == expect);
}

TEST_CASE("closed forms match the recursion") {
    for (const auto& cfg : {symbolic_field(), numeric_field(BigRat(3))}) {
        ScopedField f(cfg);
        std::mt19937_64 rng(6);
        for (int k = 0; k < 15; ++k) {
            BetaTower b = random_tower(rng, 3, -3, 3);
            BetaTower c = random_tower(rng, 3, -3, 3);
            BetaTower d = g_mul(b, c);
            CHECK(d.level(2) == g_mul_closed(2, b, c));
            CHECK(d.level(3) == g_mul_closed(3, b, c));
        }
    }
    ScopedField f(symbolic_field());
    BetaTower z2 = BetaTower::zero(2);
    CHECK(g_mul_closed(2, z2, z2).is_zero());
    CHECK_THROWS_AS(g_mul_closed(4, z2, z2), std::invalid_argument);
    CHECK_THROWS_AS(g_mul_closed(3, z2, z2), std::invalid_argument); // depth below level
}

TEST_CASE("g_mul associativity and inverses") {
    ScopedField f(symbolic_field());
    std::mt19937_64 rng(7);
    for (int k = 0; k < 5; ++k) {
        BetaTower a = random_tower(rng, 3, -2, 2);
        BetaTower b = random_tower(rng, 3, -2, 2);
        BetaTower c = random_tower(rng, 3, -2, 2);
        CHECK(g_mul(g_mul(a, b), c) == g_mul(a, g_mul(b, c)));
    }
    for (int k = 0; k < 5; ++k) {
        BetaTower b = random_tower(rng, 4, -2, 2);
        BetaTower inv = g_inverse(b);
        CHECK(g_mul(b, inv).is_zero());
        CHECK(g_mul(inv, b).is_zero());
    }
}

TEST_CASE("tower inverse through tabulated inversion") {
    ScopedField f(symbolic_field());
    std::mt19937_64 rng(8);
    BetaTower b = random_tower(rng, 3, -2, 2);
    TabulatedMorphism tab = tabulate(tower_word(b), Window{-11, 11, 3});
    DecompositionResult d = decompose(invert(tab), 3);
    CHECK(d.r == 0);
    CHECK(d.alpha == AlphaSeq());
    CHECK(d.tower == g_inverse(b));
    CHECK(g_mul(b, d.tower).is_zero());
}

TEST_CASE("truncation is a homomorphism") {
    ScopedField f(symbolic_field());
    std::mt19937_64 rng(9);
    for (int k = 0; k < 5; ++k) {
        BetaTower a = random_tower(rng, 4, -2, 2);
        BetaTower b = random_tower(rng, 4, -2, 2);
        BetaTower d = g_mul(a, b);
        for (int i = 1; i < 4; ++i) CHECK(d.truncated(i) == g_mul(a.truncated(i), b.truncated(i)));
    }
}

TEST_CASE("act") {
    ScopedField f(symbolic_field());
    std::mt19937_64 rng(10);
    BetaTower b = random_tower(rng, 3, -2, 2);
    CHECK(act(SemidirectElt{}, b) == b);
    // pure shift acts levelwise by reindexing
    for (int r = -2; r <= 2; ++r) {
        BetaTower got = act(SemidirectElt{AlphaSeq(), r}, b);
        for (int i = 1; i <= 3; ++i) CHECK(got.level(i) == shift(b.level(i), -r));
    }
    // pure alpha scales level i by the i-fold inverse run
    AlphaSeq a = random_alpha_seq(rng, -2, 2);
    BetaTower got = act(SemidirectElt{a, 0}, b);
    for (int i = 1; i <= 3; ++i)
        CHECK(got.level(i) == scale(alpha_angle(a.inverse(), i), b.level(i)));
    // group action laws, and action by group automorphisms
    for (int k = 0; k < 5; ++k) {
        SemidirectElt u{random_alpha_seq(rng, -2, 2), static_cast<int>(k % 5) - 2};
        SemidirectElt v{random_alpha_seq(rng, -2, 2), 2 - static_cast<int>(k % 4)};
        BetaTower t = random_tower(rng, 3, -2, 2);
        BetaTower s = random_tower(rng, 3, -2, 2);
        CHECK(act(semidirect_mul(u, v), t) == act(u, act(v, t)));
        CHECK(act(u, g_mul(t, s)) == g_mul(act(u, t), act(u, s)));
    }
}

TEST_CASE("act matches conjugation of the realizing morphisms") {
    ScopedField f(symbolic_field());
    std::mt19937_64 rng(12);
    const Window w{-5, 5, 3};
    for (int s = 1; s <= 3; ++s) {
        BetaSeq beta = random_beta_seq(rng, -2, 2);
        SemidirectElt u{random_alpha_seq(rng, -2, 2), static_cast<int>(s % 3) - 1};
        BetaTower single = BetaTower::zero(s);
        single.level(s) = beta;
        Morphism graded = compose(phi_alpha(u.alpha), theta(u.r));
        Morphism conj = compose(compose(graded, tower_word(single)), inverse_graded(graded));
        CHECK(tabulate(conj, w) == tabulate(tower_word(act(u, single)), w));
    }
}

TEST_CASE("groupkit JSON round-trips") {
    ScopedField f(symbolic_field());
    std::mt19937_64 rng(13);
    BetaSeq b = random_beta_seq(rng, -2, 2);
    AlphaSeq a = random_alpha_seq(rng, -2, 2);
    BetaTower t = random_tower(rng, 4, -2, 2);
    SemidirectElt e{a, -2};
    CHECK(json(b).get<BetaSeq>() == b);
    CHECK(json(a).get<AlphaSeq>() == a);
    CHECK(json(t).get<BetaTower>() == t);
    CHECK(json(e).get<SemidirectElt>() == e);
    CHECK_THROWS_AS(json::parse("{\"levels\":[]}").get<BetaTower>(), std::invalid_argument);
}
