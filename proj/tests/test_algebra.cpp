#include "doctest.h"
#include "support.hpp"

#include "w22/algebra.hpp"

using namespace w22;
using AE = AlgebraElement;

TEST_SUITE_BEGIN("algebra");

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK(Rational(7).str() == "7");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

    CHECK(Rational::parse("5/10").value() == Rational(1, 2));
    CHECK(Rational::parse("-8") == Rational(-8));
    CHECK(!Rational::parse("1/0").has_value());
    CHECK(!Rational::parse("1.5").has_value());
    CHECK(!Rational::parse("").has_value());
    CHECK(!Rational::parse("/3").has_value());

    for (const char* s : {"0", "-7", "3/4", "-22/7"})
        CHECK(Rational::parse(s).value().str() == s);
}

TEST_CASE("factorial and generalized binomial") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(5) == Rational(120));
    CHECK(binomial(Rational(5), 2) == Rational(10));
    CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(binomial(Rational(-2), 3) == Rational(-4));
    CHECK(binomial(Rational(3), 0) == Rational(1));
    CHECK(binomial(Rational(2), 5) == Rational(0));
    CHECK_THROWS_AS(binomial(Rational(1), -1), std::invalid_argument);
}

TEST_CASE("bracket on basis generators") {
    CHECK(bracket_basis(gen_L(2), gen_L(1)) == AE::L(3));
    CHECK(bracket_basis(gen_L(1), gen_W(-1)) == 2 * AE::W(0));
    CHECK(bracket_basis(gen_W(1), gen_W(5)).is_zero());
    CHECK(bracket_basis(gen_L(3), gen_L(3)).is_zero());
    CHECK(bracket_basis(gen_W(2), gen_L(0)) == 2 * AE::W(2));

    // antisymmetry across the full small table
    for (std::int64_t m = -6; m <= 6; ++m) {
        for (std::int64_t n = -6; n <= 6; ++n) {
            for (Generator a : {gen_L(m), gen_W(m)}) {
                for (Generator b : {gen_L(n), gen_W(n)}) {
                    CHECK(bracket_basis(a, b) == -bracket_basis(b, a));
                    CHECK(bracket(AE::generator(a), AE::generator(b)) == bracket_basis(a, b));
                }
            }
        }
    }
}

TEST_CASE("pbw normal form") {
    CHECK(AE::L(2) * AE::L(1) == AE::L(1) * AE::L(2) + AE::L(3));
    CHECK(AE::W(3) * AE::W(-3) == AE::W(-3) * AE::W(3));
    CHECK(AE::unit() * AE::L(5) == AE::L(5));

    // L_1 L_2 is already normal; L_2 L_1 needs one swap
    auto e = AE::L(2) * AE::L(1);
    CHECK(e.terms().size() == 2);

    // words stay sorted with L factors before W factors
    auto f = AE::W(0) * AE::L(1);
    // W_0 L_1 = L_1 W_0 + [W_0, L_1] = L_1 W_0 - W_1
    CHECK(f == AE::L(1) * AE::W(0) - AE::W(1));

    CHECK_THROWS_AS(AE::L(1).pow(-1), std::invalid_argument);
}

TEST_CASE("multiply: associativity and unit (randomized)") {
    testing::Rng rng(2024);
    for (int i = 0; i < 100; ++i) {
        auto a = testing::random_element(rng);
        auto b = testing::random_element(rng);
        auto c = testing::random_element(rng);
        CHECK((a * b) * c == a * (b * c));
    }
    auto a = testing::random_element(rng);
    CHECK(a * AE::unit() == a);
    CHECK(AE::unit() * a == a);
}

TEST_CASE("jacobi identity via multiply (randomized)") {
    testing::Rng rng(77);
    for (int i = 0; i < 200; ++i) {
        auto x = AE::generator(testing::random_generator(rng));
        auto y = AE::generator(testing::random_generator(rng));
        auto z = AE::generator(testing::random_generator(rng));
        auto jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                   bracket(z, bracket(x, y));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("grading: products of homogeneous elements add degrees") {
    testing::Rng rng(9);
    for (int i = 0; i < 50; ++i) {
        auto g = testing::random_generator(rng);
        auto h = testing::random_generator(rng);
        auto p = AE::generator(g) * AE::generator(h);
        if (p.is_zero()) continue;
        auto d = p.homogeneous_degree();
        REQUIRE(d.has_value());
        CHECK(*d == g.index + h.index);
    }
}

TEST_CASE("ad_power") {
    CHECK(ad_power(AE::L(1), 0, AE::L(3)) == AE::L(3));
    // [L_1, L_3] = -2 L_4, [L_1, L_4] = -3 L_5
    CHECK(ad_power(AE::L(1), 1, AE::L(3)) == -2 * AE::L(4));
    CHECK(ad_power(AE::L(1), 2, AE::L(3)) == 6 * AE::L(5));
    // W-chains die after one step: [W_1, L_0] = W_1, [W_1, W_1] = 0
    CHECK(ad_power(AE::W(1), 1, AE::L(0)) == AE::W(1));
    CHECK(ad_power(AE::W(1), 2, AE::L(0)).is_zero());
    CHECK_THROWS_AS(ad_power(AE::L(1), -1, AE::L(0)), std::invalid_argument);
}

TEST_CASE("ad_power matches the product formula for the L chain") {
    // (ad L_m)^k (L_n) = prod_{p=0}^{k-1} ((1-p)m - n) L_{n+km}, same with W_n.
    for (std::int64_t m = -3; m <= 3; ++m) {
        for (std::int64_t n = -3; n <= 3; ++n) {
            for (int k = 0; k <= 4; ++k) {
                Rational prod(1);
                for (int p = 0; p < k; ++p) prod *= Rational((1 - p) * m - n);
                CHECK(ad_power(AE::L(m), k, AE::L(n)) ==
                      prod * AE::L(n + k * m));
                CHECK(ad_power(AE::L(m), k, AE::W(n)) ==
                      prod * AE::W(n + k * m));
            }
        }
    }
}

TEST_CASE("twist config") {
    CHECK_THROWS_AS(TwistConfig(0, GenKind::L, 3), std::invalid_argument);
    CHECK_THROWS_AS(TwistConfig(1, GenKind::L, -1), std::invalid_argument);

    TwistConfig cfg(1, GenKind::L, 4);
    CHECK(hbar(cfg) == -AE::L(0));
    TwistConfig cfg2(-2, GenKind::W, 4);
    CHECK(hbar(cfg2) == Rational(1, 2) * AE::L(0));
    CHECK(cfg2.x() == gen_W(-2));
    CHECK(AE::monomial(cfg2.x_power(3)) == AE::W(-2).pow(3));
    CHECK_THROWS_AS(cfg2.x_power(5), std::invalid_argument);

    // [hbar, X] = X for either twist kind, any n0
    for (std::int64_t n0 : {1LL, 2LL, -1LL, 3LL, -2LL}) {
        for (GenKind k : {GenKind::L, GenKind::W}) {
            TwistConfig c(n0, k, 2);
            auto x = AE::generator(c.x());
            CHECK(bracket(hbar(c), x) == x);
        }
    }
    // eigenvalue of [hbar, -] on L_n and W_n is n/n0
    TwistConfig c3(3, GenKind::L, 2);
    CHECK(bracket(hbar(c3), AE::L(3)) == AE::L(3));
    CHECK(bracket(hbar(c3), AE::L(2)) == Rational(2, 3) * AE::L(2));
    CHECK(bracket(hbar(c3), AE::W(-5)) == Rational(-5, 3) * AE::W(-5));
    CHECK(c3.eigenvalue(2) == Rational(2, 3));
}

TEST_CASE("hbar factorials") {
    TwistConfig cfg(1, GenKind::L, 4);
    const auto h = hbar(cfg);

    CHECK(hbar_rising(cfg, Rational(0), 0) == AE::unit());
    CHECK(hbar_falling(cfg, Rational(7), 0) == AE::unit());
    CHECK(hbar_rising(cfg, Rational(1, 2), 1) == h + AE::scalar(Rational(1, 2)));
    CHECK(hbar_falling(cfg, Rational(1, 2), 1) == h + AE::scalar(Rational(1, 2)));

    // hbar_b^{[m]} = hbar_{b-m+1}^{<m>} at b = 2, m = 3
    CHECK(hbar_falling(cfg, Rational(2), 3) == hbar_rising(cfg, Rational(0), 3));

    // split laws, checked directly in U(W(2,2)) for a few (b, m, n)
    for (long bi = -2; bi <= 2; ++bi) {
        Rational b(bi, 2);
        for (int m = 0; m <= 3; ++m) {
            for (int n = 0; n + m <= 4; ++n) {
                CHECK(hbar_rising(cfg, b, m + n) ==
                      hbar_rising(cfg, b, m) * hbar_rising(cfg, b + Rational(m), n));
                CHECK(hbar_falling(cfg, b, m + n) ==
                      hbar_falling(cfg, b, m) * hbar_falling(cfg, b - Rational(m), n));
            }
        }
    }
}

TEST_CASE("element printing is canonical") {
    auto e = AE::L(2) * AE::L(1);
    CHECK(e.str() == "L(1)*L(2) + L(3)");
    CHECK((-AE::W(0) * Rational(3)).str() == "-3*W(0)");
    CHECK(AE::zero().str() == "0");
    CHECK((AE::unit() - AE::L(1) * Rational(1, 2)).str() == "1 - 1/2*L(1)");
    CHECK(AE::W(2).pow(2).str() == "W(2)^2");
}

TEST_SUITE_END();
