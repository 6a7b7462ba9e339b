#include "doctest.h"
#include "support.hpp"

#include "w22/tensor.hpp"

using namespace w22;
using AE = AlgebraElement;

TEST_SUITE_BEGIN("tensor");

TEST_CASE("pure tensors and bilinearity") {
    auto t = tensor2(AE::L(1), AE::W(2));
    CHECK(t.terms().size() == 1);
    CHECK(tensor2(AE::zero(), AE::L(1)).is_zero());
    CHECK(tensor2(AE::L(1) + AE::L(2), AE::W(0)) ==
          tensor2(AE::L(1), AE::W(0)) + tensor2(AE::L(2), AE::W(0)));

    testing::Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        auto a = testing::random_element(rng);
        auto b = testing::random_element(rng);
        auto c = testing::random_scalar(rng);
        CHECK(tensor2(c * a, b) == c * tensor2(a, b));
        CHECK(tensor2(a, c * b) == c * tensor2(a, b));
        CHECK(tensor3(a, b, AE::unit()) == embed12(tensor2(a, b)));
        CHECK(tensor3(AE::unit(), a, b) == embed23(tensor2(a, b)));
    }
}

TEST_CASE("slotwise product") {
    // (L_1 ⊗ 1)(1 ⊗ W_2) = L_1 ⊗ W_2, and slots do not interact
    auto a = tensor2(AE::L(1), AE::unit());
    auto b = tensor2(AE::unit(), AE::W(2));
    CHECK(a * b == tensor2(AE::L(1), AE::W(2)));
    CHECK(b * a == tensor2(AE::L(1), AE::W(2)));

    // straightening happens inside a slot: (L_2 ⊗ 1)(L_1 ⊗ 1)
    CHECK(tensor2(AE::L(2), AE::unit()) * tensor2(AE::L(1), AE::unit()) ==
          tensor2(AE::L(2) * AE::L(1), AE::unit()));

    CHECK(Tensor2Element::unit() * a == a);

    testing::Rng rng(32);
    for (int i = 0; i < 25; ++i) {
        auto x = testing::random_element(rng, 2, 2);
        auto y = testing::random_element(rng, 2, 2);
        auto u = testing::random_element(rng, 2, 2);
        auto v = testing::random_element(rng, 2, 2);
        CHECK(tensor2(x, y) * tensor2(u, v) == tensor2(x * u, y * v));
        CHECK(tensor3(x, y, u) * tensor3(u, v, x) == tensor3(x * u, y * v, u * x));
    }
}

TEST_CASE("tensor associativity (randomized)") {
    testing::Rng rng(33);
    for (int i = 0; i < 15; ++i) {
        auto a = testing::random_element(rng, 2, 2, 3);
        auto b = testing::random_element(rng, 2, 2, 3);
        auto c = testing::random_element(rng, 2, 2, 3);
        auto t1 = tensor2(a, b);
        auto t2 = tensor2(b, c);
        auto t3 = tensor2(c, a);
        CHECK((t1 * t2) * t3 == t1 * (t2 * t3));
    }
}

TEST_CASE("embeddings multiply like commuting legs") {
    // (a⊗b⊗1)(1⊗c⊗d) has slot 1 products in the stated order
    auto lhs = embed12(tensor2(AE::L(1), AE::L(2))) * embed23(tensor2(AE::L(1), AE::W(0)));
    CHECK(lhs == tensor3(AE::L(1), AE::L(2) * AE::L(1), AE::W(0)));
}

TEST_SUITE_END();
