#include <random>
#include <string>

#include "doctest.h"
#include "w22/expr.hpp"

using namespace w22;

namespace {

std::string reprint(const std::string& src) { return print_expr(*parse_expr(src)); }

Value eval_str(const std::string& src, const TwistConfig& cfg) {
    return evaluate(*parse_expr(src), cfg);
}

}  // namespace

TEST_SUITE("expr") {
    TEST_CASE("parse and print round-trip on random ASTs") {
        std::mt19937_64 rng(20260814);
        for (int i = 0; i < 200; ++i) {
            ExprPtr e = random_expr(rng, 1 + i % 4);
            std::string printed = print_expr(*e);
            CAPTURE(printed);
            ExprPtr back = parse_expr(printed);
            CHECK(expr_equal(*e, *back));
            CHECK(print_expr(*back) == printed);
        }
    }

    TEST_CASE("printer inserts parentheses exactly where precedence needs them") {
        CHECK(reprint("L(1) + W(2) ox hb * 2") == "L(1) + W(2) ox hb * 2");
        CHECK(reprint("(L(1) + W(2)) ox hb") == "(L(1) + W(2)) ox hb");
        CHECK(reprint("(L(1) ox W(2)) * (1 ox 1)") == "(L(1) ox W(2)) * (1 ox 1)");
        CHECK(reprint("-L(1)^2") == "-L(1)^2");
        CHECK(reprint("(-L(1))^2") == "(-L(1))^2");
        CHECK(reprint("L(1)^(2 + 1)") == "L(1)^(2 + 1)");
        CHECK(reprint("(L(1)^2)^3") == "(L(1)^2)^3");
        CHECK(reprint("L(1)^2^3") == "L(1)^2^3");  // right-associative
        CHECK(reprint("1 - (2 - 3)") == "1 - (2 - 3)");
        CHECK(reprint("Delta(L(2) * W(1))") == "Delta(L(2) * W(1))");
        CHECK(reprint("hb_f(-1/2, 3)") == "hb_f(-1/2, 3)");
    }

    TEST_CASE("parse errors carry positions") {
        auto pos_of = [](const std::string& src) -> std::size_t {
            try {
                parse_expr(src);
            } catch (const ParseError& e) {
                return e.position;
            }
            return static_cast<std::size_t>(-1);
        };
        CHECK(pos_of("Q(3)") == 0);        // unknown identifier
        CHECK(pos_of("1 + foo") == 4);     // unknown identifier
        CHECK(pos_of("L(2") == 3);         // missing ')'
        CHECK(pos_of("2 +") == 3);         // missing operand
        CHECK(pos_of("L(1) ^ -2") == 7);   // '-' is not a primary
        CHECK(pos_of("hb_r(1)") == 6);     // missing second argument
        CHECK(pos_of("L(1) L(2)") == 5);   // trailing junk
        CHECK(pos_of("3 @ 4") == 2);       // bad character
        CHECK_THROWS_AS(parse_expr("ox L(1)"), ParseError);
    }

    TEST_CASE("scalar and element evaluation") {
        TwistConfig cfg(1, GenKind::L, 3);
        CHECK(std::get<Rational>(eval_str("1/2 + 1/3", cfg)) == Rational(5, 6));
        CHECK(std::get<Rational>(eval_str("2^3^2", cfg)) == Rational(512));
        CHECK(std::get<Rational>(eval_str("eps(L(5))", cfg)) == Rational(0));
        CHECK(std::get<Rational>(eval_str("eps(3/4)", cfg)) == Rational(3, 4));

        // [L_1, L_-1] = 2 L_0 in PBW form.
        CHECK(std::get<AlgebraElement>(eval_str("L(1) * L(-1) - L(-1) * L(1)", cfg)) ==
              AlgebraElement::L(0) * Rational(2));
        CHECK(std::get<AlgebraElement>(eval_str("S0(L(2) * L(3))", cfg)) ==
              std::get<AlgebraElement>(eval_str("L(3) * L(2)", cfg)));
        CHECK(std::get<AlgebraElement>(eval_str("hb", TwistConfig(2, GenKind::L, 3))) ==
              AlgebraElement::L(0) * Rational(-1, 2));
        CHECK(std::get<AlgebraElement>(eval_str("hb_r(0, 2)", cfg)) ==
              std::get<AlgebraElement>(eval_str("hb * (hb + 1)", cfg)));
        CHECK(std::get<Tensor2Element>(eval_str("Delta0(W(2))", cfg)) ==
              std::get<Tensor2Element>(eval_str("W(2) ox 1 + 1 ox W(2)", cfg)));
    }

    TEST_CASE("scalars promote to whatever they meet") {
        TwistConfig cfg(1, GenKind::L, 3);
        CHECK(std::get<AlgebraElement>(eval_str("2 + L(0)", cfg)) ==
              AlgebraElement::scalar(2) + AlgebraElement::L(0));
        CHECK(std::get<Tensor2Element>(eval_str("L(1) ox 3", cfg)) ==
              std::get<Tensor2Element>(eval_str("3 * (L(1) ox 1)", cfg)));
        auto diff = std::get<Tensor2Series>(eval_str("C(0) - 1", cfg));
        CHECK(diff == std::get<Tensor2Series>(eval_str("C(0)", cfg)) - Tensor2Series::unit(3));
        CHECK(std::get<Tensor2Series>(eval_str("1/2 * C(0) + 1/2 * C(0)", cfg)) ==
              std::get<Tensor2Series>(eval_str("C(0)", cfg)));
    }

    TEST_CASE("twist series expressions match the pairing identities") {
        for (auto kind : {GenKind::L, GenKind::W}) {
            TwistConfig cfg(1, kind, 4);
            CHECK(std::get<Tensor2Series>(eval_str("D(0) * C(0)", cfg)) ==
                  Tensor2Series::unit(4));
            CHECK(std::get<AlgebraSeries>(eval_str("V(1/2) * U(1/2)", cfg)) ==
                  one_minus_xt_power(cfg, Rational(-1)));
            CHECK(std::get<Tensor2Series>(eval_str("Delta(V(0) * U(0))", cfg)) ==
                  Tensor2Series::unit(4));
        }
    }

    TEST_CASE("twisted maps through expressions match the closed forms") {
        TwistConfig cfg(1, GenKind::L, 3);
        CHECK(std::get<Tensor2Series>(eval_str("Delta(L(3))", cfg)) ==
              closed_form_delta(cfg, gen_L(3)));
        CHECK(std::get<AlgebraSeries>(eval_str("S(W(-2))", cfg)) ==
              closed_form_antipode(cfg, gen_W(-2)));
    }

    TEST_CASE("evaluation errors name the offending kinds") {
        TwistConfig cfg(1, GenKind::L, 2);
        CHECK_THROWS_AS(eval_str("L(1/2)", cfg), EvalError);
        CHECK_THROWS_AS(eval_str("L(1) + L(1) ox L(1)", cfg), EvalError);
        CHECK_THROWS_AS(eval_str("L(1) ox L(1) ox L(1) ox L(1)", cfg), EvalError);
        CHECK_THROWS_AS(eval_str("hb^(0 - 2)", cfg), EvalError);
        CHECK_THROWS_AS(eval_str("eps(C(0))", cfg), EvalError);
        CHECK_THROWS_AS(eval_str("hb_f(0, 0 - 1)", cfg), EvalError);
        CHECK_THROWS_WITH_AS(eval_str("Delta0(1 ox 1)", cfg),
                             "Delta0 applies to algebra elements, got tensor2", EvalError);
    }

    TEST_CASE("value text output") {
        TwistConfig cfg(1, GenKind::L, 1);
        CHECK(value_str(eval_str("C(0)", cfg)) == "(1 ox 1) + (-L(0) ox L(1))*t + O(t^2)");
        CHECK(value_str(eval_str("hb", TwistConfig(2, GenKind::L, 1))) == "-1/2*L(0)");
        CHECK(value_kind(eval_str("C(0)", cfg)) == "tensor2-series");
        CHECK(value_kind(eval_str("U(0)", cfg)) == "element-series");
        CHECK(value_kind(eval_str("1 ox 1 ox 1", cfg)) == "tensor3");
    }

    TEST_CASE("values round-trip through json") {
        TwistConfig cfg(2, GenKind::W, 3);
        for (const char* src : {"5/6", "hb_r(1/2, 2)", "Delta0(L(2))", "1 ox L(1) ox W(2)",
                                "C(1)", "U(0) * V(0)", "Delta(W(2))", "S(W(2))"}) {
            CAPTURE(src);
            Value v = eval_str(src, cfg);
            Json j = value_to_json(v);
            Value back = value_from_json(j);
            CHECK(value_to_json(back).dump() == j.dump());
            CHECK(value_kind(back) == value_kind(v));
        }
        CHECK_THROWS_AS(value_from_json(Json{{"kind", "widget"}, {"value", 1}}),
                        std::invalid_argument);
    }

    TEST_CASE("latex closed displays for the twisted maps") {
        TwistConfig w_cfg(1, GenKind::W, 4);
        CHECK(latex_expr(*parse_expr("Delta(W(2))"), w_cfg) ==
              "W_{2} \\otimes (1-W_{1}t)^{2} + 1 \\otimes W_{2}");
        CHECK(latex_expr(*parse_expr("S(W(2))"), w_cfg) == "-(1-W_{1}t)^{-2}W_{2}");

        TwistConfig l_cfg(1, GenKind::L, 4);
        std::string d = latex_expr(*parse_expr("Delta(L(3))"), l_cfg);
        CHECK(d.find("L_{3} \\otimes (1-L_{1}t)^{3}") == 0);
        CHECK(d.find("\\sum_{k\\ge 1}") != std::string::npos);
        CHECK(d.find("L_{3+k}") != std::string::npos);
        // Seed L_0: the chain dies at k = 2, so the display is finite.
        std::string d0 = latex_expr(*parse_expr("Delta(L(0))"), l_cfg);
        CHECK(d0 == "L_{0} \\otimes 1 + 1 \\otimes L_{0} - "
                    "\\hbar^{\\langle 1\\rangle} \\otimes (1-L_{1}t)^{-1}\\,L_{1}\\,t");
        CHECK(latex_expr(*parse_expr("S(L(0))"), l_cfg) ==
              "-\\left(L_{0} + L_{1}\\,\\hbar_{1}^{[1]}\\,t\\right)");
        // Seed X itself brackets to zero immediately: two flank terms only.
        CHECK(latex_expr(*parse_expr("Delta(L(1))"), l_cfg) ==
              "L_{1} \\otimes (1-L_{1}t) + 1 \\otimes L_{1}");
        CHECK(latex_expr(*parse_expr("S(L(1))"), l_cfg) == "-(1-L_{1}t)^{-1}L_{1}");

        CHECK(latex_expr(*parse_expr("C(0)"), l_cfg) ==
              "\\sum_{k\\ge 0} \\frac{1}{k!}\\, \\hbar^{\\langle k\\rangle} \\otimes L_{1}^{k}t^{k}");
        CHECK(latex_expr(*parse_expr("D(1/2)"), l_cfg) ==
              "\\sum_{k\\ge 0} \\frac{(-1)^{k}}{k!}\\, \\hbar_{\\frac{1}{2}}^{[k]} \\otimes L_{1}^{k}t^{k}");
        // Generic expressions fall back to the evaluated value.
        CHECK(latex_expr(*parse_expr("1/2 * L(0)"), l_cfg) == "\\frac{1}{2}\\,L_{0}");
        CHECK(latex_expr(*parse_expr("eps(7/3)"), l_cfg) == "\\frac{7}{3}");
    }
}
