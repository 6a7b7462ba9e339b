#include <string>

#include "doctest.h"
#include "w22/poly.hpp"
#include "w22/verify.hpp"

using namespace w22;

namespace {

const CheckResult* find_check(const VerificationReport& rep, const std::string& id) {
    for (const auto& c : rep.checks)
        if (c.id == id) return &c;
    return nullptr;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("witness polynomial arithmetic") {
    const PolyWitness y = PolyWitness::variable();
    CHECK(PolyWitness::rising(Rational(0), 2) == y * y + y);
    CHECK(PolyWitness::falling(Rational(0), 2) == y * y - y);
    CHECK(PolyWitness::rising(Rational(0), 0) == PolyWitness::constant(Rational(1)));
    CHECK(PolyWitness::rising(Rational(2), 2).coeff(0) == Rational(6));
    CHECK((y - y).is_zero());
    CHECK(PolyWitness().degree() == -1);
    CHECK(y.degree() == 1);

    CHECK(y.str() == "y");
    CHECK(PolyWitness().str() == "0");
    CHECK((-(y * y)).str() == "-y^2");
    CHECK(PolyWitness::falling(Rational(1, 2), 2).str() == "y^2 - 1/4");
    CHECK((y * y * Rational(2) + PolyWitness::constant(Rational(-3))).str() == "2*y^2 - 3");
}

TEST_CASE("lie-law suite passes and counts cases") {
    const VerificationReport rep = suite_lie_laws(3, 40, 20, 7);
    CHECK(rep.passed());
    CHECK(rep.suite == "lie-laws");
    CHECK(rep.checks.size() == 7);
    CHECK(rep.total_cases() > 2 * 14 * 14);
    CHECK(rep.summary().find("PASS") != std::string::npos);
    CHECK(rep.cfg.at("seed") == "7");
}

TEST_CASE("factorial calculus suite") {
    const VerificationReport rep = suite_factorial_calculus();
    CHECK(rep.passed());
    CHECK(rep.checks.size() == 6);
    CHECK(find_check(rep, "hbar-specialization") != nullptr);
}

TEST_CASE("commutation rules for both twist kinds") {
    CHECK(suite_commutation_rules(GenKind::L, 1).passed());
    CHECK(suite_commutation_rules(GenKind::W, 2).passed());
}

TEST_CASE("pairings, coproduct factorials, twist conditions") {
    CHECK(suite_twist_pairings(GenKind::L, 1, 4).passed());
    CHECK(suite_twist_pairings(GenKind::W, -1, 3).passed());
    CHECK(suite_coproduct_factorials(2).passed());
    CHECK(suite_cocycle(GenKind::L, 1, 2, 4).passed());
    CHECK(suite_cocycle(GenKind::W, 1, 2, 4).passed());
}

TEST_CASE("exchange suites report the tail-factorial reading") {
    const VerificationReport l = suite_exchange_l_twist(1, 3);
    CHECK(l.passed());
    const CheckResult* probe = find_check(l, "antipode-leg-exchange");
    REQUIRE(probe != nullptr);
    CHECK(probe->detail.at("matched") == "falling tail hbar_{k-b}^[k]");
    // the rising variant first departs in the t^2 coefficient
    CHECK(probe->detail.at("alternative").find("t^2") != std::string::npos);

    const VerificationReport w = suite_exchange_w_twist(1, 3);
    CHECK(w.passed());
    probe = find_check(w, "antipode-leg-exchange");
    REQUIRE(probe != nullptr);
    // ad W chains die after one step, so both tails agree for the W twist
    CHECK(probe->detail.at("matched").find("coincides") != std::string::npos);
}

TEST_CASE("closed-form suites report exponent and tail readings") {
    const VerificationReport l = suite_closed_forms_l_twist(1, 3);
    CHECK(l.passed());
    const CheckResult* dform = find_check(l, "coproduct-closed-form");
    REQUIRE(dform != nullptr);
    CHECK(dform->detail.at("matched") == "flank exponent +n/n0");
    CHECK(dform->detail.at("alternative").find("t^1") != std::string::npos);
    const CheckResult* tail = find_check(l, "antipode-tail-reading");
    REQUIRE(tail != nullptr);
    CHECK(tail->detail.at("matched") == "falling tail hbar_k^[k]");
    CHECK(tail->detail.at("alternative").find("t^2") != std::string::npos);

    const VerificationReport w = suite_closed_forms_w_twist(2, 3);
    CHECK(w.passed());
    tail = find_check(w, "antipode-tail-reading");
    REQUIRE(tail != nullptr);
    CHECK(tail->detail.at("matched").find("coincides") != std::string::npos);
}

TEST_CASE("order zero truncation trivializes every identity") {
    const VerificationReport rep = suite_closed_forms_l_twist(1, 0);
    CHECK(rep.passed());
    const CheckResult* dform = find_check(rep, "coproduct-closed-form");
    REQUIRE(dform != nullptr);
    CHECK(dform->detail.at("matched").find("coincides") != std::string::npos);
}

TEST_CASE("run_all covers frames and kinds") {
    const auto reports = run_all(1, 5);
    CHECK(all_passed(reports));
    CHECK(reports.size() == 35);
    int commutation = 0, closed = 0;
    for (const auto& r : reports) {
        if (r.suite == "commutation-rules") ++commutation;
        if (r.suite == "closed-forms-l-twist" || r.suite == "closed-forms-w-twist") ++closed;
    }
    CHECK(commutation == 6);
    CHECK(closed == 6);
}

}
