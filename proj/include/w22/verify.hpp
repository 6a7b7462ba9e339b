#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "w22/generator.hpp"

namespace w22 {

// One checked identity, usually aggregated over a parameter sweep. On the
// first failing instance `detail` records the parameter tuple and the first
// coefficient where the two sides disagree; later instances still run so the
// case count is honest, but only the first divergence is kept.
struct CheckResult {
    std::string id;
    std::map<std::string, std::string> params;  // sweep description
    std::int64_t cases = 0;
    bool passed = true;
    std::map<std::string, std::string> detail;
};

struct VerificationReport {
    std::string suite;
    std::map<std::string, std::string> cfg;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool passed() const;
    std::int64_t total_cases() const;
    // "suite ............ PASS (12 checks, 3456 cases, 0.12s)" plus one line
    // per failing check.
    std::string summary() const;
};

// Lie-algebra and enveloping-algebra ground rules: antisymmetry over all basis
// pairs with |index| <= max_index, Jacobi on random basis triples, and
// associativity of the PBW product on random elements.
VerificationReport suite_lie_laws(std::int64_t max_index = 6, int jacobi_samples = 200,
                                  int assoc_samples = 100, std::uint64_t seed = 12345);

// Rising/falling factorial calculus, first for a commuting witness variable,
// then specialized to hbar inside the enveloping algebra.
VerificationReport suite_factorial_calculus();

// Commutation of generators past hbar factorials and past powers of a single
// generator, checked against brute-force normal ordering.
VerificationReport suite_commutation_rules(GenKind kind, std::int64_t n0);

// Pairings of the four twist series: D_b C_c = 1 (x) (1-Xt)^{b-c} and
// V_b U_c = (1-Xt)^{-b-c}, plus generic series inversion cross-checks.
VerificationReport suite_twist_pairings(GenKind kind, std::int64_t n0, int order = 5);

// Classical coproduct of falling factorials of hbar.
VerificationReport suite_coproduct_factorials(std::int64_t n0);

// The twist is a counital 2-cocycle: cocycle identity in three tensor legs and
// the two counit conditions.
VerificationReport suite_cocycle(GenKind kind, std::int64_t n0, int cocycle_order = 3,
                                 int counit_order = 5);

// Exchange identities moving a generator through C_b and U_b, for the L-twist
// and the W-twist respectively. Also reports which tail-factorial reading
// (falling vs rising) actually holds.
VerificationReport suite_exchange_l_twist(std::int64_t n0, int order = 4);
VerificationReport suite_exchange_w_twist(std::int64_t n0, int order = 4);

// Closed forms of the twisted coproduct and antipode against direct
// conjugation, the t = 0 limit, and the Hopf-algebra axioms for the twisted
// structure. Reports which eigenvalue sign and which tail factorial match.
VerificationReport suite_closed_forms_l_twist(std::int64_t n0, int order = 4);
VerificationReport suite_closed_forms_w_twist(std::int64_t n0, int order = 4);

// Every suite above, swept over n0 in {1, 2, -1} and both twist kinds where
// the kind matters.
std::vector<VerificationReport> run_all(int order = 4, std::uint64_t seed = 12345);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace w22
