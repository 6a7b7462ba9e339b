#pragma once

#include "w22/hopf.hpp"

namespace w22 {

// The four twist series attached to a frame (X = L_{n0} or W_{n0}) and a
// rational shift b, truncated at cfg.order:
//   C_b = sum (1/k!)      hbar_b^{<k>}  ⊗ X^k t^k
//   D_b = sum ((-1)^k/k!) hbar_b^{[k]}  ⊗ X^k t^k
//   U_b = mu (S°⊗Id) C_b,   V_b = mu (Id⊗S°) D_b.
// Inverses pair up as D_b C_b = 1⊗1 and V_{-b} U_b = 1.
struct TwistElements {
    TwistConfig cfg;
    Rational b;
    Tensor2Series C;
    Tensor2Series D;
    AlgebraSeries U;
    AlgebraSeries V;
};

TwistElements build_twist(const TwistConfig& cfg, const Rational& b);

// Scalars and targets of iterated ad X on a seed generator:
//   (ad X)^k (g) = k! * b[k] * target[k].
// Once the bracket chain hits zero, b[k] = 0 and target[k] is empty.
struct TwistCoefficients {
    std::vector<Rational> b;
    std::vector<std::optional<Generator>> target;
};

TwistCoefficients bk_coefficients(const TwistConfig& cfg, Generator g, int kmax);
TwistCoefficients bk_coefficients(const TwistConfig& cfg, std::int64_t n, int kmax);  // g = L_n

// Twisted coproduct D·Δ°(a)·D^{-1} and antipode U^{-1}·S°(a)·U (b = 0 frames).
Tensor2Series twisted_delta(const TwistElements& t, const AlgebraElement& a);
Tensor2Series twisted_delta(const TwistConfig& cfg, const AlgebraElement& a);
AlgebraSeries twisted_antipode(const TwistElements& t, const AlgebraElement& a);
AlgebraSeries twisted_antipode(const TwistConfig& cfg, const AlgebraElement& a);

// Candidate readings of the ambiguous spots in the closed formulas.
// EigenSign: the exponent of (1-Xt) on the flank term, ±n/n0. The plus
// reading is the eigenvalue of [hbar, -] and is what conjugation produces.
enum class EigenSign { plus, minus };
// TailFactorial: the hbar factor attached to the antipode tail,
// hbar_k^{[k]} (falling) versus hbar_k^{<k>} (rising); they agree for k <= 1.
enum class TailFactorial { falling, rising };

// Closed form of the twisted coproduct on a basis generator:
//   Δ(g) = g ⊗ (1-Xt)^𝕟 + sum_k (-1)^k b_k hbar^{<k>} ⊗ (1-Xt)^{-k} G_k t^k
// with (b_k, G_k) from bk_coefficients(cfg, g, ·) — in particular the k = 0
// tail term is 1 ⊗ g, and for the W-twist only k <= 1 survive.
Tensor2Series closed_form_delta(const TwistConfig& cfg, Generator g,
                                EigenSign sign = EigenSign::plus);

// Closed form of the twisted antipode on a basis generator:
//   S(g) = -(1-Xt)^{-𝕟} * sum_k b_k G_k hbar_k^{[k]} t^k.
AlgebraSeries closed_form_antipode(const TwistConfig& cfg, Generator g,
                                   EigenSign sign = EigenSign::plus,
                                   TailFactorial tail = TailFactorial::falling);

}  // namespace w22
