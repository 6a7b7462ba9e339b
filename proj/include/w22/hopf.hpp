#pragma once

#include "w22/series.hpp"

namespace w22 {

// Classical (untwisted) Hopf structure on U(W(2,2)):
// generators are primitive, the antipode negates and reverses, the counit
// keeps the constant term.

Tensor2Element delta0(const AlgebraElement& a);
AlgebraElement s0(const AlgebraElement& a);
Rational eps(const AlgebraElement& a);

// Multiplication map mu(a ⊗ b) = a·b.
AlgebraElement mu(const Tensor2Element& t);
AlgebraSeries mu(const Tensor2Series& s);

// Slot lifts, applied per t-degree. "left"/"right" name the slot acted on:
// lift_delta0_left = Δ°⊗Id, lift_eps_right = Id⊗ε, and so on.
Tensor3Series lift_delta0_left(const Tensor2Series& s);
Tensor3Series lift_delta0_right(const Tensor2Series& s);
AlgebraSeries lift_eps_left(const Tensor2Series& s);
AlgebraSeries lift_eps_right(const Tensor2Series& s);
Tensor2Series lift_s0_left(const Tensor2Series& s);
Tensor2Series lift_s0_right(const Tensor2Series& s);

Tensor3Series embed12(const Tensor2Series& s);  // D ⊗ 1 pattern
Tensor3Series embed23(const Tensor2Series& s);  // 1 ⊗ D pattern

}  // namespace w22
