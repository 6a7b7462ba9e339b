#include "w22/hopf.hpp"

#include <algorithm>

namespace w22 {

Tensor2Element delta0(const AlgebraElement& a) {
    Tensor2Element out;
    for (const auto& [mono, c] : a.terms()) {
        // Multiplicative on the word; per factor (g⊗1 + 1⊗g)^e expands
        // binomially since g⊗1 and 1⊗g commute for the same g.
        Tensor2Element term = Tensor2Element::unit() * c;
        for (const auto& f : mono.factors()) {
            Tensor2Element fac;
            for (std::int64_t j = 0; j <= f.exp; ++j) {
                fac.add_term({PBWMonomial::single(f.gen, j), PBWMonomial::single(f.gen, f.exp - j)},
                             binomial(Rational(static_cast<long>(f.exp)), j));
            }
            term = term * fac;
        }
        out += term;
    }
    return out;
}

AlgebraElement s0(const AlgebraElement& a) {
    AlgebraElement out;
    for (const auto& [mono, c] : a.terms()) {
        auto w = mono.word();
        std::reverse(w.begin(), w.end());
        AlgebraElement nf = normal_form_of_word(w);
        nf *= (w.size() % 2 == 0) ? c : -c;
        out += nf;
    }
    return out;
}

Rational eps(const AlgebraElement& a) { return a.constant_term(); }

AlgebraElement mu(const Tensor2Element& t) {
    AlgebraElement out;
    for (const auto& [k, c] : t.terms())
        out += c * multiply(AlgebraElement::monomial(k[0]), AlgebraElement::monomial(k[1]));
    return out;
}

AlgebraSeries mu(const Tensor2Series& s) {
    AlgebraSeries out(s.order());
    for (int k = 0; k <= s.order(); ++k) out.coeff(k) = mu(s.coeff(k));
    return out;
}

namespace {

// Replace one slot of each term by the two-slot image under f.
template <typename F>
Tensor3Element split_slot(const Tensor2Element& t, std::size_t slot, F&& f) {
    Tensor3Element out;
    for (const auto& [k, c] : t.terms()) {
        const Tensor2Element img = f(AlgebraElement::monomial(k[slot]));
        for (const auto& [ik, ic] : img.terms()) {
            if (slot == 0)
                out.add_term({ik[0], ik[1], k[1]}, c * ic);
            else
                out.add_term({k[0], ik[0], ik[1]}, c * ic);
        }
    }
    return out;
}

template <typename F>
Tensor2Element map_slot(const Tensor2Element& t, std::size_t slot, F&& f) {
    Tensor2Element out;
    for (const auto& [k, c] : t.terms()) {
        const AlgebraElement img = f(AlgebraElement::monomial(k[slot]));
        for (const auto& [im, ic] : img.terms()) {
            if (slot == 0)
                out.add_term({im, k[1]}, c * ic);
            else
                out.add_term({k[0], im}, c * ic);
        }
    }
    return out;
}

}  // namespace

Tensor3Series lift_delta0_left(const Tensor2Series& s) {
    Tensor3Series out(s.order());
    for (int k = 0; k <= s.order(); ++k) out.coeff(k) = split_slot(s.coeff(k), 0, delta0);
    return out;
}

Tensor3Series lift_delta0_right(const Tensor2Series& s) {
    Tensor3Series out(s.order());
    for (int k = 0; k <= s.order(); ++k) out.coeff(k) = split_slot(s.coeff(k), 1, delta0);
    return out;
}

AlgebraSeries lift_eps_left(const Tensor2Series& s) {
    AlgebraSeries out(s.order());
    for (int k = 0; k <= s.order(); ++k) {
        AlgebraElement acc;
        for (const auto& [key, c] : s.coeff(k).terms())
            if (key[0].is_unit()) acc.add_term(key[1], c);
        out.coeff(k) = acc;
    }
    return out;
}

AlgebraSeries lift_eps_right(const Tensor2Series& s) {
    AlgebraSeries out(s.order());
    for (int k = 0; k <= s.order(); ++k) {
        AlgebraElement acc;
        for (const auto& [key, c] : s.coeff(k).terms())
            if (key[1].is_unit()) acc.add_term(key[0], c);
        out.coeff(k) = acc;
    }
    return out;
}

Tensor2Series lift_s0_left(const Tensor2Series& s) {
    Tensor2Series out(s.order());
    for (int k = 0; k <= s.order(); ++k) out.coeff(k) = map_slot(s.coeff(k), 0, s0);
    return out;
}

Tensor2Series lift_s0_right(const Tensor2Series& s) {
    Tensor2Series out(s.order());
    for (int k = 0; k <= s.order(); ++k) out.coeff(k) = map_slot(s.coeff(k), 1, s0);
    return out;
}

Tensor3Series embed12(const Tensor2Series& s) {
    Tensor3Series out(s.order());
    for (int k = 0; k <= s.order(); ++k) out.coeff(k) = embed12(s.coeff(k));
    return out;
}

Tensor3Series embed23(const Tensor2Series& s) {
    Tensor3Series out(s.order());
    for (int k = 0; k <= s.order(); ++k) out.coeff(k) = embed23(s.coeff(k));
    return out;
}

}  // namespace w22
