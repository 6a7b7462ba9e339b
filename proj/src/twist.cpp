#include "w22/twist.hpp"

namespace w22 {

AlgebraSeries one_minus_xt_power(const TwistConfig& cfg, const Rational& q) {
    AlgebraSeries out(cfg.order);
    for (int k = 0; k <= cfg.order; ++k) {
        Rational c = binomial(q, k);
        if (k % 2 != 0) c = -c;
        out.coeff(k) = AlgebraElement::monomial(cfg.x_power(k), c);
    }
    return out;
}

TwistElements build_twist(const TwistConfig& cfg, const Rational& b) {
    Tensor2Series C(cfg.order), D(cfg.order);
    for (int k = 0; k <= cfg.order; ++k) {
        const Rational inv_fact = Rational(1) / factorial(k);
        const AlgebraElement xk = AlgebraElement::monomial(cfg.x_power(k));
        C.coeff(k) = tensor2(hbar_rising(cfg, b, k) * inv_fact, xk);
        const Rational sgn = (k % 2 == 0) ? inv_fact : -inv_fact;
        D.coeff(k) = tensor2(hbar_falling(cfg, b, k) * sgn, xk);
    }
#ifdef W22_MUTATION_DROP_D_T2
    if (cfg.order >= 2) D.coeff(2) = Tensor2Element::zero();
#endif
    AlgebraSeries U = mu(lift_s0_left(C));
    AlgebraSeries V = mu(lift_s0_right(D));
    return TwistElements{cfg, b, std::move(C), std::move(D), std::move(U), std::move(V)};
}

TwistCoefficients bk_coefficients(const TwistConfig& cfg, Generator g, int kmax) {
    if (kmax < 0) throw std::invalid_argument("bk_coefficients: negative kmax");
    TwistCoefficients out;
    out.b.reserve(static_cast<std::size_t>(kmax) + 1);
    out.target.reserve(static_cast<std::size_t>(kmax) + 1);
    const AlgebraElement x = AlgebraElement::generator(cfg.x());
    AlgebraElement cur = AlgebraElement::generator(g);
    for (int k = 0; k <= kmax; ++k) {
        if (cur.is_zero()) {
            out.b.emplace_back(0);
            out.target.emplace_back(std::nullopt);
        } else {
            auto term = cur.single_term();
            // ad X of a basis generator stays a scalar multiple of one generator.
            if (!term || term->first.length() != 1)
                throw std::logic_error("bk_coefficients: ad power is not a scaled generator");
            out.b.push_back(term->second / factorial(k));
            out.target.push_back(term->first.factors().front().gen);
        }
        cur = bracket(x, cur);
    }
    return out;
}

TwistCoefficients bk_coefficients(const TwistConfig& cfg, std::int64_t n, int kmax) {
    return bk_coefficients(cfg, gen_L(n), kmax);
}

Tensor2Series twisted_delta(const TwistElements& t, const AlgebraElement& a) {
    const Tensor2Series middle = Tensor2Series::constant(t.cfg.order, delta0(a));
    return t.D * middle * t.C;  // D^{-1} = C at b = 0
}

Tensor2Series twisted_delta(const TwistConfig& cfg, const AlgebraElement& a) {
    return twisted_delta(build_twist(cfg, Rational(0)), a);
}

AlgebraSeries twisted_antipode(const TwistElements& t, const AlgebraElement& a) {
    const AlgebraSeries middle = AlgebraSeries::constant(t.cfg.order, s0(a));
    return t.V * middle * t.U;  // U^{-1} = V at b = 0
}

AlgebraSeries twisted_antipode(const TwistConfig& cfg, const AlgebraElement& a) {
    return twisted_antipode(build_twist(cfg, Rational(0)), a);
}

Tensor2Series closed_form_delta(const TwistConfig& cfg, Generator g, EigenSign sign) {
    const std::int64_t n = g.index;
    Rational nn = cfg.eigenvalue(n);
    if (sign == EigenSign::minus) nn = -nn;
    Tensor2Series out(cfg.order);

    const AlgebraSeries flank = one_minus_xt_power(cfg, nn);
    const AlgebraElement ge = AlgebraElement::generator(g);
    for (int j = 0; j <= cfg.order; ++j) out.coeff(j) += tensor2(ge, flank.coeff(j));

    const TwistCoefficients bk = bk_coefficients(cfg, g, cfg.order);
    for (int k = 0; k <= cfg.order; ++k) {
        if (bk.b[static_cast<std::size_t>(k)].is_zero()) continue;
        Rational c = bk.b[static_cast<std::size_t>(k)];
        if (k % 2 != 0) c = -c;
        const AlgebraElement left = hbar_rising(cfg, Rational(0), k) * c;
        const AlgebraElement tgt =
            AlgebraElement::generator(*bk.target[static_cast<std::size_t>(k)]);
        const AlgebraSeries right = one_minus_xt_power(cfg, Rational(-k));
        for (int j = 0; k + j <= cfg.order; ++j)
            out.coeff(k + j) += tensor2(left, right.coeff(j) * tgt);
    }
    return out;
}

AlgebraSeries closed_form_antipode(const TwistConfig& cfg, Generator g, EigenSign sign,
                                   TailFactorial tail) {
    const std::int64_t n = g.index;
    Rational nn = cfg.eigenvalue(n);
    if (sign == EigenSign::minus) nn = -nn;

    AlgebraSeries inner(cfg.order);
    const TwistCoefficients bk = bk_coefficients(cfg, g, cfg.order);
    for (int k = 0; k <= cfg.order; ++k) {
        if (bk.b[static_cast<std::size_t>(k)].is_zero()) continue;
        const AlgebraElement tgt =
            AlgebraElement::generator(*bk.target[static_cast<std::size_t>(k)]);
        const AlgebraElement fac = (tail == TailFactorial::falling)
                                       ? hbar_falling(cfg, Rational(k), k)
                                       : hbar_rising(cfg, Rational(k), k);
        inner.coeff(k) = bk.b[static_cast<std::size_t>(k)] * (tgt * fac);
    }
    return -(one_minus_xt_power(cfg, -nn) * inner);
}

}  // namespace w22
