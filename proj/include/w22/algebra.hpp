#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "w22/generator.hpp"
#include "w22/rational.hpp"

namespace w22 {

// PBW basis monomial: product of generator powers with strictly increasing
// generators (all L factors before all W factors, indices ascending).
class PBWMonomial {
public:
    struct Factor {
        Generator gen;
        std::int64_t exp;  // >= 1
        friend auto operator<=>(const Factor&, const Factor&) = default;
    };

    PBWMonomial() = default;  // the unit monomial

    static PBWMonomial single(Generator g, std::int64_t exp = 1);
    // pre: word sorted ascending (non-decreasing)
    static PBWMonomial from_word(std::span<const Generator> word);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    std::int64_t length() const;                  // generator count with multiplicity
    std::int64_t degree() const;                  // sum of index * exp
    std::vector<Generator> word() const;          // flattened, sorted

    friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;

    std::string str() const;  // "L(1)*W(2)^2", unit prints "1"

private:
    std::vector<Factor> factors_;
};

// Element of U(W(2,2)) in PBW normal form: monomial -> coefficient, no zeros.
class AlgebraElement {
public:
    using Terms = std::map<PBWMonomial, Rational>;

    AlgebraElement() = default;  // zero

    static AlgebraElement zero() { return {}; }
    static AlgebraElement unit() { return scalar(Rational(1)); }
    static AlgebraElement scalar(const Rational& c);
    static AlgebraElement monomial(const PBWMonomial& m, const Rational& c = Rational(1));
    static AlgebraElement generator(Generator g) { return monomial(PBWMonomial::single(g)); }
    static AlgebraElement L(std::int64_t n) { return generator(gen_L(n)); }
    static AlgebraElement W(std::int64_t n) { return generator(gen_W(n)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational constant_term() const;
    // The (monomial, coeff) pair if the element has exactly one term.
    std::optional<std::pair<PBWMonomial, Rational>> single_term() const;
    // Grading by generator-index sum; nullopt for 0 or mixed-degree elements.
    std::optional<std::int64_t> homogeneous_degree() const;

    void add_term(const PBWMonomial& m, const Rational& c);

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const Rational& c);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
    friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement operator-() const;
    AlgebraElement pow(std::int64_t e) const;  // e >= 0

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

    std::string str() const;

private:
    Terms terms_;
};

// Lie bracket of basis generators:
//   [L_m, L_n] = (m-n) L_{m+n},  [L_m, W_n] = (m-n) W_{m+n},  [W_m, W_n] = 0.
AlgebraElement bracket_basis(Generator a, Generator b);

// Straighten an arbitrary word of generators into PBW normal form.
AlgebraElement normal_form_of_word(std::span<const Generator> word);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b);  // ab - ba
// (ad x)^k applied to y, via iterated commutators in U(W(2,2)).
AlgebraElement ad_power(const AlgebraElement& x, std::int64_t k, AlgebraElement y);

// Twist frame: distinguished generator X = L_{n0} or W_{n0} and truncation order.
struct TwistConfig {
    std::int64_t n0;
    GenKind twist_kind;
    int order;

    TwistConfig(std::int64_t n0_, GenKind kind_, int order_);

    Generator x() const { return {twist_kind, n0}; }
    const PBWMonomial& x_power(int k) const;  // X^k, 0 <= k <= order
    // Eigenvalue of [hbar, -] on L_n / W_n:  hbar = (-1/n0) L_0 gives n/n0.
    Rational eigenvalue(std::int64_t n) const { return Rational(n) / Rational(n0); }

private:
    std::vector<PBWMonomial> xpow_;
};

AlgebraElement hbar(const TwistConfig& cfg);  // (-1/n0) L_0; satisfies [hbar, X] = X
// Rising factorial  hbar_b^{<i>} = prod_{k=0}^{i-1} (hbar + b + k), i >= 0.
AlgebraElement hbar_rising(const TwistConfig& cfg, const Rational& b, int i);
// Falling factorial hbar_b^{[i]}  = prod_{k=0}^{i-1} (hbar + b - k), i >= 0.
AlgebraElement hbar_falling(const TwistConfig& cfg, const Rational& b, int i);

}  // namespace w22
