#pragma once

#include <string>
#include <vector>

#include "w22/rational.hpp"

namespace w22 {

// Univariate polynomial over the rationals. The factorial-calculus identities
// are statements about a commuting variable, so they are checked here first,
// independently of the enveloping algebra.
class PolyWitness {
public:
    PolyWitness() = default;  // zero

    static PolyWitness constant(const Rational& c);
    static PolyWitness variable();
    // y_b^{<i>} = prod_{k=0}^{i-1} (y + b + k),  y_b^{[i]} = prod (y + b - k)
    static PolyWitness rising(const Rational& b, int i);
    static PolyWitness falling(const Rational& b, int i);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    PolyWitness& operator+=(const PolyWitness& o);
    PolyWitness& operator-=(const PolyWitness& o);
    PolyWitness& operator*=(const Rational& s);
    friend PolyWitness operator+(PolyWitness a, const PolyWitness& b) { return a += b; }
    friend PolyWitness operator-(PolyWitness a, const PolyWitness& b) { return a -= b; }
    friend PolyWitness operator*(PolyWitness a, const Rational& s) { return a *= s; }
    friend PolyWitness operator*(const Rational& s, PolyWitness a) { return a *= s; }
    friend PolyWitness operator*(const PolyWitness& a, const PolyWitness& b);
    PolyWitness operator-() const;

    friend bool operator==(const PolyWitness&, const PolyWitness&) = default;

    std::string str() const;

private:
    std::vector<Rational> c_;  // c_[k] y^k, no trailing zeros

    void trim();
};

}  // namespace w22
