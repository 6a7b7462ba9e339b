#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace w22 {

// Exact rational scalar. Invariant: canonical form (reduced, denominator > 0),
// so equal values are representation-equal and printing is deterministic.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalars mix with ints everywhere
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Accepts "p" or "p/q" with an optional leading minus, nothing else.
    static std::optional<Rational> parse(std::string_view s);

    // str() emits "p" for integers, "p/q" otherwise; parse(str()) round-trips.
    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Integral value when the denominator is 1 and the numerator fits.
    std::optional<std::int64_t> as_integer() const {
        if (!is_integer() || !v_.get_num().fits_slong_p()) return std::nullopt;
        return static_cast<std::int64_t>(v_.get_num().get_si());
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

// k! as a Rational; k must be nonnegative.
Rational factorial(std::int64_t k);

// Generalized binomial: (1/i!) * prod_{j=0}^{i-1} (b - j). i must be nonnegative.
Rational binomial(const Rational& b, std::int64_t i);

}  // namespace w22
