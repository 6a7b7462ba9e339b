#pragma once

#include <stdexcept>
#include <vector>

#include "w22/tensor.hpp"

namespace w22 {

// Formal power series in t truncated at t^order: coefficients 0..order,
// everything beyond is discarded. All binary operations require equal
// orders; mixing truncations silently would hide missing information.
template <typename R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : order_(order) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
        coeffs_.resize(static_cast<std::size_t>(order) + 1);
    }

    static TruncatedSeries constant(int order, const R& c) {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }
    static TruncatedSeries unit(int order) { return constant(order, R::unit()); }

    int order() const { return order_; }
    const R& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    R& coeff(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const R& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }
    TruncatedSeries& operator*=(const Rational& c) {
        for (R& v : coeffs_) v *= c;
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
    friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }
    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (R& v : r.coeffs_) v = -v;
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order(b);
        TruncatedSeries out(a.order_);
        for (int i = 0; i <= a.order_; ++i) {
            if (a.coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 0; i + j <= a.order_; ++j) {
                if (b.coeffs_[static_cast<std::size_t>(j)].is_zero()) continue;
                out.coeffs_[static_cast<std::size_t>(i + j)] +=
                    a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
            }
        }
        return out;
    }

    // Multiply by t^s (coefficients past the order fall off).
    TruncatedSeries shifted(int s) const {
        if (s < 0) throw std::invalid_argument("TruncatedSeries::shifted: negative shift");
        TruncatedSeries out(order_);
        for (int k = 0; k + s <= order_; ++k)
            out.coeffs_[static_cast<std::size_t>(k + s)] = coeffs_[static_cast<std::size_t>(k)];
        return out;
    }

    TruncatedSeries truncated(int new_order) const {
        if (new_order < 0 || new_order > order_)
            throw std::invalid_argument("TruncatedSeries::truncated: bad order");
        TruncatedSeries out(new_order);
        for (int k = 0; k <= new_order; ++k)
            out.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
        return out;
    }

    // Two-sided inverse mod t^{order+1}; requires constant term == unit.
    TruncatedSeries inverse() const {
        if (!(coeffs_[0] == R::unit()))
            throw std::invalid_argument("TruncatedSeries::inverse: constant term is not the unit");
        TruncatedSeries inv(order_);
        inv.coeffs_[0] = R::unit();
        for (int m = 1; m <= order_; ++m) {
            R acc;
            for (int j = 1; j <= m; ++j)
                acc += coeffs_[static_cast<std::size_t>(j)] * inv.coeffs_[static_cast<std::size_t>(m - j)];
            inv.coeffs_[static_cast<std::size_t>(m)] = -acc;
        }
        return inv;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    int order_;
    std::vector<R> coeffs_;

    void check_order(const TruncatedSeries& o) const {
        if (order_ != o.order_)
            throw std::invalid_argument("TruncatedSeries: truncation order mismatch");
    }
};

using AlgebraSeries = TruncatedSeries<AlgebraElement>;
using Tensor2Series = TruncatedSeries<Tensor2Element>;
using Tensor3Series = TruncatedSeries<Tensor3Element>;

// (1 - Xt)^q = sum_k (-1)^k binom(q, k) X^k t^k for rational exponent q.
AlgebraSeries one_minus_xt_power(const TwistConfig& cfg, const Rational& q);

}  // namespace w22
