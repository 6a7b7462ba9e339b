#include "w22/poly.hpp"

namespace w22 {

void PolyWitness::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyWitness PolyWitness::constant(const Rational& c) {
    PolyWitness p;
    if (!c.is_zero()) p.c_ = {c};
    return p;
}

PolyWitness PolyWitness::variable() {
    PolyWitness p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
}

PolyWitness PolyWitness::rising(const Rational& b, int i) {
    PolyWitness p = constant(Rational(1));
    for (int k = 0; k < i; ++k) p = p * (variable() + constant(b + Rational(k)));
    return p;
}

PolyWitness PolyWitness::falling(const Rational& b, int i) {
    PolyWitness p = constant(Rational(1));
    for (int k = 0; k < i; ++k) p = p * (variable() + constant(b - Rational(k)));
    return p;
}

PolyWitness& PolyWitness::operator+=(const PolyWitness& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

PolyWitness& PolyWitness::operator-=(const PolyWitness& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

PolyWitness& PolyWitness::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

PolyWitness operator*(const PolyWitness& a, const PolyWitness& b) {
    PolyWitness out;
    if (a.c_.empty() || b.c_.empty()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    out.trim();
    return out;
}

PolyWitness PolyWitness::operator-() const {
    PolyWitness out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

std::string PolyWitness::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const bool unit_coeff = mag.is_one() && k > 0;
        if (!unit_coeff) out += mag.str();
        if (k > 0) {
            if (!unit_coeff) out += "*";
            out += "y";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace w22
