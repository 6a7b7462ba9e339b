#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>

#include "w22/algebra.hpp"

namespace w22 {

// Element of U(W(2,2))^{⊗A} over the rationals, A = 2 or 3.
// Terms map monomial tuples to coefficients; multiplication is slotwise
// (no signs: everything lives in even degree).
template <std::size_t A>
class TensorElement {
public:
    using Key = std::array<PBWMonomial, A>;
    using Terms = std::map<Key, Rational>;

    TensorElement() = default;  // zero

    static TensorElement zero() { return {}; }
    static TensorElement unit() { return pure(Key{}, Rational(1)); }
    static TensorElement pure(const Key& k, const Rational& c = Rational(1)) {
        TensorElement t;
        t.add_term(k, c);
        return t;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorElement& operator+=(const TensorElement& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    TensorElement& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(TensorElement a, const Rational& c) { return a *= c; }
    friend TensorElement operator*(const Rational& c, TensorElement a) { return a *= c; }
    TensorElement operator-() const {
        TensorElement r = *this;
        for (auto& [k, v] : r.terms_) v = -v;
        return r;
    }

    friend TensorElement operator*(const TensorElement& a, const TensorElement& b) {
        TensorElement out;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                std::array<AlgebraElement, A> slot;
                for (std::size_t s = 0; s < A; ++s)
                    slot[s] = multiply(AlgebraElement::monomial(ka[s]),
                                       AlgebraElement::monomial(kb[s]));
                distribute(out, slot, ca * cb);
            }
        }
        return out;
    }

    TensorElement pow(std::int64_t e) const {
        if (e < 0) throw std::invalid_argument("TensorElement::pow: negative exponent");
        TensorElement r = unit();
        for (std::int64_t i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const TensorElement&, const TensorElement&) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a.sign() < 0) {
                    os << '-';
                    a = -a;
                }
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            if (!a.is_one()) os << a.str() << '*';
            bool fs = true;
            for (const auto& m : k) {
                if (!fs) os << " ox ";
                fs = false;
                os << m.str();
            }
            first = false;
        }
        return os.str();
    }

private:
    Terms terms_;

    // Expand the outer product of per-slot elements into monomial-tuple terms.
    static void distribute(TensorElement& out, const std::array<AlgebraElement, A>& slot,
                           const Rational& c) {
        Key key;
        expand(out, slot, c, 0, key);
    }
    static void expand(TensorElement& out, const std::array<AlgebraElement, A>& slot,
                       const Rational& c, std::size_t s, Key& key) {
        if (c.is_zero()) return;
        if (s == A) {
            out.add_term(key, c);
            return;
        }
        for (const auto& [m, v] : slot[s].terms()) {
            key[s] = m;
            expand(out, slot, c * v, s + 1, key);
        }
    }
};

using Tensor2Element = TensorElement<2>;
using Tensor3Element = TensorElement<3>;

inline Tensor2Element tensor2(const AlgebraElement& a, const AlgebraElement& b) {
    Tensor2Element out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_term({ma, mb}, ca * cb);
    return out;
}

inline Tensor3Element tensor3(const AlgebraElement& a, const AlgebraElement& b,
                              const AlgebraElement& c) {
    Tensor3Element out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            for (const auto& [mc, cc] : c.terms())
                out.add_term({ma, mb, mc}, ca * cb * cc);
    return out;
}

// Leg embeddings into the triple tensor, Hopf-style subscripts:
// embed12(a⊗b) = a⊗b⊗1  (the "x ⊗ 1" pattern), embed23(a⊗b) = 1⊗a⊗b.
inline Tensor3Element embed12(const Tensor2Element& t) {
    Tensor3Element out;
    for (const auto& [k, c] : t.terms()) out.add_term({k[0], k[1], PBWMonomial()}, c);
    return out;
}

inline Tensor3Element embed23(const Tensor2Element& t) {
    Tensor3Element out;
    for (const auto& [k, c] : t.terms()) out.add_term({PBWMonomial(), k[0], k[1]}, c);
    return out;
}

}  // namespace w22
