#include "w22/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace w22 {

PBWMonomial PBWMonomial::single(Generator g, std::int64_t exp) {
    PBWMonomial m;
    if (exp < 0) throw std::invalid_argument("PBWMonomial: negative exponent");
    if (exp > 0) m.factors_.push_back({g, exp});
    return m;
}

PBWMonomial PBWMonomial::from_word(std::span<const Generator> word) {
    PBWMonomial m;
    for (const Generator& g : word) {
        if (!m.factors_.empty() && m.factors_.back().gen == g) {
            ++m.factors_.back().exp;
        } else {
            if (!m.factors_.empty() && g < m.factors_.back().gen)
                throw std::invalid_argument("PBWMonomial::from_word: word not sorted");
            m.factors_.push_back({g, 1});
        }
    }
    return m;
}

std::int64_t PBWMonomial::length() const {
    std::int64_t n = 0;
    for (const auto& f : factors_) n += f.exp;
    return n;
}

std::int64_t PBWMonomial::degree() const {
    std::int64_t d = 0;
    for (const auto& f : factors_) d += f.gen.index * f.exp;
    return d;
}

std::vector<Generator> PBWMonomial::word() const {
    std::vector<Generator> w;
    w.reserve(static_cast<std::size_t>(length()));
    for (const auto& f : factors_)
        for (std::int64_t i = 0; i < f.exp; ++i) w.push_back(f.gen);
    return w;
}

std::string PBWMonomial::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors_) {
        if (!first) os << '*';
        first = false;
        os << kind_char(f.gen.kind) << '(' << f.gen.index << ')';
        if (f.exp != 1) os << '^' << f.exp;
    }
    return os.str();
}

AlgebraElement AlgebraElement::scalar(const Rational& c) {
    AlgebraElement e;
    e.add_term(PBWMonomial(), c);
    return e;
}

AlgebraElement AlgebraElement::monomial(const PBWMonomial& m, const Rational& c) {
    AlgebraElement e;
    e.add_term(m, c);
    return e;
}

Rational AlgebraElement::constant_term() const {
    auto it = terms_.find(PBWMonomial());
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::pair<PBWMonomial, Rational>> AlgebraElement::single_term() const {
    if (terms_.size() != 1) return std::nullopt;
    return *terms_.begin();
}

std::optional<std::int64_t> AlgebraElement::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    std::int64_t d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

void AlgebraElement::add_term(const PBWMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

AlgebraElement AlgebraElement::pow(std::int64_t e) const {
    if (e < 0) throw std::invalid_argument("AlgebraElement::pow: negative exponent");
    AlgebraElement r = unit();
    for (std::int64_t i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
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
        if (m.is_unit()) {
            os << a.str();
        } else if (a.is_one()) {
            os << m.str();
        } else {
            os << a.str() << '*' << m.str();
        }
        first = false;
    }
    return os.str();
}

AlgebraElement bracket_basis(Generator a, Generator b) {
    if (a.kind == GenKind::W && b.kind == GenKind::W) return AlgebraElement::zero();
    const std::int64_t m = a.index, n = b.index;
#ifdef W22_MUTATION_BRACKET_SIGN
    const Rational c(m + n);
#else
    const Rational c(m - n);
#endif
    if (c.is_zero()) return AlgebraElement::zero();
    GenKind k = (a.kind == GenKind::L && b.kind == GenKind::L) ? GenKind::L : GenKind::W;
    return AlgebraElement::monomial(PBWMonomial::single({k, m + n}), c);
}

AlgebraElement normal_form_of_word(std::span<const Generator> word) {
    // Worklist rewriting: pop a word, fix its leftmost inversion by
    //   g h -> h g + [g, h]
    // and push both branches. Merging coefficients per word keeps the
    // frontier polynomial. Terminates: the swap branch lowers the inversion
    // count at fixed length, the bracket branch shortens the word.
    std::map<std::vector<Generator>, Rational> pending;
    pending.emplace(std::vector<Generator>(word.begin(), word.end()), Rational(1));
    AlgebraElement out;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::vector<Generator>& w = node.key();
        const Rational coeff = std::move(node.mapped());
        if (coeff.is_zero()) continue;

        std::size_t i = 0;
        bool sorted = true;
        for (; i + 1 < w.size(); ++i) {
            if (w[i + 1] < w[i]) {
                sorted = false;
                break;
            }
        }
        if (sorted) {
            out.add_term(PBWMonomial::from_word(w), coeff);
            continue;
        }

        std::vector<Generator> swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        {
            auto [it, ins] = pending.try_emplace(std::move(swapped), coeff);
            if (!ins) it->second += coeff;
        }
#ifndef W22_MUTATION_PBW_NO_BRACKET
        AlgebraElement br = bracket_basis(w[i], w[i + 1]);
        for (const auto& [mono, c] : br.terms()) {
            std::vector<Generator> shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            const auto bw = mono.word();
            shorter.insert(shorter.end(), bw.begin(), bw.end());
            shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
            auto [it, ins] = pending.try_emplace(std::move(shorter), coeff * c);
            if (!ins) it->second += coeff * c;
        }
#endif
    }
    return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    return multiply(a, b);
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            const Rational c = ca * cb;
            // Concatenation already sorted: no straightening needed.
            if (ma.is_unit() || mb.is_unit() ||
                !(mb.factors().front().gen < ma.factors().back().gen)) {
                auto wa = ma.word();
                const auto wb = mb.word();
                wa.insert(wa.end(), wb.begin(), wb.end());
                out.add_term(PBWMonomial::from_word(wa), c);
            } else {
                auto wa = ma.word();
                const auto wb = mb.word();
                wa.insert(wa.end(), wb.begin(), wb.end());
                AlgebraElement nf = normal_form_of_word(wa);
                nf *= c;
                out += nf;
            }
        }
    }
    return out;
}

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
    return multiply(a, b) - multiply(b, a);
}

AlgebraElement ad_power(const AlgebraElement& x, std::int64_t k, AlgebraElement y) {
    if (k < 0) throw std::invalid_argument("ad_power: negative exponent");
    for (std::int64_t i = 0; i < k; ++i) y = bracket(x, y);
    return y;
}

TwistConfig::TwistConfig(std::int64_t n0_, GenKind kind_, int order_)
    : n0(n0_), twist_kind(kind_), order(order_) {
    if (n0 == 0) throw std::invalid_argument("TwistConfig: n0 must be nonzero");
    if (order < 0) throw std::invalid_argument("TwistConfig: negative order");
    xpow_.reserve(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) xpow_.push_back(PBWMonomial::single(x(), k));
}

const PBWMonomial& TwistConfig::x_power(int k) const {
    if (k < 0 || k > order) throw std::invalid_argument("TwistConfig::x_power: k out of range");
    return xpow_[static_cast<std::size_t>(k)];
}

AlgebraElement hbar(const TwistConfig& cfg) {
    return AlgebraElement::L(0) * Rational(-1, static_cast<long>(cfg.n0));
}

namespace {

AlgebraElement hbar_factorial(const TwistConfig& cfg, const Rational& b, int i, int step) {
    if (i < 0) throw std::invalid_argument("hbar factorial: negative length");
    const AlgebraElement h = hbar(cfg);
    AlgebraElement r = AlgebraElement::unit();
    for (int k = 0; k < i; ++k)
        r = r * (h + AlgebraElement::scalar(b + Rational(step * k)));
    return r;
}

}  // namespace

AlgebraElement hbar_rising(const TwistConfig& cfg, const Rational& b, int i) {
    return hbar_factorial(cfg, b, i, +1);
}

AlgebraElement hbar_falling(const TwistConfig& cfg, const Rational& b, int i) {
    return hbar_factorial(cfg, b, i, -1);
}

}  // namespace w22
