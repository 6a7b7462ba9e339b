#include "w22/rational.hpp"

namespace w22 {

std::optional<Rational> Rational::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    if (s[i] == '-') ++i;
    auto digits = [&](std::size_t& pos) {
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        return pos > start;
    };
    if (!digits(i)) return std::nullopt;
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        ++i;
        std::size_t den_start = i;
        if (!digits(i) || i != s.size()) return std::nullopt;
        if (std::string_view(s.substr(den_start)).find_first_not_of('0') == std::string_view::npos)
            return std::nullopt;  // "p/0"
    }
    Rational r;
    r.v_ = mpq_class(std::string(s));
    r.v_.canonicalize();
    return r;
}

Rational factorial(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("factorial: negative argument");
    Rational r(1);
    for (std::int64_t j = 2; j <= k; ++j) r *= Rational(j);
    return r;
}

Rational binomial(const Rational& b, std::int64_t i) {
    if (i < 0) throw std::invalid_argument("binomial: negative lower index");
    Rational num(1);
    for (std::int64_t j = 0; j < i; ++j) num *= b - Rational(j);
    return num / factorial(i);
}

}  // namespace w22
