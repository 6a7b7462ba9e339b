#include "w22/json_io.hpp"

#include <stdexcept>

namespace w22 {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("json: " + what);
}

Json kind_json(GenKind k) { return std::string(1, kind_char(k)); }

GenKind kind_from_json(const Json& j) {
    if (j == "L") return GenKind::L;
    if (j == "W") return GenKind::W;
    bad("generator kind must be \"L\" or \"W\"");
}

template <std::size_t A>
Json tensor_to_json(const TensorElement<A>& t) {
    Json out = Json::array();
    for (const auto& [key, c] : t.terms()) {
        Json monos = Json::array();
        for (const auto& m : key) monos.push_back(to_json(m));
        out.push_back({{"coeff", c.str()}, {"monomials", monos}});
    }
    return out;
}

template <std::size_t A>
TensorElement<A> tensor_from_json(const Json& j) {
    if (!j.is_array()) bad("tensor must be an array of terms");
    TensorElement<A> out;
    for (const Json& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("monomials"))
            bad("tensor term must have coeff and monomials");
        const Json& monos = term.at("monomials");
        if (!monos.is_array() || monos.size() != A)
            bad("tensor term arity mismatch");
        typename TensorElement<A>::Key key;
        for (std::size_t i = 0; i < A; ++i) key[i] = monomial_from_json(monos[i]);
        out.add_term(key, rational_from_json(term.at("coeff")));
    }
    return out;
}

template <typename R, typename FromJson>
TruncatedSeries<R> series_from_json(const Json& j, FromJson coeff_from_json) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        bad("series must have order and coeffs");
    if (!j.at("order").is_number_integer()) bad("series order must be an integer");
    const int order = j.at("order").get<int>();
    if (order < 0) bad("series order must be nonnegative");
    const Json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(order) + 1)
        bad("series needs exactly order+1 coefficients");
    TruncatedSeries<R> out(order);
    for (int k = 0; k <= order; ++k) out.coeff(k) = coeff_from_json(coeffs[static_cast<std::size_t>(k)]);
    return out;
}

template <typename R>
Json series_to_json(const TruncatedSeries<R>& s) {
    Json coeffs = Json::array();
    for (int k = 0; k <= s.order(); ++k) coeffs.push_back(to_json(s.coeff(k)));
    return {{"order", s.order()}, {"coeffs", coeffs}};
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const PBWMonomial& m) {
    Json out = Json::array();
    for (const auto& f : m.factors()) out.push_back({kind_json(f.gen.kind), f.gen.index, f.exp});
    return out;
}

Json to_json(const AlgebraElement& a) {
    Json out = Json::array();
    for (const auto& [m, c] : a.terms())
        out.push_back({{"coeff", c.str()}, {"monomial", to_json(m)}});
    return out;
}

Json to_json(const Tensor2Element& t) { return tensor_to_json<2>(t); }
Json to_json(const Tensor3Element& t) { return tensor_to_json<3>(t); }
Json to_json(const AlgebraSeries& s) { return series_to_json(s); }
Json to_json(const Tensor2Series& s) { return series_to_json(s); }
Json to_json(const Tensor3Series& s) { return series_to_json(s); }

Json to_json(const CheckResult& c) {
    return {{"id", c.id},
            {"params", Json(c.params)},
            {"status", c.passed ? "pass" : "fail"},
            {"cases", c.cases},
            {"detail", Json(c.detail)}};
}

Json to_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"suite", r.suite},
            {"cfg", Json(r.cfg)},
            {"checks", checks},
            {"seconds", r.seconds},
            {"status", r.passed() ? "pass" : "fail"}};
}

Json to_json(const std::vector<VerificationReport>& rs) {
    Json out = Json::array();
    for (const auto& r : rs) out.push_back(to_json(r));
    return out;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) bad("rational must be a \"p/q\" string");
    auto r = Rational::parse(j.get<std::string>());
    if (!r) bad("malformed rational \"" + j.get<std::string>() + "\"");
    return *r;
}

PBWMonomial monomial_from_json(const Json& j) {
    if (!j.is_array()) bad("monomial must be an array of factors");
    std::vector<Generator> word;
    for (const Json& f : j) {
        if (!f.is_array() || f.size() != 3) bad("monomial factor must be [kind, index, exponent]");
        if (!f[1].is_number_integer() || !f[2].is_number_integer())
            bad("monomial index and exponent must be integers");
        const Generator g{kind_from_json(f[0]), f[1].get<std::int64_t>()};
        const std::int64_t exp = f[2].get<std::int64_t>();
        if (exp <= 0) bad("monomial exponent must be positive");
        for (std::int64_t e = 0; e < exp; ++e) word.push_back(g);
    }
    // from_word rejects factors out of canonical order
    try {
        return PBWMonomial::from_word(word);
    } catch (const std::exception& e) {
        bad(e.what());
    }
}

AlgebraElement element_from_json(const Json& j) {
    if (!j.is_array()) bad("element must be an array of terms");
    AlgebraElement out;
    for (const Json& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("monomial"))
            bad("element term must have coeff and monomial");
        out.add_term(monomial_from_json(term.at("monomial")),
                     rational_from_json(term.at("coeff")));
    }
    return out;
}

Tensor2Element tensor2_from_json(const Json& j) { return tensor_from_json<2>(j); }
Tensor3Element tensor3_from_json(const Json& j) { return tensor_from_json<3>(j); }

AlgebraSeries algebra_series_from_json(const Json& j) {
    return series_from_json<AlgebraElement>(j, element_from_json);
}

Tensor2Series tensor2_series_from_json(const Json& j) {
    return series_from_json<Tensor2Element>(j, tensor2_from_json);
}

Tensor3Series tensor3_series_from_json(const Json& j) {
    return series_from_json<Tensor3Element>(j, tensor3_from_json);
}

}  // namespace w22
