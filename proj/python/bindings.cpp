#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "w22/expr.hpp"
#include "w22/verify.hpp"

namespace py = pybind11;

// Rational <-> fractions.Fraction, going through the exact "p/q" string form
// in both directions. Accepts int, str, and Fraction on the way in.
namespace pybind11::detail {
template <>
struct type_caster<w22::Rational> {
public:
    PYBIND11_TYPE_CASTER(w22::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (src.is_none() || PyFloat_Check(src.ptr())) return false;
        auto parsed = w22::Rational::parse(py::cast<std::string>(py::str(src)));
        if (!parsed) return false;
        value = *parsed;
        return true;
    }

    static handle cast(const w22::Rational& r, return_value_policy, handle) {
        static py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(r.str()).release();
    }
};
}  // namespace pybind11::detail

namespace {

using namespace w22;

GenKind kind_of(const std::string& s) {
    if (s == "L") return GenKind::L;
    if (s == "W") return GenKind::W;
    throw std::invalid_argument("twist kind must be 'L' or 'W', got '" + s + "'");
}

template <typename S>
S series_pow(const S& base, std::int64_t e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    S out = S::unit(base.order());
    for (std::int64_t i = 0; i < e; ++i) out = out * base;
    return out;
}

py::object value_to_py(const Value& v) {
    return std::visit([](const auto& x) { return py::cast(x); }, v);
}

// Arithmetic shared by elements, tensors, and series.
template <typename T, typename Class>
void bind_arithmetic(Class& cls) {
    cls.def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(-py::self)
        .def(py::self * Rational())
        .def(Rational() * py::self)
        .def("is_zero", &T::is_zero)
        .def("json", [](const T& x) { return to_json(x).dump(); })
        .def("__str__", [](const T& x) { return value_str(Value(x)); })
        .def("__repr__", [](const T& x) { return value_str(Value(x)); });
}

template <typename T>
auto bind_flat(py::module_& m, const char* name) {
    py::class_<T> cls(m, name);
    cls.def(py::init<>())
        .def_static("zero", &T::zero)
        .def_static("unit", &T::unit)
        .def("__pow__", [](const T& x, std::int64_t e) { return x.pow(e); });
    bind_arithmetic<T>(cls);
    return cls;
}

template <typename S>
auto bind_series(py::module_& m, const char* name) {
    using R = std::decay_t<decltype(std::declval<const S&>().coeff(0))>;
    py::class_<S> cls(m, name);
    cls.def(py::init<int>(), py::arg("order"))
        .def_static("constant", &S::constant, py::arg("order"), py::arg("coeff"))
        .def_static("unit", &S::unit, py::arg("order"))
        .def_property_readonly("order", &S::order)
        .def("coeff", [](const S& s, int k) { return s.coeff(k); }, py::arg("k"))
        .def("set_coeff", [](S& s, int k, const R& c) { s.coeff(k) = c; }, py::arg("k"),
             py::arg("coeff"))
        .def("shifted", &S::shifted, py::arg("s"))
        .def("truncated", &S::truncated, py::arg("order"))
        .def("inverse", &S::inverse)
        .def("__pow__", [](const S& x, std::int64_t e) { return series_pow(x, e); });
    bind_arithmetic<S>(cls);
    return cls;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact engine for the Drinfeld-twist quantization of W(2,2)";
    m.attr("__version__") = "0.1.0";

    py::register_exception<ParseError>(m, "ExprParseError", PyExc_ValueError);
    py::register_exception<EvalError>(m, "ExprEvalError", PyExc_ValueError);

    py::class_<TwistConfig>(m, "TwistConfig")
        .def(py::init([](std::int64_t n0, const std::string& twist, int order) {
                 return TwistConfig(n0, kind_of(twist), order);
             }),
             py::arg("n0") = 1, py::arg("twist") = "L", py::arg("order") = 4)
        .def_readonly("n0", &TwistConfig::n0)
        .def_readonly("order", &TwistConfig::order)
        .def_property_readonly(
            "twist", [](const TwistConfig& c) { return std::string(1, kind_char(c.twist_kind)); })
        .def("eigenvalue", &TwistConfig::eigenvalue, py::arg("n"))
        .def("__repr__", [](const TwistConfig& c) {
            return "TwistConfig(n0=" + std::to_string(c.n0) + ", twist='" +
                   std::string(1, kind_char(c.twist_kind)) +
                   "', order=" + std::to_string(c.order) + ")";
        });

    auto element = bind_flat<AlgebraElement>(m, "AlgebraElement");
    element.def_static("L", &AlgebraElement::L, py::arg("n"))
        .def_static("W", &AlgebraElement::W, py::arg("n"))
        .def_static("scalar", &AlgebraElement::scalar, py::arg("c"))
        .def("constant_term", &AlgebraElement::constant_term)
        .def("terms", [](const AlgebraElement& a) {
            std::vector<std::pair<std::string, Rational>> out;
            for (const auto& [mono, c] : a.terms()) out.emplace_back(mono.str(), c);
            return out;
        });
    bind_flat<Tensor2Element>(m, "Tensor2Element");
    bind_flat<Tensor3Element>(m, "Tensor3Element");

    bind_series<AlgebraSeries>(m, "AlgebraSeries");
    bind_series<Tensor2Series>(m, "Tensor2Series");
    bind_series<Tensor3Series>(m, "Tensor3Series");

    m.def("L", &AlgebraElement::L, py::arg("n"));
    m.def("W", &AlgebraElement::W, py::arg("n"));
    m.def("scalar", &AlgebraElement::scalar, py::arg("c"));
    m.def("bracket", &bracket, py::arg("a"), py::arg("b"), "Commutator ab - ba");
    m.def("hbar", &hbar, py::arg("cfg"));
    m.def("hbar_rising", &hbar_rising, py::arg("cfg"), py::arg("b"), py::arg("i"));
    m.def("hbar_falling", &hbar_falling, py::arg("cfg"), py::arg("b"), py::arg("i"));
    m.def("tensor2", &tensor2, py::arg("a"), py::arg("b"));
    m.def("tensor3", &tensor3, py::arg("a"), py::arg("b"), py::arg("c"));

    m.def("delta0", &delta0, py::arg("a"), "Classical coproduct");
    m.def("s0", &s0, py::arg("a"), "Classical antipode");
    m.def("eps", &eps, py::arg("a"), "Counit");
    m.def("mu", py::overload_cast<const Tensor2Element&>(&mu), py::arg("t"),
          "Multiplication map");
    m.def("mu_series", py::overload_cast<const Tensor2Series&>(&mu), py::arg("s"));
    m.def("one_minus_xt_power", &one_minus_xt_power, py::arg("cfg"), py::arg("q"),
          "(1 - Xt)^q as a truncated series");

    py::class_<TwistElements>(m, "TwistElements")
        .def_readonly("b", &TwistElements::b)
        .def_readonly("C", &TwistElements::C)
        .def_readonly("D", &TwistElements::D)
        .def_readonly("U", &TwistElements::U)
        .def_readonly("V", &TwistElements::V);
    m.def("build_twist", &build_twist, py::arg("cfg"), py::arg("b") = Rational(0),
          "Twist series C, D and their antipode contractions U, V");

    m.def("twisted_delta",
          py::overload_cast<const TwistConfig&, const AlgebraElement&>(&twisted_delta),
          py::arg("cfg"), py::arg("a"), "Twisted coproduct D Delta0(a) D^{-1}");
    m.def("twisted_antipode",
          py::overload_cast<const TwistConfig&, const AlgebraElement&>(&twisted_antipode),
          py::arg("cfg"), py::arg("a"), "Twisted antipode U^{-1} S0(a) U");
    m.def(
        "closed_form_delta",
        [](const TwistConfig& cfg, const std::string& kind, std::int64_t n) {
            return closed_form_delta(cfg, Generator{kind_of(kind), n});
        },
        py::arg("cfg"), py::arg("kind"), py::arg("n"));
    m.def(
        "closed_form_antipode",
        [](const TwistConfig& cfg, const std::string& kind, std::int64_t n) {
            return closed_form_antipode(cfg, Generator{kind_of(kind), n});
        },
        py::arg("cfg"), py::arg("kind"), py::arg("n"));

    m.def(
        "compute",
        [](const std::string& src, const TwistConfig& cfg) {
            return value_to_py(evaluate(*parse_expr(src), cfg));
        },
        py::arg("expr"), py::arg("cfg"), "Evaluate an expression exactly");
    m.def(
        "compute_json",
        [](const std::string& src, const TwistConfig& cfg) {
            return value_to_json(evaluate(*parse_expr(src), cfg)).dump();
        },
        py::arg("expr"), py::arg("cfg"));
    m.def(
        "latex",
        [](const std::string& src, const TwistConfig& cfg) {
            return latex_expr(*parse_expr(src), cfg);
        },
        py::arg("expr"), py::arg("cfg"));
    m.def(
        "canonical", [](const std::string& src) { return print_expr(*parse_expr(src)); },
        py::arg("expr"), "Canonical form of an expression");

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("suite", &VerificationReport::suite)
        .def_property_readonly("passed", &VerificationReport::passed)
        .def_property_readonly("cases", &VerificationReport::total_cases)
        .def("summary", &VerificationReport::summary)
        .def("json", [](const VerificationReport& r) { return to_json(r).dump(); })
        .def("__repr__", [](const VerificationReport& r) {
            return "<VerificationReport " + r.suite + (r.passed() ? " PASS>" : " FAIL>");
        });

    m.def("run_all", &run_all, py::arg("order") = 4, py::arg("seed") = 12345,
          "Run every verification suite at the standard parameters");
    m.def("all_passed", &all_passed, py::arg("reports"));
    m.def("suite_lie_laws", &suite_lie_laws, py::arg("max_index") = 6,
          py::arg("jacobi_samples") = 200, py::arg("assoc_samples") = 100,
          py::arg("seed") = 12345);
    m.def("suite_factorial_calculus", &suite_factorial_calculus);
    m.def(
        "suite_commutation_rules",
        [](const std::string& kind, std::int64_t n0) {
            return suite_commutation_rules(kind_of(kind), n0);
        },
        py::arg("kind") = "L", py::arg("n0") = 1);
    m.def(
        "suite_twist_pairings",
        [](const std::string& kind, std::int64_t n0, int order) {
            return suite_twist_pairings(kind_of(kind), n0, order);
        },
        py::arg("kind") = "L", py::arg("n0") = 1, py::arg("order") = 5);
    m.def("suite_coproduct_factorials", &suite_coproduct_factorials, py::arg("n0") = 1);
    m.def(
        "suite_cocycle",
        [](const std::string& kind, std::int64_t n0, int cocycle_order, int counit_order) {
            return suite_cocycle(kind_of(kind), n0, cocycle_order, counit_order);
        },
        py::arg("kind") = "L", py::arg("n0") = 1, py::arg("cocycle_order") = 3,
        py::arg("counit_order") = 5);
    m.def("suite_exchange_l_twist", &suite_exchange_l_twist, py::arg("n0") = 1,
          py::arg("order") = 4);
    m.def("suite_exchange_w_twist", &suite_exchange_w_twist, py::arg("n0") = 1,
          py::arg("order") = 4);
    m.def("suite_closed_forms_l_twist", &suite_closed_forms_l_twist, py::arg("n0") = 1,
          py::arg("order") = 4);
    m.def("suite_closed_forms_w_twist", &suite_closed_forms_w_twist, py::arg("n0") = 1,
          py::arg("order") = 4);
}
