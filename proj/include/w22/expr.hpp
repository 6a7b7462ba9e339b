#pragma once

#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "w22/json_io.hpp"

namespace w22 {

// Small expression language over the engine:
//   literals     3, 1/2
//   generators   L(n), W(n)
//   hbar         hb, hb_r(b, k), hb_f(b, k)         (rising/falling factorials)
//   twist series C(b), D(b), U(b), V(b)
//   maps         Delta0(e), S0(e), eps(e), Delta(e), S(e)
//   operators    + - * ^ ox    with precedence ^ > * > ox > +/-
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class MapKind { delta0, s0, eps, delta, antipode };
enum class TwistSeriesKind { c, d, u, v };
enum class BinOp { add, sub, mul, tensor, pow };

struct NumberNode {
    Rational value;  // nonnegative in canonical trees; negation is a node
};
struct GenNode {
    GenKind kind;
    ExprPtr index;
};
struct HbarNode {};
struct HbarFactNode {
    bool rising;
    ExprPtr base;
    ExprPtr count;
};
struct TwistNode {
    TwistSeriesKind which;
    ExprPtr shift;
};
struct MapNode {
    MapKind map;
    ExprPtr arg;
};
struct NegNode {
    ExprPtr arg;
};
struct BinNode {
    BinOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Expr {
    std::variant<NumberNode, GenNode, HbarNode, HbarFactNode, TwistNode, MapNode, NegNode,
                 BinNode>
        node;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ExprPtr parse_expr(std::string_view src);  // throws ParseError

// Canonical printer. parse_expr(print_expr(e)) reproduces e node for node,
// so canonical-printed strings are fixed points of parse-then-print.
std::string print_expr(const Expr& e);

bool expr_equal(const Expr& a, const Expr& b);

// Random well-formed AST (syntactically; it need not evaluate), for
// round-trip fuzzing.
ExprPtr random_expr(std::mt19937_64& rng, int depth);

// Evaluation result: exact scalar, algebra element, tensor of arity 2 or 3,
// or a truncated series of those. Scalars promote to whatever they meet;
// tensor arity may not exceed 3.
using Value = std::variant<Rational, AlgebraElement, Tensor2Element, Tensor3Element,
                           AlgebraSeries, Tensor2Series, Tensor3Series>;

Value evaluate(const Expr& e, const TwistConfig& cfg);  // throws EvalError

std::string value_kind(const Value& v);  // "scalar", "element", "tensor2", ...
std::string value_str(const Value& v);
Json value_to_json(const Value& v);  // {"kind": ..., "value": ...}; round-trips
Value value_from_json(const Json& j);
std::string value_latex(const Value& v);

// LaTeX with a structural display for Delta/S of a single generator and for
// the four twist series (closed sums in hbar factorials); other expressions
// are evaluated and printed coefficientwise.
std::string latex_expr(const Expr& e, const TwistConfig& cfg);

}  // namespace w22
