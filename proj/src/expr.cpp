#include "w22/expr.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>
#include <utility>

#include "w22/hopf.hpp"
#include "w22/twist.hpp"

namespace w22 {
namespace {

// ---------------------------------------------------------------- lexing

enum class Tok { number, ident, lparen, rparen, comma, plus, minus, star, caret, end };

struct Token {
    Tok kind = Tok::end;
    std::size_t pos = 0;
    std::string text;    // lexeme (or "end of input")
    Rational num;        // set for Tok::number
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    std::string_view src_;
    std::size_t i_ = 0;
    Token tok_;

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_cont(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        tok_ = Token{};
        tok_.pos = i_;
        if (i_ >= src_.size()) {
            tok_.kind = Tok::end;
            tok_.text = "end of input";
            return;
        }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            // "p/q" is a single literal when the slash is ungapped and followed
            // by a digit; '/' is not an operator in this language.
            if (j + 1 < src_.size() && src_[j] == '/' &&
                std::isdigit(static_cast<unsigned char>(src_[j + 1]))) {
                ++j;
                while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            }
            tok_.kind = Tok::number;
            tok_.text = std::string(src_.substr(i_, j - i_));
            auto parsed = Rational::parse(tok_.text);
            if (!parsed) throw ParseError("invalid rational literal '" + tok_.text + "'", i_);
            tok_.num = *parsed;
            i_ = j;
            return;
        }
        if (ident_start(c)) {
            std::size_t j = i_;
            while (j < src_.size() && ident_cont(src_[j])) ++j;
            tok_.kind = Tok::ident;
            tok_.text = std::string(src_.substr(i_, j - i_));
            i_ = j;
            return;
        }
        switch (c) {
            case '(': tok_.kind = Tok::lparen; break;
            case ')': tok_.kind = Tok::rparen; break;
            case ',': tok_.kind = Tok::comma; break;
            case '+': tok_.kind = Tok::plus; break;
            case '-': tok_.kind = Tok::minus; break;
            case '*': tok_.kind = Tok::star; break;
            case '^': tok_.kind = Tok::caret; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i_);
        }
        tok_.text = std::string(1, c);
        ++i_;
    }
};

// ---------------------------------------------------------------- parsing

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr make_bin(BinOp op, ExprPtr l, ExprPtr r) {
    return make(Expr{BinNode{op, std::move(l), std::move(r)}});
}

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) {}

    ExprPtr parse() {
        ExprPtr e = parse_sum();
        const Token& t = lex_.peek();
        if (t.kind != Tok::end)
            throw ParseError("unexpected '" + t.text + "' after expression", t.pos);
        return e;
    }

private:
    Lexer lex_;

    bool peek_is_ox() const {
        return lex_.peek().kind == Tok::ident && lex_.peek().text == "ox";
    }

    Token expect(Tok kind, const std::string& what) {
        const Token& t = lex_.peek();
        if (t.kind != kind)
            throw ParseError("expected " + what + ", got '" + t.text + "'", t.pos);
        return lex_.next();
    }

    ExprPtr parse_sum() {
        ExprPtr e = parse_tensor();
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            BinOp op = lex_.next().kind == Tok::plus ? BinOp::add : BinOp::sub;
            e = make_bin(op, std::move(e), parse_tensor());
        }
        return e;
    }

    ExprPtr parse_tensor() {
        ExprPtr e = parse_product();
        while (peek_is_ox()) {
            lex_.next();
            e = make_bin(BinOp::tensor, std::move(e), parse_product());
        }
        return e;
    }

    ExprPtr parse_product() {
        ExprPtr e = parse_unary();
        while (lex_.peek().kind == Tok::star) {
            lex_.next();
            e = make_bin(BinOp::mul, std::move(e), parse_unary());
        }
        return e;
    }

    ExprPtr parse_unary() {
        if (lex_.peek().kind == Tok::minus) {
            lex_.next();
            return make(Expr{NegNode{parse_unary()}});
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        if (lex_.peek().kind == Tok::caret) {
            lex_.next();
            return make_bin(BinOp::pow, std::move(base), parse_power());  // right-assoc
        }
        return base;
    }

    ExprPtr parse_call_arg() {
        expect(Tok::lparen, "'('");
        ExprPtr a = parse_sum();
        expect(Tok::rparen, "')'");
        return a;
    }

    std::pair<ExprPtr, ExprPtr> parse_call_args2() {
        expect(Tok::lparen, "'('");
        ExprPtr a = parse_sum();
        expect(Tok::comma, "','");
        ExprPtr b = parse_sum();
        expect(Tok::rparen, "')'");
        return {std::move(a), std::move(b)};
    }

    ExprPtr parse_primary() {
        Token t = lex_.next();
        switch (t.kind) {
            case Tok::number:
                return make(Expr{NumberNode{t.num}});
            case Tok::lparen: {
                ExprPtr e = parse_sum();
                expect(Tok::rparen, "')'");
                return e;
            }
            case Tok::ident:
                return parse_ident(std::move(t));
            default:
                throw ParseError("expected an expression, got '" + t.text + "'", t.pos);
        }
    }

    ExprPtr parse_ident(Token t) {
        const std::string& id = t.text;
        if (id == "hb") return make(Expr{HbarNode{}});
        if (id == "L" || id == "W")
            return make(Expr{GenNode{id == "L" ? GenKind::L : GenKind::W, parse_call_arg()}});
        if (id == "hb_r" || id == "hb_f") {
            auto [b, k] = parse_call_args2();
            return make(Expr{HbarFactNode{id == "hb_r", std::move(b), std::move(k)}});
        }
        if (id == "C" || id == "D" || id == "U" || id == "V") {
            TwistSeriesKind which = id == "C"   ? TwistSeriesKind::c
                                    : id == "D" ? TwistSeriesKind::d
                                    : id == "U" ? TwistSeriesKind::u
                                                : TwistSeriesKind::v;
            return make(Expr{TwistNode{which, parse_call_arg()}});
        }
        if (id == "Delta0" || id == "S0" || id == "eps" || id == "Delta" || id == "S") {
            MapKind map = id == "Delta0"   ? MapKind::delta0
                          : id == "S0"     ? MapKind::s0
                          : id == "eps"    ? MapKind::eps
                          : id == "Delta"  ? MapKind::delta
                                           : MapKind::antipode;
            return make(Expr{MapNode{map, parse_call_arg()}});
        }
        if (id == "ox") throw ParseError("'ox' needs an expression on both sides", t.pos);
        throw ParseError("unknown identifier '" + id + "'", t.pos);
    }
};

// --------------------------------------------------------------- printing

// Precedence: primaries 50, ^ 40, unary - 35, * 30, ox 20, +/- 10.
int precedence(const Expr& e) {
    if (std::holds_alternative<NegNode>(e.node)) return 35;
    if (const auto* b = std::get_if<BinNode>(&e.node)) {
        switch (b->op) {
            case BinOp::add:
            case BinOp::sub: return 10;
            case BinOp::tensor: return 20;
            case BinOp::mul: return 30;
            case BinOp::pow: return 40;
        }
    }
    return 50;
}

std::string map_name(MapKind m) {
    switch (m) {
        case MapKind::delta0: return "Delta0";
        case MapKind::s0: return "S0";
        case MapKind::eps: return "eps";
        case MapKind::delta: return "Delta";
        case MapKind::antipode: return "S";
    }
    return {};
}

std::string twist_name(TwistSeriesKind w) {
    switch (w) {
        case TwistSeriesKind::c: return "C";
        case TwistSeriesKind::d: return "D";
        case TwistSeriesKind::u: return "U";
        case TwistSeriesKind::v: return "V";
    }
    return {};
}

std::string print_wrapped(const Expr& e, bool wrap) {
    std::string s = print_expr(e);
    return wrap ? "(" + s + ")" : std::move(s);
}

}  // namespace

std::string print_expr(const Expr& e) {
    struct Visitor {
        std::string operator()(const NumberNode& n) const { return n.value.str(); }
        std::string operator()(const GenNode& g) const {
            return std::string(1, kind_char(g.kind)) + "(" + print_expr(*g.index) + ")";
        }
        std::string operator()(const HbarNode&) const { return "hb"; }
        std::string operator()(const HbarFactNode& h) const {
            return std::string(h.rising ? "hb_r" : "hb_f") + "(" + print_expr(*h.base) + ", " +
                   print_expr(*h.count) + ")";
        }
        std::string operator()(const TwistNode& t) const {
            return twist_name(t.which) + "(" + print_expr(*t.shift) + ")";
        }
        std::string operator()(const MapNode& m) const {
            return map_name(m.map) + "(" + print_expr(*m.arg) + ")";
        }
        std::string operator()(const NegNode& n) const {
            return "-" + print_wrapped(*n.arg, precedence(*n.arg) < 35);
        }
        std::string operator()(const BinNode& b) const {
            int p = b.op == BinOp::add || b.op == BinOp::sub ? 10
                    : b.op == BinOp::tensor                  ? 20
                    : b.op == BinOp::mul                     ? 30
                                                             : 40;
            if (b.op == BinOp::pow)
                return print_wrapped(*b.lhs, precedence(*b.lhs) <= p) + "^" +
                       print_wrapped(*b.rhs, precedence(*b.rhs) < p);
            const char* op = b.op == BinOp::add      ? " + "
                             : b.op == BinOp::sub    ? " - "
                             : b.op == BinOp::tensor ? " ox "
                                                     : " * ";
            return print_wrapped(*b.lhs, precedence(*b.lhs) < p) + op +
                   print_wrapped(*b.rhs, precedence(*b.rhs) <= p);
        }
    };
    return std::visit(Visitor{}, e.node);
}

ExprPtr parse_expr(std::string_view src) { return Parser(src).parse(); }

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    struct Visitor {
        const Expr& other;
        bool operator()(const NumberNode& n) const {
            return std::get<NumberNode>(other.node).value == n.value;
        }
        bool operator()(const GenNode& g) const {
            const auto& o = std::get<GenNode>(other.node);
            return o.kind == g.kind && expr_equal(*g.index, *o.index);
        }
        bool operator()(const HbarNode&) const { return true; }
        bool operator()(const HbarFactNode& h) const {
            const auto& o = std::get<HbarFactNode>(other.node);
            return o.rising == h.rising && expr_equal(*h.base, *o.base) &&
                   expr_equal(*h.count, *o.count);
        }
        bool operator()(const TwistNode& t) const {
            const auto& o = std::get<TwistNode>(other.node);
            return o.which == t.which && expr_equal(*t.shift, *o.shift);
        }
        bool operator()(const MapNode& m) const {
            const auto& o = std::get<MapNode>(other.node);
            return o.map == m.map && expr_equal(*m.arg, *o.arg);
        }
        bool operator()(const NegNode& n) const {
            return expr_equal(*n.arg, *std::get<NegNode>(other.node).arg);
        }
        bool operator()(const BinNode& b) const {
            const auto& o = std::get<BinNode>(other.node);
            return o.op == b.op && expr_equal(*b.lhs, *o.lhs) && expr_equal(*b.rhs, *o.rhs);
        }
    };
    return std::visit(Visitor{b}, a.node);
}

namespace {

// Canonical trees keep literals nonnegative; negation is a node.
ExprPtr random_int_expr(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    std::int64_t v = std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    ExprPtr n = make(Expr{NumberNode{Rational(static_cast<long>(v < 0 ? -v : v))}});
    return v < 0 ? make(Expr{NegNode{std::move(n)}}) : n;
}

ExprPtr random_scalar_expr(std::mt19937_64& rng) {
    long num = std::uniform_int_distribution<long>(0, 9)(rng);
    long den = std::uniform_int_distribution<long>(1, 4)(rng);
    ExprPtr n = make(Expr{NumberNode{Rational(num, den)}});
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0)
        return make(Expr{NegNode{std::move(n)}});
    return n;
}

ExprPtr random_leaf(std::mt19937_64& rng) {
    switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
        case 0: return random_scalar_expr(rng);
        case 1:
            return make(Expr{GenNode{std::uniform_int_distribution<int>(0, 1)(rng) == 0
                                         ? GenKind::L
                                         : GenKind::W,
                                     random_int_expr(rng, -6, 6)}});
        case 2: return make(Expr{HbarNode{}});
        case 3:
            return make(Expr{HbarFactNode{std::uniform_int_distribution<int>(0, 1)(rng) == 0,
                                          random_scalar_expr(rng), random_int_expr(rng, 0, 4)}});
        case 4: {
            auto which = static_cast<TwistSeriesKind>(std::uniform_int_distribution<int>(0, 3)(rng));
            return make(Expr{TwistNode{which, random_scalar_expr(rng)}});
        }
        default: return random_int_expr(rng, 0, 12);
    }
}

}  // namespace

ExprPtr random_expr(std::mt19937_64& rng, int depth) {
    if (depth <= 0) return random_leaf(rng);
    switch (std::uniform_int_distribution<int>(0, 8)(rng)) {
        case 0: return make_bin(BinOp::add, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 1: return make_bin(BinOp::sub, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 2: return make_bin(BinOp::mul, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 3:
            return make_bin(BinOp::tensor, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 4: return make_bin(BinOp::pow, random_expr(rng, depth - 1), random_int_expr(rng, 0, 3));
        case 5: return make(Expr{NegNode{random_expr(rng, depth - 1)}});
        case 6: {
            auto map = static_cast<MapKind>(std::uniform_int_distribution<int>(0, 4)(rng));
            return make(Expr{MapNode{map, random_expr(rng, depth - 1)}});
        }
        default: return random_leaf(rng);
    }
}

// ------------------------------------------------------------- evaluation

namespace {

// Value variant indices: 0 scalar, 1..3 element/tensor2/tensor3, 4..6 series.
constexpr int kArity[7] = {0, 1, 2, 3, 1, 2, 3};

bool is_series_value(const Value& v) { return v.index() >= 4; }

[[noreturn]] void kind_error(const std::string& op, const Value& a, const Value& b) {
    throw EvalError("cannot " + op + " " + value_kind(a) + " and " + value_kind(b));
}

Value promote_scalar(const Rational& r, std::size_t target_index, int order) {
    switch (target_index) {
        case 1: return AlgebraElement::scalar(r);
        case 2: return Tensor2Element::unit() * r;
        case 3: return Tensor3Element::unit() * r;
        case 4: return AlgebraSeries::constant(order, AlgebraElement::scalar(r));
        case 5: return Tensor2Series::constant(order, Tensor2Element::unit() * r);
        case 6: return Tensor3Series::constant(order, Tensor3Element::unit() * r);
        default: return r;
    }
}

Value to_series_value(Value v, int order) {
    switch (v.index()) {
        case 0:
            return AlgebraSeries::constant(order, AlgebraElement::scalar(std::get<Rational>(v)));
        case 1: return AlgebraSeries::constant(order, std::get<AlgebraElement>(v));
        case 2: return Tensor2Series::constant(order, std::get<Tensor2Element>(v));
        case 3: return Tensor3Series::constant(order, std::get<Tensor3Element>(v));
        default: return v;
    }
}

// Align two operands on the same variant alternative: scalars take the other
// side's shape, plain values join series when the other side is a series.
void align(Value& a, Value& b, int order) {
    if (std::holds_alternative<Rational>(a) && !std::holds_alternative<Rational>(b))
        a = promote_scalar(std::get<Rational>(a), b.index(), order);
    else if (std::holds_alternative<Rational>(b) && !std::holds_alternative<Rational>(a))
        b = promote_scalar(std::get<Rational>(b), a.index(), order);
    if (is_series_value(a) != is_series_value(b)) {
        a = to_series_value(std::move(a), order);
        b = to_series_value(std::move(b), order);
    }
}

Value add_values(Value a, Value b, int order, bool subtract) {
    align(a, b, order);
    if (a.index() != b.index()) kind_error(subtract ? "subtract" : "add", a, b);
    auto combine = [&](auto& x, const auto& y) -> Value { return subtract ? x - y : x + y; };
    switch (a.index()) {
        case 0: return combine(std::get<Rational>(a), std::get<Rational>(b));
        case 1: return combine(std::get<AlgebraElement>(a), std::get<AlgebraElement>(b));
        case 2: return combine(std::get<Tensor2Element>(a), std::get<Tensor2Element>(b));
        case 3: return combine(std::get<Tensor3Element>(a), std::get<Tensor3Element>(b));
        case 4: return combine(std::get<AlgebraSeries>(a), std::get<AlgebraSeries>(b));
        case 5: return combine(std::get<Tensor2Series>(a), std::get<Tensor2Series>(b));
        default: return combine(std::get<Tensor3Series>(a), std::get<Tensor3Series>(b));
    }
}

Value scale_value(const Value& v, const Rational& r) {
    return std::visit([&](const auto& x) -> Value { return x * r; }, v);
}

Value mul_values(Value a, Value b, int order) {
    if (const auto* ra = std::get_if<Rational>(&a)) return scale_value(b, *ra);
    if (const auto* rb = std::get_if<Rational>(&b)) return scale_value(a, *rb);
    if (is_series_value(a) != is_series_value(b)) {
        a = to_series_value(std::move(a), order);
        b = to_series_value(std::move(b), order);
    }
    if (a.index() != b.index()) kind_error("multiply", a, b);
    switch (a.index()) {
        case 1: return std::get<AlgebraElement>(a) * std::get<AlgebraElement>(b);
        case 2: return std::get<Tensor2Element>(a) * std::get<Tensor2Element>(b);
        case 3: return std::get<Tensor3Element>(a) * std::get<Tensor3Element>(b);
        case 4: return std::get<AlgebraSeries>(a) * std::get<AlgebraSeries>(b);
        case 5: return std::get<Tensor2Series>(a) * std::get<Tensor2Series>(b);
        default: return std::get<Tensor3Series>(a) * std::get<Tensor3Series>(b);
    }
}

Tensor3Element join_1_2(const AlgebraElement& a, const Tensor2Element& b) {
    Tensor3Element out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out.add_term({ma, kb[0], kb[1]}, ca * cb);
    return out;
}

Tensor3Element join_2_1(const Tensor2Element& a, const AlgebraElement& b) {
    Tensor3Element out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add_term({ka[0], ka[1], mb}, ca * cb);
    return out;
}

Value tensor_values(Value a, Value b, int order) {
    if (const auto* r = std::get_if<Rational>(&a)) a = AlgebraElement::scalar(*r);
    if (const auto* r = std::get_if<Rational>(&b)) b = AlgebraElement::scalar(*r);
    int arity = kArity[a.index()] + kArity[b.index()];
    if (arity > 3)
        throw EvalError("cannot tensor " + value_kind(a) + " and " + value_kind(b) +
                        ": combined arity " + std::to_string(arity) + " exceeds 3");
    if (!is_series_value(a) && !is_series_value(b)) {
        if (arity == 2)
            return tensor2(std::get<AlgebraElement>(a), std::get<AlgebraElement>(b));
        if (std::holds_alternative<AlgebraElement>(a))
            return join_1_2(std::get<AlgebraElement>(a), std::get<Tensor2Element>(b));
        return join_2_1(std::get<Tensor2Element>(a), std::get<AlgebraElement>(b));
    }
    a = to_series_value(std::move(a), order);
    b = to_series_value(std::move(b), order);
    if (arity == 2) {
        const auto& sa = std::get<AlgebraSeries>(a);
        const auto& sb = std::get<AlgebraSeries>(b);
        Tensor2Series out(order);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j)
                out.coeff(i + j) += tensor2(sa.coeff(i), sb.coeff(j));
        return out;
    }
    Tensor3Series out(order);
    if (std::holds_alternative<AlgebraSeries>(a)) {
        const auto& sa = std::get<AlgebraSeries>(a);
        const auto& sb = std::get<Tensor2Series>(b);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j)
                out.coeff(i + j) += join_1_2(sa.coeff(i), sb.coeff(j));
    } else {
        const auto& sa = std::get<Tensor2Series>(a);
        const auto& sb = std::get<AlgebraSeries>(b);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j)
                out.coeff(i + j) += join_2_1(sa.coeff(i), sb.coeff(j));
    }
    return out;
}

template <typename S>
S series_pow(const S& base, std::int64_t e) {
    S out = S::unit(base.order());
    for (std::int64_t i = 0; i < e; ++i) out = out * base;
    return out;
}

Value pow_value(const Value& v, std::int64_t e) {
    struct Visitor {
        std::int64_t e;
        Value operator()(const Rational& r) const {
            Rational out(1);
            for (std::int64_t i = 0; i < e; ++i) out *= r;
            return out;
        }
        Value operator()(const AlgebraElement& x) const { return x.pow(e); }
        Value operator()(const Tensor2Element& x) const { return x.pow(e); }
        Value operator()(const Tensor3Element& x) const { return x.pow(e); }
        Value operator()(const AlgebraSeries& x) const { return series_pow(x, e); }
        Value operator()(const Tensor2Series& x) const { return series_pow(x, e); }
        Value operator()(const Tensor3Series& x) const { return series_pow(x, e); }
    };
    return std::visit(Visitor{e}, v);
}

Value apply_map(const TwistConfig& cfg, MapKind map, Value v) {
    if (const auto* r = std::get_if<Rational>(&v)) v = AlgebraElement::scalar(*r);
    const auto* el = std::get_if<AlgebraElement>(&v);
    const auto* s1 = std::get_if<AlgebraSeries>(&v);
    if (!el && !s1)
        throw EvalError(map_name(map) + " applies to algebra elements, got " + value_kind(v));
    switch (map) {
        case MapKind::delta0: {
            if (el) return delta0(*el);
            Tensor2Series out(s1->order());
            for (int k = 0; k <= s1->order(); ++k) out.coeff(k) = delta0(s1->coeff(k));
            return out;
        }
        case MapKind::s0: {
            if (el) return s0(*el);
            AlgebraSeries out(s1->order());
            for (int k = 0; k <= s1->order(); ++k) out.coeff(k) = s0(s1->coeff(k));
            return out;
        }
        case MapKind::eps: {
            if (el) return eps(*el);
            AlgebraSeries out(s1->order());
            for (int k = 0; k <= s1->order(); ++k)
                out.coeff(k) = AlgebraElement::scalar(eps(s1->coeff(k)));
            return out;
        }
        case MapKind::delta: {
            if (el) return twisted_delta(cfg, *el);
            TwistElements tw = build_twist(cfg, Rational(0));
            Tensor2Series out(s1->order());
            for (int k = 0; k <= s1->order(); ++k)
                out += twisted_delta(tw, s1->coeff(k)).shifted(k);
            return out;
        }
        case MapKind::antipode: {
            if (el) return twisted_antipode(cfg, *el);
            TwistElements tw = build_twist(cfg, Rational(0));
            AlgebraSeries out(s1->order());
            for (int k = 0; k <= s1->order(); ++k)
                out += twisted_antipode(tw, s1->coeff(k)).shifted(k);
            return out;
        }
    }
    throw EvalError("unhandled map");
}

Rational eval_scalar(const Expr& e, const TwistConfig& cfg, const std::string& what) {
    Value v = evaluate(e, cfg);
    const auto* r = std::get_if<Rational>(&v);
    if (!r) throw EvalError(what + " must be a rational scalar, got " + value_kind(v));
    return *r;
}

std::int64_t eval_integer(const Expr& e, const TwistConfig& cfg, const std::string& what) {
    Rational r = eval_scalar(e, cfg, what);
    auto i = r.as_integer();
    if (!i) throw EvalError(what + " must be an integer, got " + r.str());
    return *i;
}

}  // namespace

Value evaluate(const Expr& e, const TwistConfig& cfg) {
    struct Visitor {
        const TwistConfig& cfg;
        Value operator()(const NumberNode& n) const { return n.value; }
        Value operator()(const GenNode& g) const {
            std::int64_t n = eval_integer(*g.index, cfg, "generator index");
            return AlgebraElement::generator({g.kind, n});
        }
        Value operator()(const HbarNode&) const { return hbar(cfg); }
        Value operator()(const HbarFactNode& h) const {
            Rational b = eval_scalar(*h.base, cfg, "factorial base");
            std::int64_t k = eval_integer(*h.count, cfg, "factorial length");
            if (k < 0) throw EvalError("factorial length must be nonnegative");
            return h.rising ? hbar_rising(cfg, b, static_cast<int>(k))
                            : hbar_falling(cfg, b, static_cast<int>(k));
        }
        Value operator()(const TwistNode& t) const {
            Rational b = eval_scalar(*t.shift, cfg, "twist shift");
            TwistElements tw = build_twist(cfg, b);
            switch (t.which) {
                case TwistSeriesKind::c: return std::move(tw.C);
                case TwistSeriesKind::d: return std::move(tw.D);
                case TwistSeriesKind::u: return std::move(tw.U);
                default: return std::move(tw.V);
            }
        }
        Value operator()(const MapNode& m) const {
            return apply_map(cfg, m.map, evaluate(*m.arg, cfg));
        }
        Value operator()(const NegNode& n) const {
            return scale_value(evaluate(*n.arg, cfg), Rational(-1));
        }
        Value operator()(const BinNode& b) const {
            if (b.op == BinOp::pow) {
                std::int64_t e = eval_integer(*b.rhs, cfg, "exponent");
                if (e < 0) throw EvalError("exponent must be nonnegative, got " + std::to_string(e));
                return pow_value(evaluate(*b.lhs, cfg), e);
            }
            Value l = evaluate(*b.lhs, cfg);
            Value r = evaluate(*b.rhs, cfg);
            switch (b.op) {
                case BinOp::add: return add_values(std::move(l), std::move(r), cfg.order, false);
                case BinOp::sub: return add_values(std::move(l), std::move(r), cfg.order, true);
                case BinOp::mul: return mul_values(std::move(l), std::move(r), cfg.order);
                default: return tensor_values(std::move(l), std::move(r), cfg.order);
            }
        }
    };
    return std::visit(Visitor{cfg}, e.node);
}

// ----------------------------------------------------------- value output

namespace {

template <typename R>
std::string series_str(const TruncatedSeries<R>& s) {
    std::string out;
    for (int k = 0; k <= s.order(); ++k) {
        if (s.coeff(k).is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + s.coeff(k).str() + ")";
        if (k == 1) out += "*t";
        if (k > 1) out += "*t^" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    return out + " + O(t^" + std::to_string(s.order() + 1) + ")";
}

}  // namespace

std::string value_kind(const Value& v) {
    switch (v.index()) {
        case 0: return "scalar";
        case 1: return "element";
        case 2: return "tensor2";
        case 3: return "tensor3";
        case 4: return "element-series";
        case 5: return "tensor2-series";
        default: return "tensor3-series";
    }
}

std::string value_str(const Value& v) {
    struct Visitor {
        std::string operator()(const Rational& r) const { return r.str(); }
        std::string operator()(const AlgebraElement& x) const { return x.str(); }
        std::string operator()(const Tensor2Element& x) const { return x.str(); }
        std::string operator()(const Tensor3Element& x) const { return x.str(); }
        std::string operator()(const AlgebraSeries& x) const { return series_str(x); }
        std::string operator()(const Tensor2Series& x) const { return series_str(x); }
        std::string operator()(const Tensor3Series& x) const { return series_str(x); }
    };
    return std::visit(Visitor{}, v);
}

Json value_to_json(const Value& v) {
    Json payload = std::visit([](const auto& x) { return to_json(x); }, v);
    return Json{{"kind", value_kind(v)}, {"value", std::move(payload)}};
}

Value value_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("value"))
        throw std::invalid_argument("value: expected {\"kind\", \"value\"}");
    const std::string kind = j.at("kind").get<std::string>();
    const Json& v = j.at("value");
    if (kind == "scalar") return rational_from_json(v);
    if (kind == "element") return element_from_json(v);
    if (kind == "tensor2") return tensor2_from_json(v);
    if (kind == "tensor3") return tensor3_from_json(v);
    if (kind == "element-series") return algebra_series_from_json(v);
    if (kind == "tensor2-series") return tensor2_series_from_json(v);
    if (kind == "tensor3-series") return tensor3_series_from_json(v);
    throw std::invalid_argument("value: unknown kind '" + kind + "'");
}

// ------------------------------------------------------------------ LaTeX

namespace {

std::string rational_latex(const Rational& r) {
    if (r.is_integer()) return r.str();
    std::string s = r.str();
    std::string sign;
    if (s.front() == '-') {
        sign = "-";
        s.erase(0, 1);
    }
    std::size_t slash = s.find('/');
    return sign + "\\frac{" + s.substr(0, slash) + "}{" + s.substr(slash + 1) + "}";
}

std::string gen_latex(Generator g) {
    return std::string(1, kind_char(g.kind)) + "_{" + std::to_string(g.index) + "}";
}

std::string monomial_latex(const PBWMonomial& m) {
    if (m.is_unit()) return "1";
    std::string out;
    for (const auto& f : m.factors()) {
        out += gen_latex(f.gen);
        if (f.exp > 1) out += "^{" + std::to_string(f.exp) + "}";
    }
    return out;
}

// Shared sign-folded term joiner: renders |coeff| monomial with +/- between
// terms, eliding unit coefficients in front of non-unit bodies.
void append_term(std::string& out, const Rational& coeff, const std::string& body) {
    Rational a = coeff;
    if (out.empty()) {
        if (a.sign() < 0) {
            out += "-";
            a = -a;
        }
    } else {
        out += a.sign() < 0 ? " - " : " + ";
        if (a.sign() < 0) a = -a;
    }
    if (body == "1") {
        out += rational_latex(a);
        return;
    }
    if (!a.is_one()) out += rational_latex(a) + "\\,";
    out += body;
}

std::string element_latex(const AlgebraElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : x.terms()) append_term(out, c, monomial_latex(m));
    return out;
}

template <std::size_t A>
std::string tensor_latex(const TensorElement<A>& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [key, c] : x.terms()) {
        std::string body;
        bool all_unit = true;
        for (const auto& m : key) {
            if (!body.empty()) body += " \\otimes ";
            body += monomial_latex(m);
            all_unit = all_unit && m.is_unit();
        }
        append_term(out, c, all_unit ? "1" : body);
    }
    return out;
}

std::string coeff_body_latex(const AlgebraElement& x) { return element_latex(x); }
std::string coeff_body_latex(const Tensor2Element& x) { return tensor_latex(x); }
std::string coeff_body_latex(const Tensor3Element& x) { return tensor_latex(x); }

template <typename R>
std::string series_latex(const TruncatedSeries<R>& s) {
    std::string out;
    for (int k = 0; k <= s.order(); ++k) {
        if (s.coeff(k).is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string body = coeff_body_latex(s.coeff(k));
        if (k == 0) {
            out += body;
            continue;
        }
        out += "\\left(" + body + "\\right)t";
        if (k > 1) out += "^{" + std::to_string(k) + "}";
    }
    if (out.empty()) out = "0";
    return out + " + O\\left(t^{" + std::to_string(s.order() + 1) + "}\\right)";
}

// --- structural displays -------------------------------------------------

std::string tpow_latex(int k) {
    if (k == 0) return "";
    if (k == 1) return "t";
    return "t^{" + std::to_string(k) + "}";
}

std::string flank_latex(const TwistConfig& cfg, const Rational& exponent) {
    if (exponent.is_zero()) return "1";
    std::string out = "(1-" + gen_latex(cfg.x()) + "t)";
    if (!exponent.is_one()) out += "^{" + rational_latex(exponent) + "}";
    return out;
}

std::string hbar_sub_latex(const Rational& b) {
    return b.is_zero() ? std::string() : "_{" + rational_latex(b) + "}";
}

// "n + k*n0" as a subscript in k, with the constant folded in.
std::string shifted_index_latex(std::int64_t n, std::int64_t n0) {
    std::string out;
    if (n != 0) out += std::to_string(n);
    std::int64_t a = n0 < 0 ? -n0 : n0;
    out += n0 < 0 ? "-" : (n != 0 ? "+" : "");
    if (a != 1) out += std::to_string(a);
    out += "k";
    return out;
}

// First k with a vanished bracket chain, or kmax+1 if alive throughout.
int chain_end(const TwistCoefficients& co) {
    for (std::size_t k = 0; k < co.target.size(); ++k)
        if (!co.target[k]) return static_cast<int>(k);
    return static_cast<int>(co.target.size());
}

std::string delta_closed_latex(const TwistConfig& cfg, Generator g) {
    const Rational nn = cfg.eigenvalue(g.index);
    const int kmax = cfg.order + 2;
    TwistCoefficients co = bk_coefficients(cfg, g, kmax);
    const int end = chain_end(co);

    std::string out = gen_latex(g) + " \\otimes " + flank_latex(cfg, nn);
    out += " + 1 \\otimes " + gen_latex(g);
    if (end > kmax) {
        // Chain still alive at the display horizon: fall back to the sum form.
        return out + " + \\sum_{k\\ge 1} (-1)^{k} b_{k}\\, \\hbar^{\\langle k\\rangle} \\otimes (1-" +
               gen_latex(cfg.x()) + "t)^{-k}\\," + std::string(1, kind_char(g.kind)) + "_{" +
               shifted_index_latex(g.index, cfg.n0) + "} t^{k}";
    }
    for (int k = 1; k < end; ++k) {
        Rational c = co.b[static_cast<std::size_t>(k)];
        if (k % 2 == 1) c = -c;
        std::string body = "\\hbar^{\\langle " + std::to_string(k) + "\\rangle} \\otimes " +
                           flank_latex(cfg, Rational(-k)) + "\\," +
                           gen_latex(*co.target[static_cast<std::size_t>(k)]) + "\\," +
                           tpow_latex(k);
        append_term(out, c, body);
    }
    return out;
}

std::string antipode_closed_latex(const TwistConfig& cfg, Generator g) {
    const Rational nn = cfg.eigenvalue(g.index);
    const int kmax = cfg.order + 2;
    TwistCoefficients co = bk_coefficients(cfg, g, kmax);
    const int end = chain_end(co);

    std::string flank = nn.is_zero() ? "-" : "-" + flank_latex(cfg, -nn);
    if (end > kmax) {
        return flank + "\\left(\\sum_{k\\ge 0} b_{k}\\," + std::string(1, kind_char(g.kind)) +
               "_{" + shifted_index_latex(g.index, cfg.n0) + "}\\,\\hbar_{k}^{[k]}\\, t^{k}\\right)";
    }
    std::string sum;
    for (int k = 0; k < end; ++k) {
        std::string body = gen_latex(*co.target[static_cast<std::size_t>(k)]);
        if (k >= 1)
            body += "\\,\\hbar_{" + std::to_string(k) + "}^{[" + std::to_string(k) + "]}\\," +
                    tpow_latex(k);
        append_term(sum, co.b[static_cast<std::size_t>(k)], body);
    }
    if (end <= 1) return flank + sum;  // single term, no parentheses needed
    return flank + "\\left(" + sum + "\\right)";
}

std::string twist_series_latex(const TwistConfig& cfg, TwistSeriesKind which, const Rational& b) {
    const std::string x = gen_latex(cfg.x());
    const std::string xk = x + "^{k}t^{k}";
    switch (which) {
        case TwistSeriesKind::c:
            return "\\sum_{k\\ge 0} \\frac{1}{k!}\\, \\hbar" + hbar_sub_latex(b) +
                   "^{\\langle k\\rangle} \\otimes " + xk;
        case TwistSeriesKind::d:
            return "\\sum_{k\\ge 0} \\frac{(-1)^{k}}{k!}\\, \\hbar" + hbar_sub_latex(b) +
                   "^{[k]} \\otimes " + xk;
        case TwistSeriesKind::u:
            return "\\sum_{k\\ge 0} \\frac{(-1)^{k}}{k!}\\, \\hbar" + hbar_sub_latex(-b) +
                   "^{[k]}\\," + xk;
        default:
            return "\\sum_{k\\ge 0} \\frac{1}{k!}\\, \\hbar" + hbar_sub_latex(b) + "^{[k]}\\," + xk;
    }
}

}  // namespace

std::string value_latex(const Value& v) {
    struct Visitor {
        std::string operator()(const Rational& r) const { return rational_latex(r); }
        std::string operator()(const AlgebraElement& x) const { return element_latex(x); }
        std::string operator()(const Tensor2Element& x) const { return tensor_latex(x); }
        std::string operator()(const Tensor3Element& x) const { return tensor_latex(x); }
        std::string operator()(const AlgebraSeries& x) const { return series_latex(x); }
        std::string operator()(const Tensor2Series& x) const { return series_latex(x); }
        std::string operator()(const Tensor3Series& x) const { return series_latex(x); }
    };
    return std::visit(Visitor{}, v);
}

std::string latex_expr(const Expr& e, const TwistConfig& cfg) {
    if (const auto* m = std::get_if<MapNode>(&e.node);
        m && (m->map == MapKind::delta || m->map == MapKind::antipode)) {
        if (const auto* g = std::get_if<GenNode>(&m->arg->node)) {
            Generator gen{g->kind, eval_integer(*g->index, cfg, "generator index")};
            return m->map == MapKind::delta ? delta_closed_latex(cfg, gen)
                                            : antipode_closed_latex(cfg, gen);
        }
    }
    if (const auto* t = std::get_if<TwistNode>(&e.node)) {
        Rational b = eval_scalar(*t->shift, cfg, "twist shift");
        return twist_series_latex(cfg, t->which, b);
    }
    return value_latex(evaluate(e, cfg));
}

}  // namespace w22
