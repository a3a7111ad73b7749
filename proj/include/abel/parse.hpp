#pragma once

#include <cctype>
#include <string>

#include "abel/ring.hpp"

namespace abel {

// Recursive-descent parser for the coefficient expression grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := rational | 'i' | 't' | ('cos'|'sin') '(' [uint ['*']] 't' ')' | '(' expr ')'
//   rational := uint ('/' uint)?
// Builders decide which atoms are admissible in their ring; 't' outside a
// trig argument is rejected in the trig ring and 'i'/'cos'/'sin' are
// rejected where they do not belong (ring-mismatch).
template <class Builder>
class ExprParser {
  public:
    using Value = typename Builder::Value;

    explicit ExprParser(const std::string& text) : text_(text) {}

    Value parse() {
        Value v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

  private:
    Value expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (take() == '-');
        Value acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            Value rhs = term();
            acc = (c == '+') ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Value term() {
        Value acc = factor();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            take();
            acc = acc * factor();
        }
        return acc;
    }

    // degrees stay at desk scale; a cap keeps hostile inputs from
    // allocating monster polynomials
    static constexpr unsigned kMaxExponent = 512;

    Value factor() {
        Value base = this->base();
        skip_ws();
        if (peek() == '^') {
            take();
            unsigned e = parse_uint("exponent");
            if (e > kMaxExponent) fail("exponent too large");
            long long total = static_cast<long long>(std::max(base.degree(), 0)) * e;
            if (total > 4096) fail("expression degree too large");
            base = base.pow_u(e);
        }
        return base;
    }

    Value base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            Value v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_lit();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word = take_word();
            if (word == "t") return Builder::variable(pos_);
            if (word == "i") return Builder::imaginary_unit(pos_);
            if (word == "cos" || word == "sin") return trig_call(word == "sin");
            fail("unknown symbol '" + word + "'");
        }
        fail("expected a value");
        return Value{};  // unreachable
    }

    Value rational_lit() {
        Integer num = parse_integer("numerator");
        Integer den(1);
        skip_ws();
        if (peek() == '/') {
            take();
            den = parse_integer("denominator");
            if (sgn(den) == 0) fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return Builder::from_rational(std::move(q));
    }

    Value trig_call(bool is_sin) {
        expect('(');
        skip_ws();
        unsigned n = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            n = parse_uint("harmonic index");
            if (n > kMaxExponent) fail("harmonic index too large");
            skip_ws();
            if (peek() == '*') take();
        }
        skip_ws();
        if (take_word() != "t") fail("expected 't' inside cos/sin");
        expect(')');
        return Builder::harmonic(static_cast<int>(n), is_sin, pos_);
    }

    unsigned parse_uint(const std::string& what) {
        Integer v = parse_integer(what);
        if (sgn(v) < 0 || !v.fits_uint_p()) fail("invalid " + what);
        return static_cast<unsigned>(v.get_ui());
    }

    Integer parse_integer(const std::string& what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected " + what);
        // base 10 explicitly: the auto-detecting constructor reads a leading
        // zero as octal and rejects digits 8 and 9
        return Integer(text_.substr(start, pos_ - start), 10);
    }

    std::string take_word() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        take();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    const std::string& text_;
    std::size_t pos_ = 0;
};

namespace detail {

template <class S>
struct PolyBuilder {
    using Value = Polynomial<S>;
    static Value from_rational(Rational q) { return Value(S{std::move(q)}); }
    static Value variable(std::size_t) { return Value::monomial(scalar_one<S>(), 1); }
    static Value imaginary_unit(std::size_t pos) {
        if constexpr (std::is_same_v<S, GaussianRational>) {
            return Value(S{Rational(0), Rational(1)});
        } else {
            throw ParseError("ring-mismatch: 'i' needs the poly-gaussian ring", pos);
        }
    }
    static Value harmonic(int, bool, std::size_t pos) {
        throw ParseError("ring-mismatch: cos/sin need the trig ring", pos);
    }
};

struct TrigBuilder {
    using Value = TrigQ;
    static Value from_rational(Rational q) { return Value::constant(std::move(q)); }
    static Value variable(std::size_t pos) {
        throw ParseError("ring-mismatch: bare 't' is not a trig polynomial", pos);
    }
    static Value imaginary_unit(std::size_t pos) {
        throw ParseError("ring-mismatch: 'i' is not a real trig scalar", pos);
    }
    static Value harmonic(int n, bool is_sin, std::size_t) {
        return is_sin ? Value::sin_term(n, Rational(1)) : Value::cos_term(n, Rational(1));
    }
};

}  // namespace detail

inline PolyQ parse_poly_rational(const std::string& text) {
    return ExprParser<detail::PolyBuilder<Rational>>(text).parse();
}
inline PolyQi parse_poly_gaussian(const std::string& text) {
    return ExprParser<detail::PolyBuilder<GaussianRational>>(text).parse();
}
inline TrigQ parse_trig(const std::string& text) {
    return ExprParser<detail::TrigBuilder>(text).parse();
}

template <class R>
R parse_ring_element(const std::string& text) {
    if constexpr (std::is_same_v<R, PolyQ>) return parse_poly_rational(text);
    if constexpr (std::is_same_v<R, PolyQi>) return parse_poly_gaussian(text);
    if constexpr (std::is_same_v<R, TrigQ>) return parse_trig(text);
}

// ---------------------------------------------------------------------------
// Rendering. The output re-parses to the same value in the same ring.
// ---------------------------------------------------------------------------

namespace detail {

// true if the scalar prints as a single token (no sign, no inner '+'/'-')
inline bool simple_scalar(const Rational& q) { return sgn(q) > 0; }
inline bool simple_scalar(const GaussianRational& g) {
    if (is_zero(g.im)) return sgn(g.re) > 0;
    if (is_zero(g.re)) return sgn(g.im) > 0;
    return false;
}
template <class S>
bool simple_scalar(const Quad<S>& q) {
    if (q.d == 0) return simple_scalar(q.a);
    return false;
}

inline bool scalar_is_negative_simple(const Rational& q) { return sgn(q) < 0; }
inline bool scalar_is_negative_simple(const GaussianRational& g) {
    if (is_zero(g.im)) return sgn(g.re) < 0;
    if (is_zero(g.re)) return sgn(g.im) < 0;
    return false;
}
template <class S>
bool scalar_is_negative_simple(const Quad<S>& q) {
    return q.d == 0 && scalar_is_negative_simple(q.a);
}

inline Rational negate_scalar(const Rational& q) { return -q; }
inline GaussianRational negate_scalar(const GaussianRational& g) { return -g; }
template <class S>
Quad<S> negate_scalar(const Quad<S>& q) {
    return -q;
}

// One additive term "coeff*carrier"; carrier may be empty (constant term).
template <class S>
void append_term(std::string& out, const S& coeff, const std::string& carrier) {
    bool first = out.empty();
    S c = coeff;
    std::string sign = first ? "" : "+";
    if (scalar_is_negative_simple(c)) {
        sign = "-";
        c = negate_scalar(c);
    }
    std::string cs = str(c);
    std::string body;
    if (carrier.empty()) {
        body = simple_scalar(c) ? cs : "(" + cs + ")";
    } else if (is_one(c)) {
        body = carrier;
    } else {
        body = (simple_scalar(c) ? cs : "(" + cs + ")") + "*" + carrier;
    }
    out += sign + body;
}

}  // namespace detail

template <class S>
std::string render(const Polynomial<S>& p) {
    if (p.is_zero_poly()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        S c = p.coeff(i);
        if (is_zero(c)) continue;
        std::string carrier = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
        detail::append_term(out, c, carrier);
    }
    return out;
}

template <class S>
std::string render(const TrigPoly<S>& p) {
    if (p.is_zero_elem()) return "0";
    std::string out;
    if (!is_zero(p.constant_term())) detail::append_term(out, p.constant_term(), "");
    for (int n = 1; n <= p.degree(); ++n) {
        auto [a, b] = p.harmonic(n);
        std::string arg = n == 1 ? "t" : std::to_string(n) + "*t";
        if (!is_zero(a)) detail::append_term(out, a, "cos(" + arg + ")");
        if (!is_zero(b)) detail::append_term(out, b, "sin(" + arg + ")");
    }
    return out;
}

}  // namespace abel
