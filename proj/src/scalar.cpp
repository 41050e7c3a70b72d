#include "hyperspec/scalar.hpp"

#include "hyperspec/errors.hpp"

namespace hyperspec {

GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
}

GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
}

GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }

GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    if (b.is_zero()) throw PreconditionError("division by exact zero");
    const Rational norm = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

bool Scalar::is_zero() const {
    if (auto* g = std::get_if<GaussRational>(&value_)) return g->is_zero();
    return std::get<std::complex<double>>(value_) == std::complex<double>(0.0, 0.0);
}

bool Scalar::is_real() const {
    if (auto* g = std::get_if<GaussRational>(&value_)) return g->is_real();
    return std::get<std::complex<double>>(value_).imag() == 0.0;
}

int Scalar::real_sign() const {
    if (auto* g = std::get_if<GaussRational>(&value_)) return sgn(g->re);
    const double re = std::get<std::complex<double>>(value_).real();
    return (re > 0.0) - (re < 0.0);
}

std::complex<double> Scalar::to_complex() const {
    if (auto* g = std::get_if<GaussRational>(&value_)) return {g->re.get_d(), g->im.get_d()};
    return std::get<std::complex<double>>(value_);
}

const GaussRational& Scalar::exact() const {
    if (auto* g = std::get_if<GaussRational>(&value_)) return *g;
    throw NotExactError("floating-point value where an exact rational is required");
}

std::string Scalar::to_string() const {
    if (auto* g = std::get_if<GaussRational>(&value_)) {
        if (g->is_real()) return g->re.get_str();
        return "(" + g->re.get_str() + ", " + g->im.get_str() + ")";
    }
    const auto c = std::get<std::complex<double>>(value_);
    return "(" + std::to_string(c.real()) + ", " + std::to_string(c.imag()) + ")";
}

namespace {

template <typename ExactOp, typename FloatOp>
Scalar combine(const Scalar& a, const Scalar& b, ExactOp exact_op, FloatOp float_op) {
    if (a.is_exact() && b.is_exact()) return Scalar(exact_op(a.exact(), b.exact()));
    return Scalar(float_op(a.to_complex(), b.to_complex()));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    return combine(a, b, std::plus<>{}, std::plus<>{});
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return combine(a, b, std::minus<>{}, std::minus<>{});
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return combine(a, b, std::multiplies<>{}, std::multiplies<>{});
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw PreconditionError("division by zero");
    return combine(a, b, std::divides<>{}, std::divides<>{});
}

Scalar operator-(const Scalar& a) {
    if (a.is_exact()) return Scalar(-a.exact());
    return Scalar(-a.to_complex());
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
    return a.to_complex() == b.to_complex();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    Rational q;
    if (q.set_str(text, 10) != 0) throw ParseError("invalid rational literal '" + text + "'");
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace hyperspec
