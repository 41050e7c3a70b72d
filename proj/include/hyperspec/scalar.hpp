#pragma once

#include <complex>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace hyperspec {

using Rational = mpq_class;

/// Exact complex number with rational real and imaginary parts.
struct GaussRational {
    Rational re{0};
    Rational im{0};

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

GaussRational operator+(const GaussRational& a, const GaussRational& b);
GaussRational operator-(const GaussRational& a, const GaussRational& b);
GaussRational operator-(const GaussRational& a);
GaussRational operator*(const GaussRational& a, const GaussRational& b);
GaussRational operator/(const GaussRational& a, const GaussRational& b);

/// Tensor entry value. Integer and rational input stays exact; anything
/// touched by a floating operand degrades to std::complex<double>.
class Scalar {
public:
    Scalar() : value_(GaussRational{}) {}
    Scalar(long v) : value_(GaussRational{Rational(v), Rational(0)}) {}
    Scalar(int v) : Scalar(static_cast<long>(v)) {}
    Scalar(const Rational& re, const Rational& im = Rational(0)) : value_(GaussRational{re, im}) {}
    Scalar(GaussRational g) : value_(std::move(g)) {}
    Scalar(std::complex<double> c) : value_(c) {}
    Scalar(double d) : value_(std::complex<double>(d, 0.0)) {}

    bool is_exact() const { return std::holds_alternative<GaussRational>(value_); }
    bool is_zero() const;
    bool is_real() const;
    /// Real part sign; meaningful only when is_real().
    int real_sign() const;

    std::complex<double> to_complex() const;
    /// Throws NotExactError for floating values.
    const GaussRational& exact() const;

    std::string to_string() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    /// Exact comparison when both sides are exact; otherwise compares the
    /// double values bit for bit.
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    std::variant<GaussRational, std::complex<double>> value_;
};

/// Parses "p/q" or an integer literal.
Rational parse_rational(const std::string& text);

}  // namespace hyperspec
