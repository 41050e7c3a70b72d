#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hyperspec/scalar.hpp"

namespace hyperspec {

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// The coefficient vector never ends in a zero; the zero polynomial is empty
/// and has degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> ascending);
    UniPoly(std::initializer_list<long> ascending);

    static UniPoly constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }
    /// The monomial x.
    static UniPoly x() { return UniPoly({0, 1}); }
    /// x - root.
    static UniPoly linear(const Rational& root) { return UniPoly(std::vector<Rational>{-root, Rational(1)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of x^i (zero past the degree).
    Rational coeff(int i) const;
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& at) const;
    std::complex<double> operator()(std::complex<double> at) const;

    UniPoly derivative() const;
    UniPoly monic() const;
    /// p(-x).
    UniPoly reflected() const;
    UniPoly pow(unsigned e) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// "x^2 - 2" style rendering, descending.
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a by a nonzero b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// a / b, throwing if b does not divide a.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Number of times x divides p (p nonzero).
int zero_root_multiplicity(const UniPoly& p);

/// Largest k with f^k | p, for non-constant f and nonzero p.
int multiplicity_of_factor(const UniPoly& p, const UniPoly& f);

/// p / gcd(p, p'), monic.
UniPoly squarefree_part(const UniPoly& p);

/// Yun's algorithm: monic squarefree, pairwise coprime factors s_i with
/// p = lc(p) * prod s_i^i. Only non-constant factors are listed.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Polynomial of degree < nodes.size() through (nodes[i], values[i]);
/// Newton divided differences. Nodes must be distinct.
UniPoly interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

}  // namespace hyperspec
