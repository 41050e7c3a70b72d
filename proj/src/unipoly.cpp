#include "hyperspec/unipoly.hpp"

#include <sstream>

#include "hyperspec/errors.hpp"

namespace hyperspec {

UniPoly::UniPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> ascending) {
    for (long c : ascending) coeffs_.emplace_back(c);
    trim();
}

void UniPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational UniPoly::operator()(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

std::complex<double> UniPoly::operator()(std::complex<double> at) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->get_d();
    return acc;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> c = coeffs_;
    const Rational lead = coeffs_.back();
    for (auto& v : c) v /= lead;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::reflected() const {
    std::vector<Rational> c = coeffs_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly out = constant(1);
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1U) out = out * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
    std::vector<Rational> c = p.coeffs_;
    for (auto& v : c) v *= s;
    return UniPoly(std::move(c));
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly{}, a};
    std::vector<Rational> rem = a.coefficients();
    const auto& den = b.coefficients();
    std::vector<Rational> quot(rem.size() - den.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational q = rem[k + den.size() - 1] / den.back();
        quot[k] = q;
        if (sgn(q) == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= q * den[j];
    }
    rem.resize(den.size() - 1);
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw PreconditionError("polynomial division leaves a remainder");
    return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

int zero_root_multiplicity(const UniPoly& p) {
    if (p.is_zero()) throw PreconditionError("multiplicity in the zero polynomial");
    int k = 0;
    while (sgn(p.coefficients()[static_cast<std::size_t>(k)]) == 0) ++k;
    return k;
}

int multiplicity_of_factor(const UniPoly& p, const UniPoly& f) {
    if (p.is_zero() || f.degree() < 1) throw PreconditionError("factor multiplicity needs p != 0 and deg f >= 1");
    int k = 0;
    UniPoly rest = p;
    while (true) {
        auto [q, r] = divmod(rest, f);
        if (!r.is_zero()) return k;
        rest = std::move(q);
        ++k;
    }
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() < 1) return p.monic();
    return exact_quotient(p, gcd(p, p.derivative())).monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() < 1) return out;
    const UniPoly f = p.monic();
    const UniPoly fp = f.derivative();
    const UniPoly a0 = gcd(f, fp);
    UniPoly b = exact_quotient(f, a0);
    UniPoly c = exact_quotient(fp, a0);
    UniPoly d = c - b.derivative();
    for (int i = 1; b.degree() >= 1; ++i) {
        UniPoly a = gcd(b, d);
        if (a.degree() >= 1) out.emplace_back(a, i);
        b = exact_quotient(b, a);
        c = exact_quotient(d, a);
        d = c - b.derivative();
    }
    return out;
}

UniPoly interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
    if (nodes.size() != values.size()) throw DimensionError("node and value counts differ");
    const std::size_t m = nodes.size();
    std::vector<Rational> dd = values;
    for (std::size_t level = 1; level < m; ++level) {
        for (std::size_t i = m - 1; i >= level; --i) {
            const Rational span = nodes[i] - nodes[i - level];
            if (sgn(span) == 0) throw PreconditionError("repeated interpolation node");
            dd[i] = (dd[i] - dd[i - 1]) / span;
        }
    }
    // Horner on the Newton form: p = dd0 + (x - t0)(dd1 + (x - t1)(...)).
    UniPoly p;
    for (std::size_t i = m; i-- > 0;) p = UniPoly::linear(nodes[i]) * p + UniPoly::constant(dd[i]);
    return p;
}

}  // namespace hyperspec
