#include "hyperspec/charpoly.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "hyperspec/errors.hpp"
#include "hyperspec/resultant.hpp"
#include "hyperspec/structure.hpp"

namespace hyperspec {

namespace {

// Parlett-Reinsch balancing: diagonal similarity by powers of two until row
// and column norms are comparable. Companion matrices of polynomials with
// large coefficients are badly scaled without it.
void balance(Eigen::MatrixXd& m) {
    const Eigen::Index n = m.rows();
    bool changed = true;
    while (changed) {
        changed = false;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(m(j, i));
                r += std::abs(m(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double f = 1.0;
            const double s = c + r;
            while (c < r / 2.0) {
                c *= 2.0;
                r /= 2.0;
                f *= 2.0;
            }
            while (c >= r * 2.0) {
                c /= 2.0;
                r *= 2.0;
                f /= 2.0;
            }
            if ((c + r) < 0.95 * s) {
                changed = true;
                m.row(i) /= f;
                m.col(i) *= f;
            }
        }
    }
}

long long_pow(long b, int e) {
    long out = 1;
    for (int i = 0; i < e; ++i) out *= b;
    return out;
}

}  // namespace

UniPoly charpoly_2matrix(const CubicalTensor& a) {
    if (a.arity() != 2) throw DimensionError("charpoly_2matrix needs r = 2");
    if (!a.is_exact()) throw NotExactError("charpoly_2matrix needs exact entries; rationalize floating input first");
    if (!a.is_real()) throw NotExactError("charpoly_2matrix needs real rational entries");
    const auto n = static_cast<std::size_t>(a.order());
    RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t e = 0; e < a.size(); ++e) m[a.index(e)[0]][a.index(e)[1]] = a.value(e).exact().re;

    // Descending coefficients of the trailing principal block's polynomial.
    std::vector<Rational> p{Rational(1), -m[n - 1][n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        const std::size_t size = n - 1 - i;
        std::vector<Rational> t(size + 2);
        t[0] = 1;
        t[1] = -m[i][i];
        std::vector<Rational> v(size);
        for (std::size_t j = 0; j < size; ++j) v[j] = m[i + 1 + j][i];
        for (std::size_t k = 2; k < size + 2; ++k) {
            Rational dot(0);
            for (std::size_t j = 0; j < size; ++j) dot += m[i][i + 1 + j] * v[j];
            t[k] = -dot;
            std::vector<Rational> w(size, Rational(0));
            for (std::size_t r = 0; r < size; ++r)
                for (std::size_t c = 0; c < size; ++c) w[r] += m[i + 1 + r][i + 1 + c] * v[c];
            v = std::move(w);
        }
        std::vector<Rational> next(size + 2, Rational(0));
        for (std::size_t row = 0; row < size + 2; ++row)
            for (std::size_t c = 0; c <= std::min(row, size); ++c) next[row] += t[row - c] * p[c];
        p = std::move(next);
    }
    std::reverse(p.begin(), p.end());
    return UniPoly(std::move(p));
}

UniPoly charpoly_tensor(const CubicalTensor& a) {
    return resultant_polynomial(resultant_system(a), evaluate_nodes);
}

UniPoly characteristic_polynomial(const CubicalTensor& a) {
    return a.arity() == 2 ? charpoly_2matrix(a) : charpoly_tensor(a);
}

bool is_spectrum_symmetric_poly(const UniPoly& p) {
    const int d = p.degree();
    for (int i = 0; i <= d; ++i)
        if ((d - i) % 2 == 1 && sgn(p.coeff(i)) != 0) return false;
    return true;
}

std::vector<std::complex<double>> numeric_roots(const UniPoly& p) {
    if (p.is_zero()) throw PreconditionError("roots of the zero polynomial");
    const UniPoly s = squarefree_part(p);
    const int d = s.degree();
    if (d < 1) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -s.coeff(i).get_d();
    balance(companion);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    const UniPoly ds = s.derivative();
    std::vector<std::complex<double>> roots;
    for (int i = 0; i < d; ++i) {
        std::complex<double> z = solver.eigenvalues()[i];
        for (int step = 0; step < 3; ++step) {
            const std::complex<double> slope = ds(z);
            if (std::abs(slope) == 0.0) break;
            z -= s(z) / slope;
        }
        roots.push_back(z);
    }
    return roots;
}

double max_root_modulus(const UniPoly& p) {
    double best = 0.0;
    for (const auto& z : numeric_roots(p)) best = std::max(best, std::abs(z));
    return best;
}

ProductReport verify_component_product(const CubicalTensor& a) {
    if (!is_symmetric(a)) throw NotSymmetricError("component product formula needs a symmetric tensor");
    if (is_weakly_irreducible(a))
        throw PreconditionError("tensor is weakly irreducible; the product has a single factor");
    if (a.arity() > 2 && a.order() > 3)
        throw OutOfContractError("component product check is limited to n <= 3 for r > 2");
    ProductReport report;
    report.direct = characteristic_polynomial(a);
    report.product = UniPoly::constant(1);
    const auto decomposition = components(a);
    for (const auto& part : decomposition.parts) {
        ComponentFactor f;
        f.vertices = part.vertices;
        f.charpoly = characteristic_polynomial(part.block);
        f.exponent = long_pow(a.arity() - 1, a.order() - static_cast<int>(part.vertices.size()));
        report.product = report.product * f.charpoly.pow(static_cast<unsigned>(f.exponent));
        report.factors.push_back(std::move(f));
    }
    report.equal = report.direct == report.product;
    return report;
}

IsolatedVertexReport isolated_vertex_multiplicity_check(const CubicalTensor& a) {
    if (a.order() > 2)
        throw OutOfContractError("adding a vertex to order " + std::to_string(a.order()) +
                                 " leaves the n <= 3 characteristic polynomial contract");
    if (a.arity() < 2 || a.arity() > 5) throw OutOfContractError("isolated-vertex check needs 2 <= r <= 5");
    if (!is_symmetric(a)) throw NotSymmetricError("isolated-vertex check needs a symmetric tensor");
    const int r = a.arity();
    const int n = a.order();
    const CubicalTensor extended(r, n + 1, a.entries());

    IsolatedVertexReport report;
    report.arity = r;
    report.order = n;
    report.before = characteristic_polynomial(a);
    report.after = characteristic_polynomial(extended);
    report.zero_before = zero_root_multiplicity(report.before);
    report.zero_after = zero_root_multiplicity(report.after);
    const long shift = long_pow(r - 1, n);
    report.zero_product_rule = report.zero_before * static_cast<long>(r - 1) + shift;
    report.zero_power_rule = long_pow(report.zero_before, r - 1) + shift;
    report.matches_product_rule = report.zero_after == report.zero_product_rule;
    report.matches_power_rule = report.zero_after == report.zero_power_rule;

    const UniPoly nonzero_part = exact_quotient(report.before, UniPoly::x().pow(static_cast<unsigned>(report.zero_before)));
    for (auto& [factor, mult] : squarefree_decomposition(nonzero_part)) {
        RootMultiplicity row;
        row.before = mult;
        row.after = multiplicity_of_factor(report.after, factor);
        row.factor = std::move(factor);
        row.product_rule = static_cast<long>(mult) * (r - 1);
        row.power_rule = long_pow(mult, r - 1);
        report.matches_product_rule = report.matches_product_rule && row.after == row.product_rule;
        report.matches_power_rule = report.matches_power_rule && row.after == row.power_rule;
        report.roots.push_back(std::move(row));
    }
    return report;
}

IsolatedVertexReport isolated_vertex_multiplicity_check(const Hypergraph& g) {
    return isolated_vertex_multiplicity_check(adjacency_tensor(g));
}

}  // namespace hyperspec
