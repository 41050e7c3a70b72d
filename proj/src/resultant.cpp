#include "hyperspec/resultant.hpp"

#include <array>
#include <map>

#include "hyperspec/errors.hpp"

namespace hyperspec {

namespace {

using Monomial = std::array<int, 3>;

// G_k = lambda x_k^m - F_k as (monomial -> coefficient) maps, split into the
// constant part and the lambda part.
struct Forms {
    std::vector<std::map<Monomial, Rational>> constant;
    std::vector<Monomial> lambda_monomial;
};

Forms eigen_forms(const CubicalTensor& a) {
    const int n = a.order();
    const int m = a.arity() - 1;
    Forms f;
    f.constant.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Monomial mono{0, 0, 0};
        mono[static_cast<std::size_t>(k)] = m;
        f.lambda_monomial.push_back(mono);
    }
    for (std::size_t e = 0; e < a.size(); ++e) {
        auto idx = a.index(e);
        Monomial mono{0, 0, 0};
        for (std::size_t j = 1; j < idx.size(); ++j) ++mono[idx[j]];
        f.constant[idx[0]][mono] -= a.value(e).exact().re;
    }
    return f;
}

RationalMatrix zeros(std::size_t size) {
    return RationalMatrix(size, std::vector<Rational>(size, Rational(0)));
}

void check_contract(const CubicalTensor& a) {
    if (a.order() > 3)
        throw OutOfContractError("characteristic polynomials are limited to order n <= 3, got n = " +
                                 std::to_string(a.order()));
    if (a.arity() < 2 || a.arity() > 5)
        throw OutOfContractError("characteristic polynomials are limited to 2 <= r <= 5, got r = " +
                                 std::to_string(a.arity()));
    if (!a.is_exact()) throw NotExactError("characteristic polynomial needs exact entries");
    if (!a.is_real()) throw NotExactError("characteristic polynomial needs real rational entries");
}

int int_pow(int b, int e) {
    int out = 1;
    for (int i = 0; i < e; ++i) out *= b;
    return out;
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    std::vector<std::vector<mpz_class>> z(n, std::vector<mpz_class>(n));
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw DimensionError("determinant of a non-square matrix");
        mpz_class l = 1;
        for (const auto& v : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) z[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
        scale *= l;
    }
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(z[p][k]) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            std::swap(z[p], z[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = z[i][j] * z[k][k] - z[i][k] * z[k][j];
                mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][k] = 0;
        }
        prev = z[k][k];
    }
    Rational det(sign * z[n - 1][n - 1], scale);
    det.canonicalize();
    return det;
}

ResultantSystem resultant_system(const CubicalTensor& a) {
    check_contract(a);
    const int n = a.order();
    const int m = a.arity() - 1;
    const Forms f = eigen_forms(a);
    ResultantSystem sys;
    sys.arity = a.arity();
    sys.order = n;
    sys.degree = n * int_pow(m, n - 1);

    if (n == 1) {
        sys.base = {{f.constant[0].count({m, 0, 0}) ? f.constant[0].at({m, 0, 0}) : Rational(0)}};
        sys.slope = {{Rational(1)}};
        return sys;
    }

    if (n == 2) {
        // Column c is the monomial x1^{2m-1-c} x2^c.
        const auto size = static_cast<std::size_t>(2 * m);
        sys.base = zeros(size);
        sys.slope = zeros(size);
        for (int k = 0; k < 2; ++k) {
            for (int shift = 0; shift < m; ++shift) {
                const auto row = static_cast<std::size_t>(k * m + shift);
                for (const auto& [mono, c] : f.constant[static_cast<std::size_t>(k)])
                    sys.base[row][static_cast<std::size_t>(shift + mono[1])] += c;
                sys.slope[row][static_cast<std::size_t>(shift + f.lambda_monomial[static_cast<std::size_t>(k)][1])] += 1;
            }
        }
        return sys;
    }

    const int degree = 3 * m - 2;
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> column;
    for (int e0 = degree; e0 >= 0; --e0)
        for (int e1 = degree - e0; e1 >= 0; --e1) {
            Monomial mono{e0, e1, degree - e0 - e1};
            column[mono] = monomials.size();
            monomials.push_back(mono);
        }
    sys.base = zeros(monomials.size());
    sys.slope = zeros(monomials.size());
    for (std::size_t row = 0; row < monomials.size(); ++row) {
        const Monomial& alpha = monomials[row];
        int owner = -1;
        int divisible = 0;
        for (int i = 0; i < 3; ++i) {
            if (alpha[static_cast<std::size_t>(i)] >= m) {
                if (owner < 0) owner = i;
                ++divisible;
            }
        }
        if (divisible >= 2) sys.minor.push_back(row);
        Monomial mult = alpha;
        mult[static_cast<std::size_t>(owner)] -= m;
        auto shifted = [&](const Monomial& mono) {
            return column.at({mono[0] + mult[0], mono[1] + mult[1], mono[2] + mult[2]});
        };
        for (const auto& [mono, c] : f.constant[static_cast<std::size_t>(owner)]) sys.base[row][shifted(mono)] += c;
        sys.slope[row][shifted(f.lambda_monomial[static_cast<std::size_t>(owner)])] += 1;
    }
    return sys;
}

std::optional<Rational> evaluate_resultant(const ResultantSystem& sys, const Rational& lambda) {
    const std::size_t size = sys.base.size();
    RationalMatrix mat = sys.base;
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            if (sgn(sys.slope[i][j]) != 0) mat[i][j] += lambda * sys.slope[i][j];
    Rational denominator(1);
    if (!sys.minor.empty()) {
        RationalMatrix sub(sys.minor.size(), std::vector<Rational>(sys.minor.size()));
        for (std::size_t i = 0; i < sys.minor.size(); ++i)
            for (std::size_t j = 0; j < sys.minor.size(); ++j) sub[i][j] = mat[sys.minor[i]][sys.minor[j]];
        denominator = determinant(sub);
        if (sgn(denominator) == 0) return std::nullopt;
    }
    return determinant(mat) / denominator;
}

Rational interpolation_node(std::size_t t) {
    if (t == 0) return Rational(0);
    const long half = static_cast<long>((t + 1) / 2);
    return Rational(t % 2 == 1 ? half : -half);
}

std::vector<std::optional<Rational>> evaluate_nodes(const ResultantSystem& sys, std::span<const Rational> nodes) {
    std::vector<std::optional<Rational>> out(nodes.size());
    const auto count = static_cast<long>(nodes.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = evaluate_resultant(sys, nodes[static_cast<std::size_t>(i)]);
    return out;
}

UniPoly resultant_polynomial(const ResultantSystem& sys, const NodeEvaluator& evaluate) {
    const auto needed = static_cast<std::size_t>(sys.degree) + 1;
    const std::size_t budget = needed + kExtraNodeBudget;
    std::vector<Rational> nodes;
    std::vector<Rational> values;
    std::size_t next = 0;
    while (nodes.size() < needed) {
        const std::size_t batch = std::min(needed - nodes.size(), budget - next);
        if (batch == 0)
            throw DegenerateResultantError("Macaulay denominator vanished at too many interpolation nodes");
        std::vector<Rational> candidates;
        for (std::size_t t = next; t < next + batch; ++t) candidates.push_back(interpolation_node(t));
        next += batch;
        auto results = evaluate(sys, candidates);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (!results[i]) continue;
            nodes.push_back(candidates[i]);
            values.push_back(*results[i]);
        }
    }
    UniPoly p = interpolate(nodes, values);
    if (p.degree() != sys.degree)
        throw DegenerateResultantError("interpolated resultant has degree " + std::to_string(p.degree()) +
                                       ", expected " + std::to_string(sys.degree));
    return p.monic();
}

}  // namespace hyperspec
