#include "hyperspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyperspec/errors.hpp"
#include "hyperspec/kernels.hpp"
#include "hyperspec/parity.hpp"
#include "hyperspec/structure.hpp"

namespace hyperspec {

namespace {

double int_power(double base, int exponent) {
    double out = 1.0;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

bool all_real(std::span<const std::complex<double>> x) {
    return std::all_of(x.begin(), x.end(), [](const auto& c) { return c.imag() == 0.0; });
}

// exp(2 pi i m / r), exact at multiples of a quarter turn.
std::complex<double> root_of_unity(int m, int r) {
    m = ((m % r) + r) % r;
    if ((4 * m) % r == 0) {
        static constexpr std::complex<double> quarter[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return quarter[(4 * m) / r];
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * m / r);
}

}  // namespace

EigenPair certify_eigenpair(const CubicalTensor& a, std::complex<double> lambda, ComplexVector x, EigenKind kind) {
    if (kind == EigenKind::H && (lambda.imag() != 0.0 || !all_real(x))) {
        throw PreconditionError("an H-eigenpair needs a real eigenvalue and a real eigenvector");
    }
    const double res = eigen_residual(a, lambda, x);
    return {lambda, std::move(x), res, kind};
}

PerronResult spectral_radius_power(const CubicalTensor& a, const PowerOptions& options) {
    if (!a.is_nonnegative()) throw NotNonnegativeError("power iteration needs a nonnegative real tensor");
    if (!is_weakly_irreducible(a)) {
        throw ReducibleError("tensor is weakly reducible; split it with components() and iterate per component");
    }
    const int r = a.arity();
    const int m = r - 1;
    const auto n = static_cast<std::size_t>(a.order());

    double shift = 1.0;
    if (options.shift) {
        shift = *options.shift;
    } else {
        std::vector<Index> diag(static_cast<std::size_t>(r));
        for (Index k = 0; k < n; ++k) {
            std::fill(diag.begin(), diag.end(), k);
            shift = std::max(shift, 1.0 + a.at(diag).to_complex().real());
        }
    }

    std::vector<double> x(n, std::pow(static_cast<double>(n), -1.0 / r));
    double lo = 0.0, hi = 0.0;
    for (long it = 0; it < options.max_iter; ++it) {
        const auto f = apply(a, std::span<const double>(x));
        lo = std::numeric_limits<double>::infinity();
        hi = -lo;
        for (std::size_t k = 0; k < n; ++k) {
            const double ratio = f[k] / int_power(x[k], m);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        if (hi - lo <= options.tol) {
            const double rho = 0.5 * (lo + hi);
            ComplexVector cx(x.begin(), x.end());
            PerronResult out;
            out.pair = certify_eigenpair(a, rho, std::move(cx), EigenKind::H);
            out.lower = lo;
            out.upper = hi;
            out.iterations = it;
            out.shift = shift;
            return out;
        }
        double norm = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            x[k] = std::pow(f[k] + shift * int_power(x[k], m), 1.0 / m);
            norm += int_power(x[k], r);
        }
        norm = std::pow(norm, 1.0 / r);
        for (auto& v : x) v /= norm;
    }
    throw ConvergenceError("power iteration did not converge: rho in [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]",
                           lo, hi, options.max_iter);
}

NegationMap negation_map_from_coloring(const CubicalTensor& a, const OddColoring& phi) {
    if (phi.r != a.arity()) throw CertificateError("coloring modulus differs from the tensor arity");
    if (!verify_certificate(a, phi)) throw CertificateError("odd-coloring does not verify against the tensor");
    NegationMap map{ComplexVector(phi.phi.size()), phi};
    for (std::size_t k = 0; k < phi.phi.size(); ++k) map.diag[k] = root_of_unity(phi.phi[k], phi.r);
    return map;
}

NegationMap negation_map_from_transversal(const CubicalTensor& a, const OddTransversal& x) {
    if (a.arity() % 2 != 0) throw OddArityError("transversal negation maps need an even arity");
    if (!verify_certificate(a, x)) throw CertificateError("odd transversal does not verify against the tensor");
    NegationMap map{ComplexVector(static_cast<std::size_t>(a.order()), {-1.0, 0.0}), x};
    for (Index v : x.vertices) map.diag[v] = {1.0, 0.0};
    return map;
}

EigenPair transport(const CubicalTensor& a, const NegationMap& map, const EigenPair& pair) {
    if (pair.x.size() != map.diag.size()) throw DimensionError("eigenvector length differs from the map");
    ComplexVector y(pair.x.size());
    for (std::size_t k = 0; k < y.size(); ++k) y[k] = map.diag[k] * pair.x[k];
    const bool real = pair.kind == EigenKind::H && all_real(y);
    return certify_eigenpair(a, -pair.lambda, std::move(y), real ? EigenKind::H : EigenKind::General);
}

OddTransversal extract_transversal_from_eigenvector(std::span<const std::complex<double>> x) {
    if (!all_real(x)) throw PreconditionError("sign extraction needs a real eigenvector");
    double xinf = 0.0;
    for (const auto& c : x) xinf = std::max(xinf, std::abs(c.real()));
    if (xinf == 0.0) throw PreconditionError("sign extraction from the zero vector");
    std::vector<Index> negative;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (std::abs(x[k].real()) < kSignThreshold * xinf) {
            throw PreconditionError("eigenvector entry " + std::to_string(k) + " is numerically zero");
        }
        if (x[k].real() < 0.0) negative.push_back(static_cast<Index>(k));
    }
    return OddTransversal{std::move(negative)};
}

std::string to_string(SymmetryBranch b) {
    switch (b) {
        case SymmetryBranch::OddArity:
            return "odd-r";
        case SymmetryBranch::Colorable:
            return "colorable";
        case SymmetryBranch::NotColorable:
            return "not-colorable";
    }
    return "unknown";
}

SymmetryReport check_symmetric_spectrum_certified(const CubicalTensor& a, const PowerOptions& options) {
    if (!is_symmetric(a)) throw NotSymmetricError("the certified symmetry check needs a symmetric tensor");
    if (!a.is_nonnegative()) throw NotNonnegativeError("the certified symmetry check needs a nonnegative tensor");

    SymmetryReport report;
    if (a.arity() % 2 != 0) {
        report.branch = SymmetryBranch::OddArity;
        report.symmetric = a.is_zero();
        return report;
    }

    const ComponentDecomposition parts = components(a);
    OddColoring phi{a.arity(), std::vector<int>(static_cast<std::size_t>(a.order()), 0)};
    for (const auto& part : parts.parts) {
        if (part.block.is_zero()) continue;
        ColoringOutcome local = odd_coloring(part.block);
        if (!local.feasible()) {
            report.symmetric = false;
            report.branch = SymmetryBranch::NotColorable;
            report.failed_component = part.vertices;
            report.infeasibility = std::move(local.infeasibility);
            return report;
        }
        for (std::size_t i = 0; i < part.vertices.size(); ++i) phi.phi[part.vertices[i]] = local.coloring->phi[i];
    }

    report.symmetric = true;
    report.branch = SymmetryBranch::Colorable;
    const NegationMap map = negation_map_from_coloring(a, phi);
    report.certificate = phi;
    for (const auto& part : parts.parts) {
        if (part.block.is_zero()) continue;
        const PerronResult local = spectral_radius_power(part.block, options);
        ComplexVector lifted(static_cast<std::size_t>(a.order()), {0.0, 0.0});
        for (std::size_t i = 0; i < part.vertices.size(); ++i) lifted[part.vertices[i]] = local.pair.x[i];
        WitnessPair w;
        w.vertices = part.vertices;
        w.perron = certify_eigenpair(a, local.pair.lambda, std::move(lifted), EigenKind::H);
        w.negated = transport(a, map, w.perron);
        report.witness_pairs.push_back(std::move(w));
    }
    return report;
}

}  // namespace hyperspec
