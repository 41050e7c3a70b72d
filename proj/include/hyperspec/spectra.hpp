#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperspec/certificate.hpp"
#include "hyperspec/modular.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

enum class EigenKind { General, H };

struct EigenPair {
    std::complex<double> lambda;
    ComplexVector x;
    double residual = 0.0;
    EigenKind kind = EigenKind::General;
};

/// Recomputes the residual of (lambda, x) against `a`. Claiming kind H with a
/// nonzero imaginary part anywhere is a PreconditionError.
EigenPair certify_eigenpair(const CubicalTensor& a, std::complex<double> lambda, ComplexVector x,
                            EigenKind kind = EigenKind::General);

struct PowerOptions {
    /// Target width of the Collatz-Wielandt bracket.
    double tol = 1e-10;
    long max_iter = 100000;
    /// Diagonal shift; defaults to 1 + the largest diagonal entry.
    std::optional<double> shift;
};

struct PerronResult {
    /// (rho, x) with x > 0 and sum x_k^r = 1; kind H.
    EigenPair pair;
    double lower = 0.0;
    double upper = 0.0;
    long iterations = 0;
    double shift = 0.0;
};

/// Spectral radius of a nonnegative weakly irreducible tensor by the shifted
/// power iteration x <- normalize((F(x) + s x^[r-1])^[1/(r-1)]).
///
/// Every iterate brackets the radius between min_k F_k/x_k^{r-1} and
/// max_k F_k/x_k^{r-1}; iteration stops once the bracket is narrower than
/// tol and returns its midpoint. Throws NotNonnegativeError, ReducibleError
/// (decompose with components() first) or ConvergenceError carrying the last
/// bracket.
PerronResult spectral_radius_power(const CubicalTensor& a, const PowerOptions& options = {});

/// Unit-modulus diagonal operator sending eigenpairs (lambda, x) to
/// (-lambda, diag * x).
struct NegationMap {
    ComplexVector diag;
    std::variant<OddColoring, OddTransversal> source;
};

/// diag_k = exp(2 pi i phi(k) / r). The coloring must verify against `a`.
NegationMap negation_map_from_coloring(const CubicalTensor& a, const OddColoring& phi);

/// diag_k = 2 [k in X] - 1. r must be even and X must verify against `a`.
NegationMap negation_map_from_transversal(const CubicalTensor& a, const OddTransversal& x);

/// (-lambda, diag * x) with its residual recomputed against `a`. Kind H is
/// kept when the image is still real.
EigenPair transport(const CubicalTensor& a, const NegationMap& map, const EigenPair& pair);

/// Relative magnitude below which an eigenvector entry counts as zero.
inline constexpr double kSignThreshold = 1e-8;

/// {k : x_k < 0} for a real vector with no (numerically) zero entry.
OddTransversal extract_transversal_from_eigenvector(std::span<const std::complex<double>> x);

enum class SymmetryBranch { OddArity, Colorable, NotColorable };
std::string to_string(SymmetryBranch b);

struct WitnessPair {
    /// Component on which the pair is supported (0-based vertices).
    std::vector<Index> vertices;
    /// Perron pair of the component, extended by zero to the whole tensor.
    EigenPair perron;
    /// Its image under the coloring's negation map.
    EigenPair negated;
};

struct SymmetryReport {
    bool symmetric = false;
    SymmetryBranch branch = SymmetryBranch::OddArity;
    /// Odd-coloring of the whole tensor when branch is Colorable.
    std::optional<OddColoring> certificate;
    std::vector<WitnessPair> witness_pairs;
    /// Component that admits no odd-coloring, with the certificate of that.
    std::vector<Index> failed_component;
    std::optional<ModularInfeasibility> infeasibility;
};

/// Decides whether a symmetric nonnegative tensor has symmetric spectrum.
/// Odd r: only the zero tensor does. Even r: exactly when every component is
/// odd-colorable; the Perron pair of each component and its negated image
/// are returned as witnesses.
SymmetryReport check_symmetric_spectrum_certified(const CubicalTensor& a, const PowerOptions& options = {});

}  // namespace hyperspec
