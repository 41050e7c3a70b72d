#pragma once

// Serial reference implementations of the parallel kernels. Kept for tests
// and the benchmark; the library itself calls the versions in kernels.hpp.

#include <complex>
#include <span>
#include <vector>

#include <optional>

#include "hyperspec/resultant.hpp"
#include "hyperspec/tensor.hpp"
#include "hyperspec/unipoly.hpp"

namespace hyperspec::reference {

ComplexVector apply(const CubicalTensor& a, std::span<const std::complex<double>> x);
std::vector<double> apply(const CubicalTensor& a, std::span<const double> x);
double polynomial_form(const CubicalTensor& a, std::span<const double> x);

/// Evaluates resultant nodes one after another.
std::vector<std::optional<Rational>> evaluate_nodes(const ResultantSystem& sys, std::span<const Rational> nodes);

/// Characteristic polynomial through the serial node evaluator.
UniPoly charpoly_tensor(const CubicalTensor& a);

}  // namespace hyperspec::reference
