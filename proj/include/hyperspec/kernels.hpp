#pragma once

// OpenMP-parallel evaluation kernels over the stored entries of a tensor.
//
// Work is split by first index: each output row is accumulated by one thread
// in storage order, so results are bit-identical to the serial versions in
// reference.hpp for any thread count.

#include <complex>
#include <span>
#include <vector>

#include "hyperspec/tensor.hpp"

namespace hyperspec {

/// F_k = sum over i2..ir of a_{k,i2..ir} x_{i2} ... x_{ir}.
ComplexVector apply(const CubicalTensor& a, std::span<const std::complex<double>> x);

/// Real overload; the tensor must be real-valued.
std::vector<double> apply(const CubicalTensor& a, std::span<const double> x);

/// max_k |lambda x_k^{r-1} - F_k(x)| / max(1, |x|_inf^{r-1} |lambda|, |x|_inf^{r-1}).
/// Zero iff (lambda, x) solves the eigen-equations exactly.
double eigen_residual(const CubicalTensor& a, std::complex<double> lambda,
                      std::span<const std::complex<double>> x);

/// P_A(x) = sum of a_{i1..ir} x_{i1} ... x_{ir} for a real tensor and real x.
double polynomial_form(const CubicalTensor& a, std::span<const double> x);

}  // namespace hyperspec
