#pragma once
// Resultant of the eigen-system lambda x_k^{r-1} - F_k(x) as a polynomial in
// lambda, by evaluation at rational nodes and exact interpolation.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hyperspec/tensor.hpp"
#include "hyperspec/unipoly.hpp"

namespace hyperspec {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant: rows are scaled to integers, then fraction-free
/// Bareiss elimination over mpz. The empty matrix has determinant 1.
Rational determinant(const RationalMatrix& m);

/// The resultant matrix written as base + lambda * slope.
///
/// n = 1 gives the 1x1 matrix [lambda - a]; n = 2 the Sylvester matrix of two
/// binary forms of degree r-1; n = 3 the Macaulay matrix of three ternary
/// forms in degree 3(r-1)-2, with `minor` naming the rows and columns of the
/// Macaulay denominator (monomials divisible by two or more x_i^{r-1}).
struct ResultantSystem {
    int arity = 0;
    int order = 0;
    RationalMatrix base;
    RationalMatrix slope;
    std::vector<std::size_t> minor;
    /// n (r-1)^(n-1).
    int degree = 0;
};

/// Builds the matrices. Requires n <= 3, 2 <= r <= 5 and exact real entries.
ResultantSystem resultant_system(const CubicalTensor& a);

/// Resultant at lambda, or nullopt when the Macaulay denominator vanishes.
std::optional<Rational> evaluate_resultant(const ResultantSystem& sys, const Rational& lambda);

/// The t-th candidate node: 0, 1, -1, 2, -2, ...
Rational interpolation_node(std::size_t t);

/// Evaluates the listed nodes in parallel; results are in node order.
std::vector<std::optional<Rational>> evaluate_nodes(const ResultantSystem& sys,
                                                    std::span<const Rational> nodes);

using NodeEvaluator = std::function<std::vector<std::optional<Rational>>(
    const ResultantSystem&, std::span<const Rational>)>;

/// Candidate nodes tried beyond degree + 1 before giving up.
inline constexpr std::size_t kExtraNodeBudget = 64;

/// Collects degree + 1 usable nodes in candidate order, interpolates, and
/// returns the monic result. Throws DegenerateResultantError when the
/// candidate budget runs out.
UniPoly resultant_polynomial(const ResultantSystem& sys, const NodeEvaluator& evaluate);

}  // namespace hyperspec
