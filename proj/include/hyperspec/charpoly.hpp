#pragma once

#include <complex>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/tensor.hpp"
#include "hyperspec/unipoly.hpp"

namespace hyperspec {

/// det(xI - A) for an exact rational 2-matrix of any order, by the
/// division-free Berkowitz recurrence.
UniPoly charpoly_2matrix(const CubicalTensor& a);

/// Resultant of the eigen-system in lambda, monic of degree n (r-1)^(n-1).
/// Hard contract: n <= 3, 2 <= r <= 5, exact real entries
/// (OutOfContractError / NotExactError otherwise). Nodes are evaluated in
/// parallel.
UniPoly charpoly_tensor(const CubicalTensor& a);

/// charpoly_2matrix for r = 2 (any n), charpoly_tensor otherwise.
UniPoly characteristic_polynomial(const CubicalTensor& a);

/// p(-x) = (-1)^deg p p(x): the root multiset is closed under negation.
bool is_spectrum_symmetric_poly(const UniPoly& p);

/// Distinct complex roots: companion-matrix eigenvalues of the squarefree
/// part, polished by a few Newton steps. For cross-checks only.
std::vector<std::complex<double>> numeric_roots(const UniPoly& p);

/// Largest modulus among numeric_roots(p); 0 for constants.
double max_root_modulus(const UniPoly& p);

struct ComponentFactor {
    std::vector<Index> vertices;
    UniPoly charpoly;
    /// (r-1)^(n - n_i).
    long exponent = 1;
};

struct ProductReport {
    bool equal = false;
    UniPoly direct;
    UniPoly product;
    std::vector<ComponentFactor> factors;
};

/// Compares the characteristic polynomial of a symmetric weakly reducible
/// tensor with the product of its components' polynomials raised to
/// (r-1)^(n - n_i). Weakly irreducible input is a PreconditionError.
ProductReport verify_component_product(const CubicalTensor& a);

struct RootMultiplicity {
    /// Monic squarefree factor collecting the nonzero roots of one multiplicity.
    UniPoly factor;
    int before = 0;
    int after = 0;
    /// before * (r-1), as the component product gives.
    long product_rule = 0;
    /// before^(r-1).
    long power_rule = 0;
};

struct IsolatedVertexReport {
    int arity = 0;
    int order = 0;
    UniPoly before;
    UniPoly after;
    int zero_before = 0;
    int zero_after = 0;
    /// zero_before * (r-1) + (r-1)^n.
    long zero_product_rule = 0;
    /// zero_before^(r-1) + (r-1)^n.
    long zero_power_rule = 0;
    std::vector<RootMultiplicity> roots;
    bool matches_product_rule = false;
    bool matches_power_rule = false;
};

/// Appends an isolated vertex to a symmetric tensor of order n <= 2 and
/// compares root multiplicities before and after with both rules above.
IsolatedVertexReport isolated_vertex_multiplicity_check(const CubicalTensor& a);
IsolatedVertexReport isolated_vertex_multiplicity_check(const Hypergraph& g);

}  // namespace hyperspec
