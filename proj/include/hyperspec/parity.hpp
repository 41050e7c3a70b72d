#pragma once

#include <optional>
#include <vector>

#include "hyperspec/certificate.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/modular.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

/// Distinct support patterns: the sorted index multisets of the nonzero
/// entries. Both parity conditions depend only on these, so an adjacency
/// tensor contributes one pattern per edge instead of r! entries.
struct SupportSystem {
    int r = 2;
    int n = 1;
    std::vector<std::vector<Index>> patterns;
};

SupportSystem support_system(const CubicalTensor& a);
SupportSystem support_system(const Hypergraph& g);

struct ColoringOutcome {
    std::optional<OddColoring> coloring;
    /// Present iff infeasible; indexes into SupportSystem::patterns.
    std::optional<ModularInfeasibility> infeasibility;

    bool feasible() const { return coloring.has_value(); }
};

struct TransversalOutcome {
    std::optional<OddTransversal> transversal;
    /// Present iff infeasible; indexes into SupportSystem::patterns.
    std::optional<Gf2Infeasibility> infeasibility;

    bool feasible() const { return transversal.has_value(); }
};

/// Solves sum_j phi(i_j) = r/2 (mod r) over every support pattern. Throws
/// OddArityError for odd r.
ColoringOutcome odd_coloring(const SupportSystem& s);
ColoringOutcome odd_coloring(const CubicalTensor& a);
ColoringOutcome odd_coloring(const Hypergraph& g);

/// Solves sum_j [i_j in X] = 1 (mod 2) over every support pattern.
TransversalOutcome odd_transversal(const SupportSystem& s);
TransversalOutcome odd_transversal(const CubicalTensor& a);
TransversalOutcome odd_transversal(const Hypergraph& g);

/// phi = r/2 on X, 0 elsewhere.
OddColoring transversal_to_coloring(const OddTransversal& x, int r, int n);

/// X = {i : phi(i) odd}. Valid for r = 2 (mod 4) only; throws otherwise.
OddTransversal coloring_to_transversal(const OddColoring& phi);

bool verify_certificate(const SupportSystem& s, const OddColoring& phi);
bool verify_certificate(const SupportSystem& s, const OddTransversal& x);
bool verify_certificate(const CubicalTensor& a, const OddColoring& phi);
bool verify_certificate(const CubicalTensor& a, const OddTransversal& x);
bool verify_certificate(const Hypergraph& g, const OddColoring& phi);
bool verify_certificate(const Hypergraph& g, const OddTransversal& x);

/// First support pattern violating the certificate, if any.
std::optional<std::size_t> first_violation(const SupportSystem& s, const OddColoring& phi);
std::optional<std::size_t> first_violation(const SupportSystem& s, const OddTransversal& x);

/// The linear systems behind the solvers, exposed for certificate audits.
struct ColoringSystem {
    std::vector<std::vector<Residue>> rows;
    std::vector<Residue> rhs;
};
ColoringSystem coloring_system(const SupportSystem& s);

struct TransversalSystem {
    std::vector<std::vector<std::size_t>> rows;
    std::vector<bool> rhs;
};
TransversalSystem transversal_system(const SupportSystem& s);

}  // namespace hyperspec
