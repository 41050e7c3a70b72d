#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hyperspec {

using Residue = std::int64_t;

/// Sparse row combination: (equation index, coefficient).
using RowCombination = std::vector<std::pair<std::size_t, Residue>>;

/// Coefficients y with y^T M = 0 and y^T b != 0 (mod modulus).
struct ModularInfeasibility {
    Residue modulus = 0;
    /// Prime power p^e of the modulus at which elimination got stuck.
    Residue prime_power = 0;
    RowCombination combination;
};

struct ModularSolution {
    std::optional<std::vector<Residue>> solution;
    std::optional<ModularInfeasibility> infeasibility;

    bool feasible() const { return solution.has_value(); }
};

/// Prime factorisation as (p, e) pairs, ascending p.
std::vector<std::pair<Residue, int>> factorize(Residue m);

/// Inverse of a unit modulo m. Throws if gcd(a, m) != 1.
Residue inverse_mod(Residue a, Residue m);

/// Solves M x = b over Z_m for any modulus 2 <= m < 2^31.
///
/// The modulus is split into prime powers p^e; each local system is reduced
/// with full pivoting on the entry of least p-adic valuation, which keeps
/// every pivot a unit times a power of p dividing the rest of its column,
/// and the local solutions are recombined with the CRT. An inconsistent
/// system comes back with a row combination certifying it.
ModularSolution solve_mod(const std::vector<std::vector<Residue>>& rows, const std::vector<Residue>& rhs,
                          std::size_t columns, Residue modulus);

/// Checks an infeasibility certificate against the original system.
bool certifies_infeasibility(const std::vector<std::vector<Residue>>& rows, const std::vector<Residue>& rhs,
                             Residue modulus, const ModularInfeasibility& proof);

/// The XOR of the listed equations reads 0 = 1.
struct Gf2Infeasibility {
    std::vector<std::size_t> rows;
};

struct Gf2Solution {
    std::optional<std::vector<bool>> solution;
    std::optional<Gf2Infeasibility> infeasibility;

    bool feasible() const { return solution.has_value(); }
};

/// Affine system over GF(2). Row i is the set of columns with coefficient 1
/// (repeats cancel); rhs[i] its right-hand side. Bitset Gaussian elimination,
/// streaming one row at a time against the current basis.
Gf2Solution solve_gf2(const std::vector<std::vector<std::size_t>>& rows, const std::vector<bool>& rhs,
                      std::size_t columns);

bool certifies_infeasibility(const std::vector<std::vector<std::size_t>>& rows, const std::vector<bool>& rhs,
                             const Gf2Infeasibility& proof);

}  // namespace hyperspec
