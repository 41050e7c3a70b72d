#include "hyperspec/parity.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hyperspec/errors.hpp"

namespace hyperspec {

SupportSystem support_system(const CubicalTensor& a) {
    std::set<std::vector<Index>> seen;
    for (std::size_t e = 0; e < a.size(); ++e) {
        const auto idx = a.index(e);
        std::vector<Index> key(idx.begin(), idx.end());
        std::sort(key.begin(), key.end());
        seen.insert(std::move(key));
    }
    return {a.arity(), a.order(), {seen.begin(), seen.end()}};
}

SupportSystem support_system(const Hypergraph& g) {
    return {g.uniformity(), g.order(), g.edges()};
}

ColoringSystem coloring_system(const SupportSystem& s) {
    ColoringSystem sys;
    sys.rows.reserve(s.patterns.size());
    for (const auto& p : s.patterns) {
        std::vector<Residue> row(static_cast<std::size_t>(s.n), 0);
        for (Index i : p) row[i] = (row[i] + 1) % s.r;
        sys.rows.push_back(std::move(row));
    }
    sys.rhs.assign(s.patterns.size(), s.r / 2);
    return sys;
}

TransversalSystem transversal_system(const SupportSystem& s) {
    TransversalSystem sys;
    sys.rows.reserve(s.patterns.size());
    for (const auto& p : s.patterns) {
        std::vector<std::size_t> odd;
        for (std::size_t i = 0; i < p.size();) {
            std::size_t j = i;
            while (j < p.size() && p[j] == p[i]) ++j;
            if ((j - i) % 2 == 1) odd.push_back(p[i]);
            i = j;
        }
        sys.rows.push_back(std::move(odd));
    }
    sys.rhs.assign(s.patterns.size(), true);
    return sys;
}

namespace {

void require_even(int r) {
    if (r % 2 != 0) throw OddArityError("odd-colorings are defined only for even r, got r = " + std::to_string(r));
}

}  // namespace

ColoringOutcome odd_coloring(const SupportSystem& s) {
    require_even(s.r);
    ColoringOutcome out;
    if (s.patterns.empty()) {
        out.coloring = OddColoring{s.r, std::vector<int>(static_cast<std::size_t>(s.n), 0)};
        return out;
    }
    const ColoringSystem sys = coloring_system(s);
    ModularSolution sol = solve_mod(sys.rows, sys.rhs, static_cast<std::size_t>(s.n), s.r);
    if (sol.feasible()) {
        std::vector<long> phi(sol.solution->begin(), sol.solution->end());
        out.coloring = make_odd_coloring(s.r, phi);
    } else {
        out.infeasibility = std::move(sol.infeasibility);
    }
    return out;
}

ColoringOutcome odd_coloring(const CubicalTensor& a) { return odd_coloring(support_system(a)); }
ColoringOutcome odd_coloring(const Hypergraph& g) { return odd_coloring(support_system(g)); }

TransversalOutcome odd_transversal(const SupportSystem& s) {
    const TransversalSystem sys = transversal_system(s);
    Gf2Solution sol = solve_gf2(sys.rows, sys.rhs, static_cast<std::size_t>(s.n));
    TransversalOutcome out;
    if (sol.feasible()) {
        std::vector<Index> x;
        for (std::size_t i = 0; i < sol.solution->size(); ++i)
            if ((*sol.solution)[i]) x.push_back(static_cast<Index>(i));
        out.transversal = OddTransversal{std::move(x)};
    } else {
        out.infeasibility = std::move(sol.infeasibility);
    }
    return out;
}

TransversalOutcome odd_transversal(const CubicalTensor& a) { return odd_transversal(support_system(a)); }
TransversalOutcome odd_transversal(const Hypergraph& g) { return odd_transversal(support_system(g)); }

OddColoring transversal_to_coloring(const OddTransversal& x, int r, int n) {
    require_even(r);
    OddColoring phi{r, std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (Index v : x.vertices) {
        if (v >= static_cast<Index>(n)) throw DimensionError("transversal vertex out of range");
        phi.phi[v] = r / 2;
    }
    return phi;
}

OddTransversal coloring_to_transversal(const OddColoring& phi) {
    if (phi.r % 4 != 2) {
        throw PreconditionError("odd-coloring to transversal conversion needs r = 2 (mod 4), got r = " +
                                std::to_string(phi.r));
    }
    std::vector<Index> x;
    for (std::size_t i = 0; i < phi.phi.size(); ++i)
        if (phi.phi[i] % 2 != 0) x.push_back(static_cast<Index>(i));
    return OddTransversal{std::move(x)};
}

std::optional<std::size_t> first_violation(const SupportSystem& s, const OddColoring& phi) {
    require_even(phi.r);
    if (phi.r != s.r) throw PreconditionError("coloring modulus differs from the tensor arity");
    if (phi.phi.size() != static_cast<std::size_t>(s.n)) throw DimensionError("coloring length differs from order");
    for (std::size_t p = 0; p < s.patterns.size(); ++p) {
        long sum = 0;
        for (Index i : s.patterns[p]) sum += phi.phi[i];
        if (((sum % s.r) + s.r) % s.r != s.r / 2) return p;
    }
    return std::nullopt;
}

std::optional<std::size_t> first_violation(const SupportSystem& s, const OddTransversal& x) {
    for (Index v : x.vertices)
        if (v >= static_cast<Index>(s.n)) throw DimensionError("transversal vertex out of range");
    for (std::size_t p = 0; p < s.patterns.size(); ++p) {
        std::size_t hits = 0;
        for (Index i : s.patterns[p]) hits += x.contains(i) ? 1 : 0;
        if (hits % 2 != 1) return p;
    }
    return std::nullopt;
}

bool verify_certificate(const SupportSystem& s, const OddColoring& phi) { return !first_violation(s, phi); }
bool verify_certificate(const SupportSystem& s, const OddTransversal& x) { return !first_violation(s, x); }
bool verify_certificate(const CubicalTensor& a, const OddColoring& phi) {
    return verify_certificate(support_system(a), phi);
}
bool verify_certificate(const CubicalTensor& a, const OddTransversal& x) {
    return verify_certificate(support_system(a), x);
}
bool verify_certificate(const Hypergraph& g, const OddColoring& phi) {
    return verify_certificate(support_system(g), phi);
}
bool verify_certificate(const Hypergraph& g, const OddTransversal& x) {
    return verify_certificate(support_system(g), x);
}

}  // namespace hyperspec
