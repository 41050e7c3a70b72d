#include "doctest.h"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "hyperspec/errors.hpp"
#include "hyperspec/fixtures.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/kernels.hpp"
#include "hyperspec/parity.hpp"
#include "hyperspec/spectra.hpp"
#include "test_util.hpp"

using namespace hyperspec;

namespace {

double factorial(int k) { return k <= 1 ? 1.0 : k * factorial(k - 1); }

ComplexVector real_vector(std::initializer_list<double> v) { return ComplexVector(v.begin(), v.end()); }

}  // namespace

TEST_CASE("spectral radius of complete graphs") {
    for (int n = 2; n <= 8; ++n) {
        const auto res = spectral_radius_power(adjacency_tensor(complete_graph(n)));
        CHECK(std::abs(res.pair.lambda.real() - (n - 1)) <= 1e-9);
        CHECK(res.upper - res.lower <= 1e-10);
        CHECK(res.pair.kind == EigenKind::H);
    }
}

TEST_CASE("spectral radius of a single edge is (r-1)!") {
    for (int r = 2; r <= 5; ++r) {
        const auto res = spectral_radius_power(adjacency_tensor(single_edge(r, r)));
        CHECK(std::abs(res.pair.lambda.real() - factorial(r - 1)) <= 1e-9);
        double norm = 0.0;
        for (const auto& v : res.pair.x) {
            CHECK(v.real() > 0.0);
            norm += std::pow(v.real(), r);
        }
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("spectral radius of the order-6 tensor is 1") {
    const auto res = spectral_radius_power(fixtures::order6());
    CHECK(std::abs(res.pair.lambda.real() - 1.0) <= 1e-10);
    CHECK(res.pair.residual <= 1e-10);
}

TEST_CASE("power iteration error paths") {
    CHECK_THROWS_AS(spectral_radius_power(fixtures::h2()), NotNonnegativeError);
    CHECK_THROWS_AS(spectral_radius_power(adjacency_tensor(single_edge(3, 4))), ReducibleError);
    CHECK_THROWS_AS(spectral_radius_power(fixtures::a1()), ReducibleError);
    PowerOptions tight;
    tight.max_iter = 1;
    tight.tol = 1e-14;
    try {
        spectral_radius_power(adjacency_tensor(two_part_counterexample(1, 4, 5).graph), tight);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.lower() <= e.upper());
        CHECK(e.iterations() == 1);
    }
}

TEST_CASE("property: the polynomial form never exceeds rho on the unit r-sphere") {
    std::mt19937 rng(51);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 8; ++trial) {
        const int r = 2 + trial % 3;
        const auto g = testutil::random_transversal_graph(r, r + 2, 5, rng).graph;
        const auto a = adjacency_tensor(g);
        const double rho = spectral_radius_power(a).pair.lambda.real();
        for (int s = 0; s < 1000; ++s) {
            std::vector<double> y(static_cast<std::size_t>(g.order()));
            double norm = 0.0;
            for (auto& v : y) {
                v = u(rng);
                norm += std::pow(std::abs(v), r);
            }
            for (auto& v : y) v /= std::pow(norm, 1.0 / r);
            CHECK(polynomial_form(a, y) <= rho + 1e-10);
        }
    }
}

TEST_CASE("negation map from a coloring on K2") {
    const auto a = adjacency_tensor(complete_graph(2));
    const auto map = negation_map_from_coloring(a, OddColoring{2, {1, 0}});
    CHECK(map.diag == real_vector({-1, 1}));
    const auto pair = certify_eigenpair(a, 1.0, real_vector({1, 1}), EigenKind::H);
    const auto neg = transport(a, map, pair);
    CHECK(neg.lambda == std::complex<double>(-1.0, 0.0));
    CHECK(neg.x == real_vector({-1, 1}));
    CHECK(neg.residual == 0.0);
}

TEST_CASE("negation map from a coloring on the two-part family") {
    const auto gen = two_part_counterexample(1, 4, 4);
    const auto a = adjacency_tensor(gen.graph);
    const auto perron = spectral_radius_power(a);
    const auto map = negation_map_from_coloring(a, gen.witness);
    for (const auto& d : map.diag) CHECK(std::abs(std::abs(d) - 1.0) <= 1e-15);
    const auto neg = transport(a, map, perron.pair);
    CHECK(neg.lambda.real() == -perron.pair.lambda.real());
    CHECK(neg.residual <= 10 * perron.pair.residual + 1e-10);
}

TEST_CASE("zero coloring on the zero tensor") {
    const auto a = CubicalTensor::zero(4, 3);
    const auto map = negation_map_from_coloring(a, OddColoring{4, {0, 0, 0}});
    const auto neg = transport(a, map, certify_eigenpair(a, 0.0, real_vector({1, 2, 3})));
    CHECK(neg.lambda == std::complex<double>(0.0, 0.0));
    CHECK(neg.residual == 0.0);
}

TEST_CASE("negation maps reject certificates that do not verify") {
    const auto p4 = adjacency_tensor(two_part_counterexample(1, 4, 4).graph);
    CHECK_THROWS_AS(negation_map_from_coloring(p4, OddColoring{4, {1, 0, 0, 0, 0, 0, 0, 0}}), CertificateError);
    CHECK_THROWS_AS(negation_map_from_coloring(p4, OddColoring{2, std::vector<int>(8, 0)}), CertificateError);
    CHECK_THROWS_AS(negation_map_from_transversal(p4, OddTransversal{{0}}), CertificateError);
    CHECK_THROWS_AS(negation_map_from_transversal(adjacency_tensor(single_edge(3, 3)), OddTransversal{{0}}),
                    OddArityError);
}

TEST_CASE("negation map from a transversal") {
    const auto k2 = adjacency_tensor(complete_graph(2));
    const auto map = negation_map_from_transversal(k2, OddTransversal{{0}});
    CHECK(map.diag == real_vector({1, -1}));
    const auto neg = transport(k2, map, certify_eigenpair(k2, 1.0, real_vector({1, 1}), EigenKind::H));
    CHECK(neg.lambda.real() == -1.0);
    CHECK(neg.kind == EigenKind::H);
    CHECK(neg.residual == 0.0);

    const auto e4 = adjacency_tensor(single_edge(4, 4));
    const auto perron = spectral_radius_power(e4);
    CHECK(std::abs(perron.pair.lambda.real() - 6.0) <= 1e-9);
    const auto neg4 = transport(e4, negation_map_from_transversal(e4, OddTransversal{{0}}), perron.pair);
    CHECK(neg4.kind == EigenKind::H);
    CHECK(neg4.residual <= 10 * perron.pair.residual + 1e-10);
}

TEST_CASE("sign extraction") {
    const auto k2 = adjacency_tensor(complete_graph(2));
    const auto x = extract_transversal_from_eigenvector(real_vector({1, -1}));
    CHECK(x.vertices == std::vector<Index>{1});
    CHECK(verify_certificate(k2, x));

    const auto e4 = adjacency_tensor(single_edge(4, 4));
    const double c = std::pow(0.25, 0.25);
    const auto pair = certify_eigenpair(e4, -6.0, real_vector({-c, c, c, c}), EigenKind::H);
    CHECK(pair.residual <= 1e-14);
    const auto x4 = extract_transversal_from_eigenvector(pair.x);
    CHECK(x4.vertices == std::vector<Index>{0});
    CHECK(verify_certificate(e4, x4));

    const auto positive = extract_transversal_from_eigenvector(real_vector({1, 1, 1, 1}));
    CHECK(positive.vertices.empty());
    CHECK_FALSE(verify_certificate(e4, positive));

    CHECK_THROWS_AS(extract_transversal_from_eigenvector(real_vector({1, 1e-12})), PreconditionError);
    CHECK_THROWS_AS(extract_transversal_from_eigenvector(ComplexVector{{1, 1}}), PreconditionError);
}

TEST_CASE("certified symmetry check branches") {
    const auto p4 = check_symmetric_spectrum_certified(adjacency_tensor(two_part_counterexample(1, 4, 4).graph));
    CHECK(p4.symmetric);
    CHECK(p4.branch == SymmetryBranch::Colorable);
    REQUIRE(p4.witness_pairs.size() == 1);
    const auto& w = p4.witness_pairs[0];
    CHECK(w.negated.lambda.real() == -w.perron.lambda.real());
    CHECK(w.perron.residual <= 1e-10);
    CHECK(w.negated.residual <= 1e-9);

    const auto k3 = check_symmetric_spectrum_certified(adjacency_tensor(complete_graph(3)));
    CHECK_FALSE(k3.symmetric);
    CHECK(k3.branch == SymmetryBranch::NotColorable);
    CHECK(k3.infeasibility.has_value());

    const auto e3 = check_symmetric_spectrum_certified(adjacency_tensor(single_edge(3, 3)));
    CHECK_FALSE(e3.symmetric);
    CHECK(e3.branch == SymmetryBranch::OddArity);
    CHECK(check_symmetric_spectrum_certified(CubicalTensor::zero(3, 2)).symmetric);

    CHECK_THROWS_AS(check_symmetric_spectrum_certified(fixtures::order6()), NotSymmetricError);
    CHECK_THROWS_AS(check_symmetric_spectrum_certified(fixtures::h2()), NotNonnegativeError);
}

TEST_CASE("certified symmetry check on a reducible tensor decides per component") {
    // K2 plus a disjoint triangle: the triangle blocks symmetry.
    const Hypergraph mixed(2, 5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
    const auto rep = check_symmetric_spectrum_certified(adjacency_tensor(mixed));
    CHECK_FALSE(rep.symmetric);
    CHECK(rep.failed_component == std::vector<Index>{2, 3, 4});
    // Two disjoint K2: both components colorable, one witness each.
    const auto two = check_symmetric_spectrum_certified(fixtures::a2());
    CHECK(two.symmetric);
    CHECK(two.witness_pairs.size() == 2);
}

TEST_CASE("property: coloring transport on every eigenpair of bipartite 2-graphs") {
    std::mt19937 rng(52);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 7;
        const auto tg = testutil::random_transversal_graph(2, n, n + trial % 4, rng);
        const auto a = adjacency_tensor(tg.graph);
        const auto phi = odd_coloring(a);
        REQUIRE(phi.feasible());
        const auto map = negation_map_from_coloring(a, *phi.coloring);
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        for (const auto& e : tg.graph.edges()) m(e[0], e[1]) = m(e[1], e[0]) = 1.0;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
        for (int j = 0; j < n; ++j) {
            ComplexVector x;
            for (int k = 0; k < n; ++k) x.push_back(solver.eigenvectors()(k, j));
            const auto pair = certify_eigenpair(a, solver.eigenvalues()(j), x, EigenKind::H);
            const auto neg = transport(a, map, pair);
            CHECK(neg.residual <= 10 * pair.residual + 1e-10);
        }
    }
}

TEST_CASE("property: transversal round trip on random 4-graphs") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const auto tg = testutil::random_transversal_graph(4, 5 + trial % 4, 3 + trial % 5, rng);
        const auto a = adjacency_tensor(tg.graph);
        const auto perron = spectral_radius_power(a);
        const auto neg = transport(a, negation_map_from_transversal(a, OddTransversal{tg.transversal}), perron.pair);
        CHECK(neg.kind == EigenKind::H);
        CHECK(neg.residual <= 10 * perron.pair.residual + 1e-10);
        const auto found = extract_transversal_from_eigenvector(neg.x);
        CHECK(verify_certificate(a, found));
    }
}
