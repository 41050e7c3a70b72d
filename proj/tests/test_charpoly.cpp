#include "doctest.h"

#include "hyperspec/charpoly.hpp"
#include "hyperspec/errors.hpp"
#include "hyperspec/fixtures.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/parity.hpp"
#include "hyperspec/reference.hpp"
#include "hyperspec/resultant.hpp"
#include "hyperspec/spectra.hpp"
#include "hyperspec/structure.hpp"
#include "test_util.hpp"

using namespace hyperspec;
using testutil::symmetric_tensor;
using testutil::tensor;

// Coefficients below (ascending) come from tests/oracles/charpoly_oracle.py,
// which expands the Sylvester and Macaulay determinants symbolically.
namespace oracle {
const UniPoly mixed_n2_r3({-3, -8, -6, 0, 1});
const UniPoly block_n3_r3({144, 480, 280, -584, -567, 336, 372, -144, -114, 48, 12, -8, 1});
const UniPoly triangle({-2, -3, 0, 1});
const UniPoly edge_r3({0, 0, 0, -512, 0, 0, 192, 0, 0, -24, 0, 0, 1});
const UniPoly k2({-1, 0, 1});
const UniPoly mixed_n2_r4({0, 0, 81, 0, -18, 0, 1});
const UniPoly loop_plus_isolated({0, 0, 1, -2, 1});
const UniPoly cycle_n3_r3({0, 0, 0, -1, 0, 0, 3, 0, 0, -3, 0, 0, 1});
}  // namespace oracle

namespace {

// F_1 = 2 x1 x2 + x2^2, F_2 = x1^2 + 2 x1 x2.
CubicalTensor mixed_n2_r3() { return symmetric_tensor(3, 2, {{{0, 0, 1}, 1}, {{0, 1, 1}, 1}}); }

CubicalTensor block_n3_r3() {
    return symmetric_tensor(3, 3, {{{0, 0, 0}, 2}, {{1, 1, 2}, 1}, {{1, 2, 2}, 1}});
}

}  // namespace

TEST_CASE("2-matrix characteristic polynomials") {
    CHECK(charpoly_2matrix(fixtures::a1()) == UniPoly({-1, 1}).pow(2) * UniPoly({1, 1}).pow(2));
    CHECK(charpoly_2matrix(fixtures::h2()) == UniPoly({-2, 0, 1}));
    for (int n = 1; n <= 5; ++n) {
        std::vector<TensorEntry> id;
        for (Index i = 0; i < static_cast<Index>(n); ++i) id.push_back({{i, i}, Scalar(1L)});
        CHECK(charpoly_2matrix(CubicalTensor(2, n, id)) == UniPoly({-1, 1}).pow(static_cast<unsigned>(n)));
    }
    CHECK(charpoly_2matrix(adjacency_tensor(complete_graph(3))) == oracle::triangle);
    CHECK_THROWS_AS(charpoly_2matrix(fixtures::order6()), DimensionError);
    CHECK_THROWS_AS(charpoly_2matrix(CubicalTensor(2, 1, {{{0, 0}, Scalar(0.5)}})), NotExactError);
}

TEST_CASE("tensor characteristic polynomials against the oracle") {
    CHECK(charpoly_tensor(CubicalTensor::zero(3, 2)) == UniPoly::x().pow(4));
    CHECK(charpoly_tensor(tensor(4, 1, {{{0, 0, 0, 0}, 7}})) == UniPoly({-7, 1}));
    CHECK(charpoly_tensor(mixed_n2_r3()) == oracle::mixed_n2_r3);
    CHECK(charpoly_tensor(block_n3_r3()) == oracle::block_n3_r3);
    CHECK(charpoly_tensor(adjacency_tensor(complete_graph(3))) == oracle::triangle);
    CHECK(charpoly_tensor(adjacency_tensor(single_edge(3, 3))) == oracle::edge_r3);
    CHECK(charpoly_tensor(adjacency_tensor(complete_graph(2))) == oracle::k2);
    CHECK(charpoly_tensor(symmetric_tensor(4, 2, {{{0, 0, 1, 1}, 1}})) == oracle::mixed_n2_r4);
    CHECK(charpoly_tensor(tensor(3, 3, {{{0, 1, 2}, 1}, {{1, 2, 0}, 1}, {{2, 0, 1}, 1}})) == oracle::cycle_n3_r3);
}

TEST_CASE("tensor characteristic polynomial contract") {
    CHECK_THROWS_AS(charpoly_tensor(CubicalTensor::zero(3, 4)), OutOfContractError);
    CHECK_THROWS_AS(charpoly_tensor(CubicalTensor::zero(6, 2)), OutOfContractError);
    CHECK_THROWS_AS(charpoly_tensor(CubicalTensor(3, 1, {{{0, 0, 0}, Scalar(0.5)}})), NotExactError);
    CHECK_THROWS_AS(charpoly_tensor(CubicalTensor(3, 1, {{{0, 0, 0}, Scalar(Rational(0), Rational(1))}})),
                    NotExactError);
}

TEST_CASE("serial and parallel node evaluation give the same polynomial") {
    std::mt19937 rng(71);
    for (int t = 0; t < 6; ++t) {
        const auto a = testutil::random_tensor(3 + t % 2, 3, 6, 3, rng);
        CHECK(charpoly_tensor(a) == reference::charpoly_tensor(a));
    }
}

TEST_CASE("interpolation nodes and determinant") {
    CHECK(interpolation_node(0) == 0);
    CHECK(interpolation_node(1) == 1);
    CHECK(interpolation_node(2) == -1);
    CHECK(interpolation_node(5) == 3);
    CHECK(determinant({}) == 1);
    CHECK(determinant({{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}}) == Rational(1, 60));
    CHECK(determinant({{0, 1}, {1, 0}}) == -1);
    CHECK(determinant({{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("property: degree law") {
    std::mt19937 rng(72);
    for (int t = 0; t < 30; ++t) {
        const int r = 2 + t % 4;
        const int n = 1 + t % 3;
        if (r == 5 && n == 3 && t % 2) continue;
        const auto p = charpoly_tensor(testutil::random_tensor(r, n, 2 * n, 3, rng));
        int expected = n;
        for (int i = 1; i < n; ++i) expected *= r - 1;
        CHECK(p.degree() == expected);
        CHECK(p.is_monic());
    }
}

TEST_CASE("property: r = 2 resultant equals det(xI - A)") {
    std::mt19937 rng(73);
    for (int t = 0; t < 30; ++t) {
        const auto a = testutil::random_tensor(2, 1 + t % 3, 4, 5, rng);
        CHECK(charpoly_tensor(a) == charpoly_2matrix(a));
    }
}

TEST_CASE("property: negation covariance") {
    std::mt19937 rng(74);
    for (int t = 0; t < 20; ++t) {
        const auto a = testutil::random_tensor(2 + t % 3, 1 + t % 3, 5, 3, rng);
        const auto p = charpoly_tensor(a);
        const auto q = charpoly_tensor(-a);
        const Rational sign(p.degree() % 2 ? -1 : 1);
        CHECK(q == sign * p.reflected());
    }
}

TEST_CASE("property: diagonal similarity preserves the characteristic polynomial") {
    std::mt19937 rng(75);
    for (int t = 0; t < 15; ++t) {
        const int n = 1 + t % 3;
        const auto a = testutil::random_tensor(2 + t % 3, n, 5, 3, rng);
        std::vector<Scalar> z;
        for (int k = 0; k < n; ++k) z.emplace_back(Rational(static_cast<long>(1 + rng() % 4), static_cast<long>(1 + rng() % 3)));
        CHECK(charpoly_tensor(diagonal_similarity(a, z)) == charpoly_tensor(a));
    }
}

TEST_CASE("spectrum symmetry of polynomials") {
    CHECK(is_spectrum_symmetric_poly(UniPoly({-2, 0, 1})));
    CHECK(is_spectrum_symmetric_poly(UniPoly({-1, 1}).pow(2) * UniPoly({1, 1}).pow(2)));
    CHECK_FALSE(is_spectrum_symmetric_poly(UniPoly({0, -1, 1})));
    CHECK(is_spectrum_symmetric_poly(UniPoly::x().pow(3)));
    CHECK_FALSE(is_spectrum_symmetric_poly(oracle::triangle));
}

TEST_CASE("property: symmetric spectrum iff odd-colorable, tiny symmetric tensors") {
    std::mt19937 rng(76);
    int symmetric = 0;
    for (int t = 0; t < 60; ++t) {
        const int r = t % 2 ? 4 : 2;
        const int n = 1 + t % 3;
        const auto a = testutil::random_symmetric(r, n, 1 + t % 3, 2, rng);
        const bool sym = is_spectrum_symmetric_poly(charpoly_tensor(a));
        CHECK(sym == odd_coloring(a).feasible());
        symmetric += sym;
    }
    CHECK(symmetric > 5);
}

TEST_CASE("numeric roots use the squarefree part") {
    const auto roots = numeric_roots(oracle::edge_r3);
    CHECK(roots.size() == 4);
    CHECK(max_root_modulus(oracle::edge_r3) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(max_root_modulus(oracle::block_n3_r3) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(max_root_modulus(UniPoly::constant(1)) == 0.0);
}

TEST_CASE("power iteration matches the largest root modulus") {
    const std::vector<CubicalTensor> cases{
        mixed_n2_r3(),
        adjacency_tensor(single_edge(3, 3)),
        adjacency_tensor(single_edge(2, 2)),
        adjacency_tensor(complete_graph(3)),
        tensor(3, 3, {{{0, 1, 2}, 1}, {{1, 2, 0}, 1}, {{2, 0, 1}, 1}}),
        symmetric_tensor(4, 2, {{{0, 0, 1, 1}, 1}}),
        symmetric_tensor(5, 2, {{{0, 1, 1, 1, 1}, 2}, {{0, 0, 0, 0, 1}, 1}}),
        // Degree 48 with coefficients near 1e12; an unbalanced companion
        // matrix puts spurious roots near 700 here.
        tensor(5, 3,
               {{{0, 1, 0, 0, 2}, 1},
                {{0, 1, 2, 1, 1}, 2},
                {{1, 0, 1, 2, 1}, 3},
                {{1, 0, 2, 0, 2}, 1},
                {{1, 1, 0, 0, 2}, 1},
                {{2, 0, 1, 2, 0}, 3},
                {{2, 1, 2, 0, 0}, 3}}),
    };
    for (const auto& a : cases) {
        REQUIRE(is_weakly_irreducible(a));
        const double rho = spectral_radius_power(a).pair.lambda.real();
        CHECK(std::abs(rho - max_root_modulus(charpoly_tensor(a))) <= 1e-6);
    }
}

TEST_CASE("component product formula") {
    const auto zero = verify_component_product(CubicalTensor::zero(3, 2));
    CHECK(zero.equal);
    CHECK(zero.direct == UniPoly::x().pow(4));
    CHECK(zero.factors.size() == 2);
    CHECK(zero.factors[0].exponent == 2);

    const auto block = verify_component_product(block_n3_r3());
    CHECK(block.equal);
    CHECK(block.direct == oracle::block_n3_r3);
    CHECK(block.direct == UniPoly({-2, 1}).pow(4) * oracle::mixed_n2_r3.pow(2));

    const auto a2 = verify_component_product(fixtures::a2());
    CHECK(a2.equal);
    CHECK(a2.direct == UniPoly({-1, 0, 1}).pow(2));

    CHECK_THROWS_AS(verify_component_product(mixed_n2_r3()), PreconditionError);
    CHECK_THROWS_AS(verify_component_product(fixtures::a1()), NotSymmetricError);
    CHECK_THROWS_AS(verify_component_product(CubicalTensor::zero(3, 4)), OutOfContractError);
}

TEST_CASE("property: component product holds for reducible symmetric tensors") {
    std::mt19937 rng(77);
    int checked = 0;
    for (int t = 0; t < 60 && checked < 20; ++t) {
        const int r = 2 + t % 3;
        const auto a = testutil::random_symmetric(r, 1 + t % 3, 1 + t % 2, 3, rng);
        if (is_weakly_irreducible(a)) continue;
        CHECK(verify_component_product(a).equal);
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("isolated vertex multiplicities follow the component product") {
    const auto loop = isolated_vertex_multiplicity_check(tensor(3, 1, {{{0, 0, 0}, 1}}));
    CHECK(loop.before == UniPoly({-1, 1}));
    CHECK(loop.after == oracle::loop_plus_isolated);
    CHECK(loop.zero_after == 2);
    REQUIRE(loop.roots.size() == 1);
    CHECK(loop.roots[0].after == 2);
    CHECK(loop.matches_product_rule);
    CHECK_FALSE(loop.matches_power_rule);

    const auto empty = isolated_vertex_multiplicity_check(Hypergraph(3, 1));
    CHECK(empty.before == UniPoly::x());
    CHECK(empty.after == UniPoly::x().pow(4));
    CHECK(empty.zero_product_rule == 4);
    CHECK(empty.zero_power_rule == 3);
    CHECK(empty.matches_product_rule);

    const auto mixed = isolated_vertex_multiplicity_check(mixed_n2_r3());
    CHECK(mixed.matches_product_rule);
    CHECK_THROWS_AS(isolated_vertex_multiplicity_check(CubicalTensor::zero(3, 3)), OutOfContractError);
}
