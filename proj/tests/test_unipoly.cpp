#include "doctest.h"

#include <random>

#include "hyperspec/errors.hpp"
#include "hyperspec/unipoly.hpp"

using namespace hyperspec;

namespace {

UniPoly random_poly(std::mt19937& rng, int degree) {
    std::uniform_int_distribution<int> c(-5, 5);
    std::vector<Rational> coeffs;
    for (int i = 0; i <= degree; ++i) coeffs.emplace_back(c(rng), 1 + rng() % 3);
    for (auto& q : coeffs) q.canonicalize();
    if (sgn(coeffs.back()) == 0) coeffs.back() = 1;
    return UniPoly(coeffs);
}

}  // namespace

TEST_CASE("construction trims and reports degree") {
    CHECK(UniPoly({1, 2, 0, 0}).degree() == 1);
    CHECK(UniPoly().degree() == -1);
    CHECK(UniPoly({0}).is_zero());
    CHECK(UniPoly({-2, 0, 1}).to_string() == "x^2 - 2");
    CHECK(UniPoly({0, -1}).to_string() == "-x");
    CHECK(UniPoly().to_string() == "0");
}

TEST_CASE("arithmetic identities") {
    const UniPoly a({1, 1});   // x + 1
    const UniPoly b({-1, 1});  // x - 1
    CHECK(a * b == UniPoly({-1, 0, 1}));
    CHECK(a.pow(3) == UniPoly({1, 3, 3, 1}));
    CHECK(a - a == UniPoly());
    CHECK(a.reflected() == UniPoly({1, -1}));
    CHECK(UniPoly({5, 0, 3}).derivative() == UniPoly({0, 6}));
    CHECK(a(Rational(3)) == 4);
}

TEST_CASE("division and gcd") {
    const UniPoly p = UniPoly({-1, 1}).pow(2) * UniPoly({2, 1});
    const UniPoly q = UniPoly({-1, 1}) * UniPoly({3, 1});
    CHECK(gcd(p, q) == UniPoly({-1, 1}));
    CHECK(exact_quotient(p, UniPoly({2, 1})) == UniPoly({-1, 1}).pow(2));
    CHECK_THROWS_AS(exact_quotient(p, UniPoly({5, 1})), PreconditionError);
    CHECK_THROWS_AS(divmod(p, UniPoly()), PreconditionError);
    CHECK(gcd(UniPoly(), UniPoly()) == UniPoly());
}

TEST_CASE("property: divmod reconstructs the dividend") {
    std::mt19937 rng(61);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_poly(rng, t % 7);
        const auto b = random_poly(rng, 1 + t % 4);
        const auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("multiplicities and squarefree decomposition") {
    const UniPoly x = UniPoly::x();
    const UniPoly p = x.pow(3) * UniPoly({-2, 1}).pow(3) * UniPoly({4, 2, 1}).pow(3);
    CHECK(zero_root_multiplicity(p) == 3);
    CHECK(multiplicity_of_factor(p, UniPoly({-2, 1})) == 3);
    CHECK(squarefree_part(p) == x * UniPoly({-2, 1}) * UniPoly({4, 2, 1}));

    const UniPoly q = UniPoly({-3, 1}) * UniPoly({1, 1}).pow(3) * UniPoly({-5, 1}).pow(3);
    const auto parts = squarefree_decomposition(q);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::pair{UniPoly({-3, 1}), 1});
    CHECK(parts[1] == std::pair{UniPoly({1, 1}) * UniPoly({-5, 1}), 3});
}

TEST_CASE("property: squarefree decomposition multiplies back") {
    std::mt19937 rng(62);
    for (int t = 0; t < 40; ++t) {
        UniPoly p = UniPoly::constant(1);
        for (int f = 0; f < 3; ++f) p = p * random_poly(rng, 1 + t % 2).pow(1 + rng() % 3);
        UniPoly back = UniPoly::constant(1);
        for (const auto& [s, m] : squarefree_decomposition(p)) back = back * s.pow(static_cast<unsigned>(m));
        CHECK(back == p.monic());
    }
}

TEST_CASE("interpolation recovers polynomials exactly") {
    std::mt19937 rng(63);
    for (int t = 0; t < 30; ++t) {
        const auto p = random_poly(rng, t % 10);
        std::vector<Rational> nodes, values;
        for (int i = 0; i <= p.degree(); ++i) {
            const Rational node(i % 2 ? (i + 1) / 2 : -(i / 2));
            nodes.push_back(node);
            values.push_back(p(node));
        }
        CHECK(interpolate(nodes, values) == p);
    }
    CHECK_THROWS_AS(interpolate({Rational(1), Rational(1)}, {Rational(0), Rational(1)}), PreconditionError);
}
