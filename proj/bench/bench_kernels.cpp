// Serial reference vs OpenMP kernels: tensor application and resultant node
// evaluation. Prints one line per kernel with both timings and whether the
// outputs agree exactly.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <tuple>

#include <omp.h>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/kernels.hpp"
#include "hyperspec/reference.hpp"
#include "hyperspec/resultant.hpp"

using namespace hyperspec;

namespace {

template <typename F>
double seconds(F&& f, int repeats) {
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / repeats;
}

Hypergraph random_graph(int r, int n, int edges, std::mt19937& rng) {
    std::vector<Edge> list;
    std::vector<Index> vertices(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vertices[static_cast<std::size_t>(i)] = static_cast<Index>(i);
    for (int e = 0; e < edges; ++e) {
        std::shuffle(vertices.begin(), vertices.end(), rng);
        Edge edge(vertices.begin(), vertices.begin() + r);
        std::sort(edge.begin(), edge.end());
        list.push_back(std::move(edge));
    }
    return Hypergraph(r, n, std::move(list));
}

CubicalTensor random_tensor(int r, int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> value(-3, 3);
    std::uniform_int_distribution<int> vertex(0, n - 1);
    std::vector<TensorEntry> entries;
    for (int e = 0; e < 4 * n; ++e) {
        TensorEntry t;
        for (int j = 0; j < r; ++j) t.index.push_back(static_cast<Index>(vertex(rng)));
        t.value = Scalar(static_cast<long>(value(rng)));
        entries.push_back(std::move(t));
    }
    return CubicalTensor(r, n, std::move(entries));
}

}  // namespace

int main() {
    std::mt19937 rng(20240611);
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-34s %12s %12s %8s %s\n", "kernel", "serial [ms]", "openmp [ms]", "speedup", "identical");

    for (const auto& [r, n, edges] : {std::tuple{4, 40, 2000}, std::tuple{5, 30, 1000}}) {
        const auto a = adjacency_tensor(random_graph(r, n, edges, rng));
        std::vector<std::complex<double>> x(static_cast<std::size_t>(n));
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (auto& v : x) v = {u(rng), u(rng)};
        ComplexVector serial, parallel;
        const double ts = seconds([&] { serial = reference::apply(a, x); }, 20);
        const double tp = seconds([&] { parallel = hyperspec::apply(a, x); }, 20);
        char label[64];
        std::snprintf(label, sizeof label, "apply r=%d n=%d (%zu entries)", r, n, a.size());
        std::printf("%-34s %12.3f %12.3f %8.2f %s\n", label, ts * 1e3, tp * 1e3, ts / tp,
                    serial == parallel ? "yes" : "NO");
    }

    for (const auto& [r, n] : {std::tuple{4, 3}, std::tuple{5, 3}}) {
        const auto sys = resultant_system(random_tensor(r, n, rng));
        std::vector<Rational> nodes;
        for (std::size_t t = 0; t < 16; ++t) nodes.push_back(interpolation_node(t));
        std::vector<std::optional<Rational>> serial, parallel;
        const double ts = seconds([&] { serial = reference::evaluate_nodes(sys, nodes); }, 1);
        const double tp = seconds([&] { parallel = evaluate_nodes(sys, nodes); }, 1);
        char label[64];
        std::snprintf(label, sizeof label, "resultant nodes r=%d n=%d (16x%zu^2)", r, n, sys.base.size());
        std::printf("%-34s %12.3f %12.3f %8.2f %s\n", label, ts * 1e3, tp * 1e3, ts / tp,
                    serial == parallel ? "yes" : "NO");
    }
    return 0;
}
