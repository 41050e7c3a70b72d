#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hyperspec/errors.hpp"

namespace hyperspec {

bool OddTransversal::contains(Index v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

OddColoring make_odd_coloring(int r, const std::vector<long>& colors) {
    if (r < 2 || r % 2 != 0) throw OddArityError("odd-colorings need an even arity, got r = " + std::to_string(r));
    OddColoring c{r, {}};
    c.phi.reserve(colors.size());
    for (long v : colors) c.phi.push_back(static_cast<int>(((v % r) + r) % r));
    return c;
}

OddTransversal make_odd_transversal(std::vector<Index> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return OddTransversal{std::move(vertices)};
}

Hypergraph::Hypergraph(int uniformity, int order, std::vector<Edge> edges)
    : uniformity_(uniformity), order_(order), edges_(std::move(edges)) {
    if (uniformity < 2) throw DimensionError("edge size must be at least 2");
    if (order < 1) throw DimensionError("hypergraph order must be at least 1");
    for (auto& e : edges_) {
        if (e.size() != static_cast<std::size_t>(uniformity)) {
            throw DimensionError("edge with " + std::to_string(e.size()) + " vertices in a " +
                                 std::to_string(uniformity) + "-graph");
        }
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw DimensionError("edge with a repeated vertex");
        if (e.back() >= static_cast<Index>(order)) throw DimensionError("edge vertex out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::vector<std::size_t> Hypergraph::degrees() const {
    std::vector<std::size_t> deg(static_cast<std::size_t>(order_), 0);
    for (const auto& e : edges_)
        for (Index v : e) ++deg[v];
    return deg;
}

Hypergraph Hypergraph::with_edges(const std::vector<bool>& keep) const {
    if (keep.size() != edges_.size()) throw DimensionError("edge mask length differs from edge count");
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (keep[i]) kept.push_back(edges_[i]);
    return Hypergraph(uniformity_, order_, std::move(kept));
}

CubicalTensor adjacency_tensor(const Hypergraph& g) {
    std::vector<TensorEntry> entries;
    std::size_t perms = 1;
    for (int i = 2; i <= g.uniformity(); ++i) perms *= static_cast<std::size_t>(i);
    entries.reserve(perms * g.edge_count());
    for (const auto& e : g.edges()) {
        std::vector<Index> p = e;
        do {
            entries.push_back({p, Scalar(1)});
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return CubicalTensor(g.uniformity(), g.order(), std::move(entries));
}

bool is_connected(const Hypergraph& g) {
    std::vector<Index> parent(static_cast<std::size_t>(g.order()));
    std::iota(parent.begin(), parent.end(), Index{0});
    auto find = [&](Index v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::size_t classes = parent.size();
    for (const auto& e : g.edges()) {
        for (std::size_t j = 1; j < e.size(); ++j) {
            const Index a = find(e[0]), b = find(e[j]);
            if (a != b) {
                parent[a] = b;
                --classes;
            }
        }
    }
    return classes == 1;
}

namespace {

// Calls visit(subset) for every size-t subset of [lo, lo + size), ascending.
template <typename Visit>
void for_each_subset(Index lo, int size, int t, Visit&& visit) {
    std::vector<Index> pick(static_cast<std::size_t>(t));
    std::iota(pick.begin(), pick.end(), lo);
    if (t > size) return;
    if (t == 0) {
        visit(pick);
        return;
    }
    const Index hi = lo + static_cast<Index>(size);
    while (true) {
        visit(pick);
        int i = t - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == hi - static_cast<Index>(t - i)) --i;
        if (i < 0) return;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < t; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j) - 1] + 1;
    }
}

struct Part {
    Index lo;
    int size;
};

// All edges taking counts[p] vertices from part p.
void add_mixed_edges(std::vector<Edge>& out, const std::vector<Part>& parts, const std::vector<int>& counts) {
    std::vector<std::vector<std::vector<Index>>> choices(parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for_each_subset(parts[p].lo, parts[p].size, counts[p],
                        [&](const std::vector<Index>& s) { choices[p].push_back(s); });
        if (choices[p].empty()) return;
    }
    std::vector<std::size_t> pos(parts.size(), 0);
    while (true) {
        Edge e;
        for (std::size_t p = 0; p < parts.size(); ++p) e.insert(e.end(), choices[p][pos[p]].begin(), choices[p][pos[p]].end());
        out.push_back(std::move(e));
        std::size_t p = parts.size();
        while (p > 0) {
            --p;
            if (++pos[p] < choices[p].size()) break;
            pos[p] = 0;
            if (p == 0) return;
        }
    }
}

void require_positive_k(int k) {
    if (k < 1) throw PreconditionError("construction parameter k must be positive");
}

}  // namespace

GeneratedGraph two_part_counterexample(int k, int size_a, int size_b) {
    require_positive_k(k);
    if (size_a < 4 * k || size_b < 4 * k) {
        throw PreconditionError("both parts need at least 4k = " + std::to_string(4 * k) + " vertices");
    }
    const std::vector<Part> parts{{0, size_a}, {static_cast<Index>(size_a), size_b}};
    std::vector<Edge> edges;
    add_mixed_edges(edges, parts, {2 * k, 2 * k});
    std::vector<long> phi(static_cast<std::size_t>(size_a + size_b), 1);
    std::fill(phi.begin(), phi.begin() + size_a, 4L * k);
    return {Hypergraph(4 * k, size_a + size_b, std::move(edges)), make_odd_coloring(4 * k, phi),
            {0, static_cast<Index>(size_a), static_cast<Index>(size_a + size_b)}};
}

GeneratedGraph three_part_counterexample(int k, int size_a, int size_b, int size_c) {
    require_positive_k(k);
    if (size_a < 6 * k || size_b < 6 * k || size_c < 4 * k) {
        throw PreconditionError("part sizes must satisfy |A|, |B| >= 6k and |C| >= 4k");
    }
    const auto a0 = Index{0};
    const auto b0 = static_cast<Index>(size_a);
    const auto c0 = static_cast<Index>(size_a + size_b);
    const std::vector<Part> parts{{a0, size_a}, {b0, size_b}, {c0, size_c}};
    std::vector<Edge> edges;
    add_mixed_edges(edges, parts, {2 * k, 0, 2 * k});
    add_mixed_edges(edges, parts, {0, 2 * k, 2 * k});
    add_mixed_edges(edges, parts, {k, 3 * k, 0});
    add_mixed_edges(edges, parts, {3 * k, k, 0});
    const int n = size_a + size_b + size_c;
    std::vector<long> phi(static_cast<std::size_t>(n));
    std::fill(phi.begin(), phi.begin() + size_a, 1L);
    std::fill(phi.begin() + size_a, phi.begin() + size_a + size_b, 4L * k - 1);
    std::fill(phi.begin() + size_a + size_b, phi.end(), 4L * k);
    return {Hypergraph(4 * k, n, std::move(edges)), make_odd_coloring(4 * k, phi),
            {a0, b0, c0, static_cast<Index>(n)}};
}

Hypergraph single_edge(int r, int n) {
    if (n < r) throw PreconditionError("a single r-edge needs at least r vertices");
    Edge e(static_cast<std::size_t>(r));
    std::iota(e.begin(), e.end(), Index{0});
    return Hypergraph(r, n, {e});
}

Hypergraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Index i = 0; i < static_cast<Index>(n); ++i)
        for (Index j = i + 1; j < static_cast<Index>(n); ++j) edges.push_back({i, j});
    return Hypergraph(2, n, std::move(edges));
}

bool is_weak_coloring(const Hypergraph& g, const std::vector<int>& coloring) {
    if (coloring.size() != static_cast<std::size_t>(g.order())) return false;
    for (const auto& e : g.edges()) {
        const bool mono = std::all_of(e.begin(), e.end(), [&](Index v) { return coloring[v] == coloring[e[0]]; });
        if (mono) return false;
    }
    return true;
}

namespace {

class WeakColoringSearch {
public:
    WeakColoringSearch(const Hypergraph& g, int classes, std::uint64_t& nodes, std::uint64_t budget)
        : g_(g), classes_(classes), nodes_(nodes), budget_(budget) {
        const auto deg = g.degrees();
        order_.resize(static_cast<std::size_t>(g.order()));
        std::iota(order_.begin(), order_.end(), Index{0});
        std::stable_sort(order_.begin(), order_.end(), [&](Index a, Index b) { return deg[a] > deg[b]; });
        incident_.resize(order_.size());
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            for (Index v : g.edges()[e]) incident_[v].push_back(e);
        counts_.assign(g.edge_count() * static_cast<std::size_t>(classes), 0);
        color_.assign(order_.size(), -1);
    }

    bool run() { return place(0, 0); }
    const std::vector<int>& coloring() const { return color_; }

private:
    bool place(std::size_t depth, int used) {
        if (depth == order_.size()) return true;
        if (++nodes_ > budget_) throw SearchBudgetExceeded("chromatic search exceeded its node budget");
        const Index v = order_[depth];
        // New classes are opened in order, so class labels are canonical.
        const int limit = std::min(classes_ - 1, used);
        for (int c = 0; c <= limit; ++c) {
            if (assign(v, c) && place(depth + 1, std::max(used, c + 1))) return true;
            unassign(v, c);
        }
        return false;
    }

    // Returns false if some edge became monochromatic; counts are updated
    // either way so unassign() is always the inverse.
    bool assign(Index v, int c) {
        color_[v] = c;
        bool ok = true;
        for (std::size_t e : incident_[v]) {
            if (++counts_[e * static_cast<std::size_t>(classes_) + static_cast<std::size_t>(c)] ==
                g_.uniformity()) {
                ok = false;
            }
        }
        return ok;
    }

    void unassign(Index v, int c) {
        color_[v] = -1;
        for (std::size_t e : incident_[v]) --counts_[e * static_cast<std::size_t>(classes_) + static_cast<std::size_t>(c)];
    }

    const Hypergraph& g_;
    int classes_;
    std::uint64_t& nodes_;
    std::uint64_t budget_;
    std::vector<Index> order_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<int> counts_;
    std::vector<int> color_;
};

}  // namespace

ChromaticResult chromatic_number(const Hypergraph& g, int max_k, std::uint64_t node_budget) {
    if (max_k < 1) throw PreconditionError("max_k must be at least 1");
    ChromaticResult result;
    for (int k = 1; k <= max_k; ++k) {
        WeakColoringSearch search(g, k, result.nodes, node_budget);
        if (search.run()) {
            result.chromatic_number = k;
            result.coloring = search.coloring();
            return result;
        }
    }
    return result;
}

}  // namespace hyperspec
