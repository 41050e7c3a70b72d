#include "hyperspec/structure.hpp"

#include <algorithm>
#include <numeric>

#include "hyperspec/errors.hpp"

namespace hyperspec {

std::size_t Digraph::arc_count() const {
    std::size_t total = 0;
    for (const auto& row : out) total += row.size();
    return total;
}

bool Digraph::has_arc(Index from, Index to) const {
    const auto& row = out.at(from);
    return std::binary_search(row.begin(), row.end(), to);
}

Digraph digraph(const CubicalTensor& a) {
    Digraph g;
    g.out.resize(static_cast<std::size_t>(a.order()));
    for (std::size_t e = 0; e < a.size(); ++e) {
        const auto idx = a.index(e);
        auto& row = g.out[idx[0]];
        row.insert(row.end(), idx.begin() + 1, idx.end());
    }
    for (auto& row : g.out) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return g;
}

std::vector<std::vector<Index>> strongly_connected_components(const Digraph& g) {
    const std::size_t n = g.order();
    constexpr std::size_t unvisited = ~std::size_t{0};
    std::vector<std::size_t> number(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Index> stack;
    std::vector<std::vector<Index>> sccs;
    std::size_t counter = 0;

    struct Frame {
        Index v;
        std::size_t next;
    };
    std::vector<Frame> call;
    for (Index root = 0; root < n; ++root) {
        if (number[root] != unvisited) continue;
        call.push_back({root, 0});
        number[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& succ = g.out[f.v];
            if (f.next < succ.size()) {
                const Index w = succ[f.next++];
                if (number[w] == unvisited) {
                    number[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], number[w]);
                }
                continue;
            }
            const Index v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == number[v]) {
                std::vector<Index> scc;
                Index w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    scc.push_back(w);
                } while (w != v);
                std::sort(scc.begin(), scc.end());
                sccs.push_back(std::move(scc));
            }
        }
    }
    std::sort(sccs.begin(), sccs.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return sccs;
}

bool is_weakly_irreducible(const CubicalTensor& a) {
    return strongly_connected_components(digraph(a)).size() == 1;
}

ComponentDecomposition components(const CubicalTensor& a) {
    if (!is_symmetric(a)) throw NotSymmetricError("components are defined for symmetric tensors only");
    // For symmetric tensors every arc is bidirected, so SCCs are the
    // connected components of the undirected digraph.
    const Digraph g = digraph(a);
    ComponentDecomposition out;
    for (auto& vertices : strongly_connected_components(g)) {
        if (vertices.size() == 1 && !g.has_arc(vertices[0], vertices[0])) out.isolated.push_back(vertices[0]);
        CubicalTensor block = principal_submatrix(a, vertices);
        out.parts.push_back({std::move(vertices), std::move(block)});
    }
    return out;
}

CubicalTensor assemble_blocks(int arity, int order, const std::vector<Component>& parts) {
    std::vector<TensorEntry> all;
    for (const auto& part : parts) {
        for (auto& e : part.block.entries()) {
            for (auto& i : e.index) i = part.vertices.at(i);
            all.push_back(std::move(e));
        }
    }
    return CubicalTensor(arity, order, std::move(all));
}

}  // namespace hyperspec
