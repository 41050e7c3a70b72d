#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperspec/certificate.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

using Edge = std::vector<Index>;

/// r-uniform hypergraph on vertices 0..n-1. Edges are sorted vertex lists;
/// the edge list is sorted and duplicate-free.
class Hypergraph {
public:
    Hypergraph(int uniformity, int order, std::vector<Edge> edges = {});

    int uniformity() const { return uniformity_; }
    int order() const { return order_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Vertex degrees (number of incident edges).
    std::vector<std::size_t> degrees() const;

    /// Same vertex set, edges restricted to those with keep[e] true.
    Hypergraph with_edges(const std::vector<bool>& keep) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int uniformity_;
    int order_;
    std::vector<Edge> edges_;
};

/// Symmetric 0/1 tensor with all r! permutations of every edge set to 1.
CubicalTensor adjacency_tensor(const Hypergraph& g);

/// Connectivity of the 2-section.
bool is_connected(const Hypergraph& g);

struct GeneratedGraph {
    Hypergraph graph;
    /// The coloring used in the construction.
    OddColoring witness;
    /// Part boundaries: part p is [part_begin[p], part_begin[p + 1]).
    std::vector<Index> part_begin;
};

/// 4k-graph on |A| + |B| vertices, A = first sizeA vertices, whose edges are
/// the 4k-sets meeting both A and B in exactly 2k vertices. Odd-colorable
/// (phi = 0 on A, 1 on B) without an odd transversal. Needs sizeA, sizeB >= 4k.
GeneratedGraph two_part_counterexample(int k, int size_a, int size_b);

/// 4k-graph on parts A, B, C with edges E1 (2k in A, 2k in C), E2 (2k in B,
/// 2k in C), E3 (k in A, 3k in B), E4 (3k in A, k in B). Odd-colorable with
/// phi = 1 on A, 4k-1 on B, 0 on C and 3-chromatic. Needs sizeA, sizeB >= 6k
/// and sizeC >= 4k.
GeneratedGraph three_part_counterexample(int k, int size_a, int size_b, int size_c);

/// Single r-edge {0..r-1} on n >= r vertices.
Hypergraph single_edge(int r, int n);

/// Complete 2-graph K_n.
Hypergraph complete_graph(int n);

struct ChromaticResult {
    /// Smallest k admitting a weak coloring, or empty if it exceeds max_k.
    std::optional<int> chromatic_number;
    /// Class 0..k-1 per vertex for the optimal k; empty when not found.
    std::vector<int> coloring;
    /// Search nodes visited across all k.
    std::uint64_t nodes = 0;
};

/// Exact chromatic number by backtracking over vertices in degree-descending
/// order with class-symmetry breaking. Intended for n <= 24. Throws
/// SearchBudgetExceeded once `node_budget` nodes have been visited.
ChromaticResult chromatic_number(const Hypergraph& g, int max_k, std::uint64_t node_budget = 200'000'000);

/// Every edge meets at least two classes.
bool is_weak_coloring(const Hypergraph& g, const std::vector<int>& coloring);

}  // namespace hyperspec
