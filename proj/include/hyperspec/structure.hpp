#pragma once

#include <vector>

#include "hyperspec/tensor.hpp"

namespace hyperspec {

/// Directed graph on 0..n-1 as sorted, duplicate-free out-neighbour lists.
struct Digraph {
    std::vector<std::vector<Index>> out;

    std::size_t order() const { return out.size(); }
    std::size_t arc_count() const;
    bool has_arc(Index from, Index to) const;
};

/// Arc k -> j iff some nonzero a_{k,i2..ir} has j among i2..ir.
Digraph digraph(const CubicalTensor& a);

/// Strongly connected components (Tarjan), each sorted, listed in order of
/// their smallest vertex.
std::vector<std::vector<Index>> strongly_connected_components(const Digraph& g);

/// The tensor's digraph is strongly connected.
bool is_weakly_irreducible(const CubicalTensor& a);

struct Component {
    std::vector<Index> vertices;
    CubicalTensor block;
};

struct ComponentDecomposition {
    std::vector<Component> parts;
    /// Single-vertex parts without a loop entry.
    std::vector<Index> isolated;
};

/// Splits a symmetric tensor into its weakly irreducible principal blocks.
/// Parts are ordered by smallest vertex. Throws NotSymmetricError otherwise.
ComponentDecomposition components(const CubicalTensor& a);

/// Inverse of components(): places each block back on its vertex set.
CubicalTensor assemble_blocks(int arity, int order, const std::vector<Component>& parts);

}  // namespace hyperspec
