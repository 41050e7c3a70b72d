#pragma once

#include <vector>

#include "hyperspec/tensor.hpp"

namespace hyperspec {

/// phi : vertices -> Z_r with r even. Residues are stored in 0..r-1; a color
/// written as r (as in the {1..r} convention) is the same class as 0.
struct OddColoring {
    int r = 2;
    std::vector<int> phi;

    friend bool operator==(const OddColoring&, const OddColoring&) = default;
};

/// Vertex set meeting every support tuple an odd number of times. Sorted.
struct OddTransversal {
    std::vector<Index> vertices;

    bool contains(Index v) const;
    friend bool operator==(const OddTransversal&, const OddTransversal&) = default;
};

/// Reduces every color mod r. Throws OddArityError for odd r.
OddColoring make_odd_coloring(int r, const std::vector<long>& colors);

/// Sorts and deduplicates.
OddTransversal make_odd_transversal(std::vector<Index> vertices);

}  // namespace hyperspec
