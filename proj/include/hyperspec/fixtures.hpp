#pragma once

#include <string>
#include <vector>

#include "hyperspec/json_io.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec::fixtures {

/// [[1, 1], [1, -1]].
CubicalTensor h2();
/// Digraph matrix with spectrum {1, 1, -1, -1} that is not bipartite.
CubicalTensor a1();
/// Two disjoint K2 blocks; bipartite and cospectral with a1().
CubicalTensor a2();
/// Non-symmetric 3-tensor of order 6 with a_{k,k+1,k+2} = 1 (indices mod 6).
CubicalTensor order6();

/// Looks a fixture up by name: h2, a1, a2, order6, prop4-k1, prop5-k1 or
/// edge-<r> for the single r-edge on r vertices. Unknown names throw
/// ParseError.
Instance by_name(const std::string& name);

std::vector<std::string> names();

}  // namespace hyperspec::fixtures
