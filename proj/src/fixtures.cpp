#include "hyperspec/fixtures.hpp"

#include <charconv>

#include "hyperspec/errors.hpp"
#include "hyperspec/hypergraph.hpp"

namespace hyperspec::fixtures {

namespace {

CubicalTensor matrix(const std::vector<std::vector<long>>& rows) {
    std::vector<TensorEntry> entries;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] != 0) entries.push_back({{static_cast<Index>(i), static_cast<Index>(j)}, Scalar(rows[i][j])});
    return CubicalTensor(2, static_cast<int>(rows.size()), std::move(entries));
}

}  // namespace

CubicalTensor h2() { return matrix({{1, 1}, {1, -1}}); }

CubicalTensor a1() {
    return matrix({{0, 1, 1, 1},
                   {1, 0, 1, 1},
                   {0, 0, 0, 1},
                   {0, 0, 1, 0}});
}

CubicalTensor a2() {
    return matrix({{0, 1, 0, 0},
                   {1, 0, 0, 0},
                   {0, 0, 0, 1},
                   {0, 0, 1, 0}});
}

CubicalTensor order6() {
    std::vector<TensorEntry> entries;
    for (Index k = 0; k < 6; ++k) entries.push_back({{k, (k + 1) % 6, (k + 2) % 6}, Scalar(1)});
    return CubicalTensor(3, 6, std::move(entries));
}

Instance by_name(const std::string& name) {
    if (name == "h2") return h2();
    if (name == "a1") return a1();
    if (name == "a2") return a2();
    if (name == "order6") return order6();
    if (name == "prop4-k1") return two_part_counterexample(1, 4, 4).graph;
    if (name == "prop5-k1") return three_part_counterexample(1, 6, 6, 4).graph;
    if (name.starts_with("edge-")) {
        const std::string digits = name.substr(5);
        int r = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
        if (ec == std::errc() && end == digits.data() + digits.size() && r >= 2) return single_edge(r, r);
    }
    throw ParseError("unknown fixture \"" + name + "\"");
}

std::vector<std::string> names() { return {"h2", "a1", "a2", "order6", "prop4-k1", "prop5-k1", "edge-<r>"}; }

}  // namespace hyperspec::fixtures
