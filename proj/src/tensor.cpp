#include "hyperspec/tensor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "hyperspec/errors.hpp"

namespace hyperspec {

CubicalTensor::CubicalTensor(int arity, int order, std::vector<TensorEntry> entries)
    : arity_(arity), order_(order) {
    if (arity < 2) throw DimensionError("tensor arity must be at least 2, got " + std::to_string(arity));
    if (order < 1) throw DimensionError("tensor order must be at least 1, got " + std::to_string(order));
    for (const auto& e : entries) {
        if (e.index.size() != static_cast<std::size_t>(arity)) {
            throw DimensionError("index tuple of length " + std::to_string(e.index.size()) +
                                 " in a tensor with arity " + std::to_string(arity));
        }
        for (Index i : e.index) {
            if (i >= static_cast<Index>(order)) {
                throw DimensionError("index " + std::to_string(i) + " out of range for order " +
                                     std::to_string(order));
            }
        }
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const TensorEntry& a, const TensorEntry& b) { return a.index < b.index; });

    row_start_.assign(static_cast<std::size_t>(order) + 1, 0);
    for (std::size_t lo = 0; lo < entries.size();) {
        std::size_t hi = lo + 1;
        Scalar sum = entries[lo].value;
        while (hi < entries.size() && entries[hi].index == entries[lo].index) sum += entries[hi++].value;
        if (!sum.is_zero()) {
            indices_.insert(indices_.end(), entries[lo].index.begin(), entries[lo].index.end());
            exact_ = exact_ && sum.is_exact();
            real_ = real_ && sum.is_real();
            numeric_.push_back(sum.to_complex());
            values_.push_back(std::move(sum));
            ++row_start_[entries[lo].index[0] + 1];
        }
        lo = hi;
    }
    std::partial_sum(row_start_.begin(), row_start_.end(), row_start_.begin());
}

Scalar CubicalTensor::at(std::span<const Index> idx) const {
    if (idx.size() != static_cast<std::size_t>(arity_)) throw DimensionError("index tuple has wrong length");
    if (idx[0] >= static_cast<Index>(order_)) return Scalar(0);
    std::size_t lo = row_start_[idx[0]];
    std::size_t hi = row_start_[idx[0] + 1];
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const auto key = index(mid);
        const auto cmp = std::lexicographical_compare_three_way(key.begin(), key.end(), idx.begin(), idx.end());
        if (cmp == 0) return values_[mid];
        if (cmp < 0) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return Scalar(0);
}

bool CubicalTensor::is_nonnegative() const {
    if (!real_) return false;
    return std::all_of(values_.begin(), values_.end(), [](const Scalar& v) { return v.real_sign() >= 0; });
}

std::vector<TensorEntry> CubicalTensor::entries() const {
    std::vector<TensorEntry> out;
    out.reserve(size());
    for (std::size_t e = 0; e < size(); ++e) {
        const auto idx = index(e);
        out.push_back({std::vector<Index>(idx.begin(), idx.end()), values_[e]});
    }
    return out;
}

CubicalTensor CubicalTensor::operator-() const {
    auto list = entries();
    for (auto& e : list) e.value = -e.value;
    return CubicalTensor(arity_, order_, std::move(list));
}

bool operator==(const CubicalTensor& a, const CubicalTensor& b) {
    return a.arity_ == b.arity_ && a.order_ == b.order_ && a.indices_ == b.indices_ && a.values_ == b.values_;
}

namespace {

std::uint64_t distinct_permutations(const std::vector<Index>& sorted) {
    // r! / prod(mult!) computed incrementally to stay exact for r <= 20.
    std::uint64_t count = 1;
    std::uint64_t placed = 0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        for (std::uint64_t m = 1; m <= j - i; ++m) {
            ++placed;
            count = count * placed / m;
        }
        i = j;
    }
    return count;
}

}  // namespace

bool is_symmetric(const CubicalTensor& a) {
    struct Orbit {
        std::uint64_t seen = 0;
        std::size_t first_entry = 0;
    };
    std::map<std::vector<Index>, Orbit> orbits;
    for (std::size_t e = 0; e < a.size(); ++e) {
        const auto idx = a.index(e);
        std::vector<Index> key(idx.begin(), idx.end());
        std::sort(key.begin(), key.end());
        auto [it, inserted] = orbits.try_emplace(std::move(key), Orbit{0, e});
        if (!inserted && !(a.value(it->second.first_entry) == a.value(e))) return false;
        ++it->second.seen;
    }
    for (const auto& [key, orbit] : orbits) {
        if (orbit.seen != distinct_permutations(key)) return false;
    }
    return true;
}

CubicalTensor principal_submatrix(const CubicalTensor& a, std::span<const Index> vertices) {
    constexpr Index absent = ~Index{0};
    std::vector<Index> relabel(static_cast<std::size_t>(a.order()), absent);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= static_cast<Index>(a.order())) throw DimensionError("vertex out of range");
        if (relabel[vertices[i]] != absent) throw DimensionError("repeated vertex in principal submatrix");
        relabel[vertices[i]] = static_cast<Index>(i);
    }
    std::vector<TensorEntry> kept;
    for (std::size_t e = 0; e < a.size(); ++e) {
        const auto idx = a.index(e);
        TensorEntry t{{}, a.value(e)};
        bool inside = true;
        for (Index i : idx) {
            if (relabel[i] == absent) {
                inside = false;
                break;
            }
            t.index.push_back(relabel[i]);
        }
        if (inside) kept.push_back(std::move(t));
    }
    return CubicalTensor(a.arity(), static_cast<int>(vertices.size()), std::move(kept));
}

CubicalTensor diagonal_similarity(const CubicalTensor& a, std::span<const Scalar> z) {
    if (z.size() != static_cast<std::size_t>(a.order())) {
        throw DimensionError("scaling vector length differs from tensor order");
    }
    std::vector<Scalar> lead(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (z[k].is_zero()) throw PreconditionError("diagonal similarity needs nonzero scaling, z[" +
                                                    std::to_string(k) + "] = 0");
        // z_k^{1-r}
        Scalar p(1);
        for (int j = 1; j < a.arity(); ++j) p = p * z[k];
        lead[k] = Scalar(1) / p;
    }
    std::vector<TensorEntry> out;
    out.reserve(a.size());
    for (std::size_t e = 0; e < a.size(); ++e) {
        const auto idx = a.index(e);
        Scalar v = a.value(e) * lead[idx[0]];
        for (std::size_t j = 1; j < idx.size(); ++j) v = v * z[idx[j]];
        out.push_back({std::vector<Index>(idx.begin(), idx.end()), std::move(v)});
    }
    return CubicalTensor(a.arity(), a.order(), std::move(out));
}

std::optional<Bipartition> bipartition_2matrix(const CubicalTensor& a) {
    if (a.arity() != 2) throw DimensionError("bipartiteness is defined here for 2-matrices only");
    const auto n = static_cast<std::size_t>(a.order());
    std::vector<std::vector<Index>> adj(n);
    for (std::size_t e = 0; e < a.size(); ++e) {
        const auto idx = a.index(e);
        if (idx[0] == idx[1]) return std::nullopt;
        adj[idx[0]].push_back(idx[1]);
        adj[idx[1]].push_back(idx[0]);
    }
    std::vector<int> side(n, -1);
    for (Index s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<Index> q;
        q.push(s);
        while (!q.empty()) {
            const Index u = q.front();
            q.pop();
            for (Index v : adj[u]) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    q.push(v);
                } else if (side[v] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition part;
    for (Index v = 0; v < n; ++v) (side[v] == 0 ? part.first : part.second).push_back(v);
    return part;
}

}  // namespace hyperspec
