#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hyperspec/scalar.hpp"

namespace hyperspec {

/// Vertex index, 0-based. File formats use 1-based indices.
using Index = std::uint32_t;
using ComplexVector = std::vector<std::complex<double>>;

struct TensorEntry {
    std::vector<Index> index;
    Scalar value;
};

/// Cubical r-tensor of order n in sparse coordinate form.
///
/// Entries are kept sorted lexicographically by index tuple. Duplicate tuples
/// are summed and exact zeros dropped when the tensor is built, so two tensors
/// compare equal iff they have the same nonzero entries. Immutable after
/// construction.
class CubicalTensor {
public:
    CubicalTensor(int arity, int order, std::vector<TensorEntry> entries = {});

    static CubicalTensor zero(int arity, int order) { return CubicalTensor(arity, order); }

    /// Number of indices r.
    int arity() const { return arity_; }
    /// Number of rows n.
    int order() const { return order_; }
    std::size_t size() const { return values_.size(); }

    std::span<const Index> index(std::size_t e) const {
        return {indices_.data() + e * static_cast<std::size_t>(arity_), static_cast<std::size_t>(arity_)};
    }
    const Scalar& value(std::size_t e) const { return values_[e]; }
    std::complex<double> numeric(std::size_t e) const { return numeric_[e]; }

    std::span<const Index> flat_indices() const { return indices_; }
    std::span<const std::complex<double>> numeric_values() const { return numeric_; }

    /// Entries [row_begin(k), row_begin(k + 1)) have first index k.
    std::size_t row_begin(Index k) const { return row_start_[k]; }

    /// Entry lookup by binary search; absent tuples read as zero.
    Scalar at(std::span<const Index> idx) const;

    bool is_exact() const { return exact_; }
    bool is_real() const { return real_; }
    bool is_nonnegative() const;
    bool is_zero() const { return values_.empty(); }

    std::vector<TensorEntry> entries() const;

    CubicalTensor operator-() const;

    friend bool operator==(const CubicalTensor& a, const CubicalTensor& b);

private:
    int arity_;
    int order_;
    std::vector<Index> indices_;
    std::vector<Scalar> values_;
    std::vector<std::complex<double>> numeric_;
    std::vector<std::size_t> row_start_;
    bool exact_ = true;
    bool real_ = true;
};

/// True iff every entry equals the entry at each permutation of its indices.
bool is_symmetric(const CubicalTensor& a);

/// A[X]: the tensor on the listed vertices, reindexed 0..|X|-1 in list order.
CubicalTensor principal_submatrix(const CubicalTensor& a, std::span<const Index> vertices);

/// B with b_{j1..jr} = z_{j1}^{-r} a_{j1..jr} z_{j1} ... z_{jr}.
/// Exact whenever both the tensor and z are exact.
CubicalTensor diagonal_similarity(const CubicalTensor& a, std::span<const Scalar> z);

struct Bipartition {
    std::vector<Index> first;
    std::vector<Index> second;
};

/// For r = 2: a partition with A[U,U] = 0 and A[W,W] = 0, if one exists.
std::optional<Bipartition> bipartition_2matrix(const CubicalTensor& a);

}  // namespace hyperspec
