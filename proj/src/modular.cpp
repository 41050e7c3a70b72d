#include "hyperspec/modular.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "hyperspec/errors.hpp"

namespace hyperspec {

namespace {

Residue reduce(Residue a, Residue m) {
    a %= m;
    return a < 0 ? a + m : a;
}

// p-adic valuation of a nonzero residue modulo p^e, capped at e.
int valuation(Residue a, Residue p, int e) {
    int v = 0;
    while (v < e && a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

Residue power(Residue base, int exp) {
    Residue out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// combo_target -= factor * combo_source (mod q), keeping rows sorted.
void subtract_scaled(RowCombination& target, const RowCombination& source, Residue factor, Residue q) {
    RowCombination merged;
    merged.reserve(target.size() + source.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < source.size()) {
        if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
            merged.push_back(target[i++]);
        } else if (i == target.size() || source[j].first < target[i].first) {
            const Residue c = reduce(-factor * source[j].second, q);
            if (c != 0) merged.emplace_back(source[j].first, c);
            ++j;
        } else {
            const Residue c = reduce(target[i].second - factor * source[j].second, q);
            if (c != 0) merged.emplace_back(target[i].first, c);
            ++i;
            ++j;
        }
    }
    target = std::move(merged);
}

struct LocalResult {
    std::optional<std::vector<Residue>> solution;
    RowCombination witness;
};

LocalResult solve_prime_power(const std::vector<std::vector<Residue>>& rows, const std::vector<Residue>& rhs,
                              std::size_t columns, Residue p, int e) {
    const Residue q = power(p, e);
    const std::size_t m = rows.size();
    std::vector<std::vector<Residue>> a(m, std::vector<Residue>(columns));
    std::vector<Residue> b(m);
    std::vector<RowCombination> combo(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < columns; ++j) a[i][j] = reduce(rows[i][j], q);
        b[i] = reduce(rhs[i], q);
        combo[i] = {{i, 1}};
    }
    std::vector<std::size_t> col(columns);
    std::iota(col.begin(), col.end(), std::size_t{0});
    std::vector<int> pivot_val;

    std::size_t rank = 0;
    while (rank < std::min(m, columns)) {
        int best = e;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = rank; i < m && best > 0; ++i) {
            for (std::size_t j = rank; j < columns; ++j) {
                const Residue x = a[i][col[j]];
                if (x == 0) continue;
                const int v = valuation(x, p, e);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        }
        if (best == e) break;
        std::swap(a[rank], a[bi]);
        std::swap(b[rank], b[bi]);
        std::swap(combo[rank], combo[bi]);
        std::swap(col[rank], col[bj]);
        const std::size_t c = col[rank];
        const Residue scale = power(p, best);
        const Residue unit_inv = inverse_mod(a[rank][c] / scale, q);
        for (std::size_t i = rank + 1; i < m; ++i) {
            if (a[i][c] == 0) continue;
            const Residue f = reduce((a[i][c] / scale) * unit_inv, q);
            for (std::size_t j = rank; j < columns; ++j) {
                const std::size_t cj = col[j];
                a[i][cj] = reduce(a[i][cj] - f * a[rank][cj], q);
            }
            b[i] = reduce(b[i] - f * b[rank], q);
            subtract_scaled(combo[i], combo[rank], f, q);
        }
        pivot_val.push_back(best);
        ++rank;
    }

    LocalResult out;
    for (std::size_t i = rank; i < m; ++i) {
        if (b[i] != 0) {
            out.witness = combo[i];
            return out;
        }
    }
    for (std::size_t i = 0; i < rank; ++i) {
        if (b[i] % power(p, pivot_val[i]) != 0) {
            // p^(e-v) kills the left side, whose entries all have valuation >= v.
            const Residue lift = power(p, e - pivot_val[i]);
            for (auto [row, coeff] : combo[i]) {
                const Residue c = reduce(coeff * lift, q);
                if (c != 0) out.witness.emplace_back(row, c);
            }
            return out;
        }
    }
    std::vector<Residue> x(columns, 0);
    for (std::size_t i = rank; i-- > 0;) {
        Residue t = b[i];
        for (std::size_t j = i + 1; j < columns; ++j) t = reduce(t - a[i][col[j]] * x[col[j]], q);
        const Residue scale = power(p, pivot_val[i]);
        x[col[i]] = reduce((t / scale) * inverse_mod(a[i][col[i]] / scale, q), q);
    }
    out.solution = std::move(x);
    return out;
}

}  // namespace

std::vector<std::pair<Residue, int>> factorize(Residue m) {
    if (m < 1) throw PreconditionError("factorize needs a positive integer");
    std::vector<std::pair<Residue, int>> out;
    for (Residue p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

Residue inverse_mod(Residue a, Residue m) {
    Residue old_r = reduce(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        const Residue qt = old_r / r;
        old_r = std::exchange(r, old_r - qt * r);
        old_s = std::exchange(s, old_s - qt * s);
    }
    if (old_r != 1) throw PreconditionError("no inverse of " + std::to_string(a) + " modulo " + std::to_string(m));
    return reduce(old_s, m);
}

ModularSolution solve_mod(const std::vector<std::vector<Residue>>& rows, const std::vector<Residue>& rhs,
                          std::size_t columns, Residue modulus) {
    if (modulus < 2 || modulus >= (Residue{1} << 31)) throw PreconditionError("modulus out of range");
    if (rows.size() != rhs.size()) throw DimensionError("row count differs from right-hand side length");
    for (const auto& row : rows)
        if (row.size() != columns) throw DimensionError("ragged coefficient matrix");

    std::vector<Residue> x(columns, 0);
    Residue combined = 1;
    for (auto [p, e] : factorize(modulus)) {
        const Residue q = power(p, e);
        LocalResult local = solve_prime_power(rows, rhs, columns, p, e);
        if (!local.solution) {
            ModularInfeasibility proof{modulus, q, {}};
            const Residue lift = modulus / q;
            for (auto [row, coeff] : local.witness) proof.combination.emplace_back(row, reduce(coeff * lift, modulus));
            return {std::nullopt, std::move(proof)};
        }
        // CRT: x := x + combined * t with t = (x_local - x) / combined mod q.
        const Residue inv = inverse_mod(combined % q, q);
        for (std::size_t j = 0; j < columns; ++j) {
            const Residue t = reduce(((*local.solution)[j] - x[j]) % q * inv, q);
            x[j] += combined * t;
        }
        combined *= q;
    }
    return {std::move(x), std::nullopt};
}

bool certifies_infeasibility(const std::vector<std::vector<Residue>>& rows, const std::vector<Residue>& rhs,
                             Residue modulus, const ModularInfeasibility& proof) {
    if (proof.combination.empty() || rows.empty()) return false;
    std::vector<Residue> left(rows.front().size(), 0);
    Residue right = 0;
    for (auto [row, coeff] : proof.combination) {
        if (row >= rows.size()) return false;
        for (std::size_t j = 0; j < left.size(); ++j) left[j] = reduce(left[j] + coeff * reduce(rows[row][j], modulus), modulus);
        right = reduce(right + coeff * reduce(rhs[row], modulus), modulus);
    }
    return std::all_of(left.begin(), left.end(), [](Residue v) { return v == 0; }) && right != 0;
}

namespace {

using Word = std::uint64_t;
constexpr std::size_t kWordBits = 64;

struct PackedRow {
    std::vector<Word> bits;
    bool rhs = false;
    std::vector<std::size_t> combo;  // sorted original row indices

    bool test(std::size_t c) const { return (bits[c / kWordBits] >> (c % kWordBits)) & 1U; }
    void flip(std::size_t c) { bits[c / kWordBits] ^= Word{1} << (c % kWordBits); }

    std::optional<std::size_t> lowest() const {
        for (std::size_t w = 0; w < bits.size(); ++w)
            if (bits[w] != 0) return w * kWordBits + static_cast<std::size_t>(__builtin_ctzll(bits[w]));
        return std::nullopt;
    }

    void add(const PackedRow& other) {
        for (std::size_t w = 0; w < bits.size(); ++w) bits[w] ^= other.bits[w];
        rhs = rhs != other.rhs;
        std::vector<std::size_t> merged;
        std::set_symmetric_difference(combo.begin(), combo.end(), other.combo.begin(), other.combo.end(),
                                      std::back_inserter(merged));
        combo = std::move(merged);
    }
};

}  // namespace

Gf2Solution solve_gf2(const std::vector<std::vector<std::size_t>>& rows, const std::vector<bool>& rhs,
                      std::size_t columns) {
    if (rows.size() != rhs.size()) throw DimensionError("row count differs from right-hand side length");
    const std::size_t words = (columns + kWordBits - 1) / kWordBits;
    std::vector<PackedRow> basis;
    std::vector<std::size_t> pivot_col;

    for (std::size_t i = 0; i < rows.size(); ++i) {
        PackedRow row{std::vector<Word>(words, 0), rhs[i], {i}};
        for (std::size_t c : rows[i]) {
            if (c >= columns) throw DimensionError("GF(2) column out of range");
            row.flip(c);
        }
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (row.test(pivot_col[b])) row.add(basis[b]);
        if (auto lead = row.lowest()) {
            pivot_col.push_back(*lead);
            basis.push_back(std::move(row));
        } else if (row.rhs) {
            return {std::nullopt, Gf2Infeasibility{std::move(row.combo)}};
        }
    }

    // Each basis row is clear at earlier pivots, so assign pivots last-first.
    std::vector<bool> x(columns, false);
    for (std::size_t b = basis.size(); b-- > 0;) {
        bool v = basis[b].rhs;
        for (std::size_t w = 0; w < words; ++w) {
            Word bits = basis[b].bits[w];
            while (bits != 0) {
                const std::size_t c = w * kWordBits + static_cast<std::size_t>(__builtin_ctzll(bits));
                bits &= bits - 1;
                if (c != pivot_col[b] && x[c]) v = !v;
            }
        }
        x[pivot_col[b]] = v;
    }
    return {std::move(x), std::nullopt};
}

bool certifies_infeasibility(const std::vector<std::vector<std::size_t>>& rows, const std::vector<bool>& rhs,
                             const Gf2Infeasibility& proof) {
    if (proof.rows.empty()) return false;
    std::vector<bool> left;
    bool right = false;
    for (std::size_t r : proof.rows) {
        if (r >= rows.size()) return false;
        for (std::size_t c : rows[r]) {
            if (c >= left.size()) left.resize(c + 1, false);
            left[c] = !left[c];
        }
        right = right != rhs[r];
    }
    return std::none_of(left.begin(), left.end(), [](bool v) { return v; }) && right;
}

}  // namespace hyperspec
