#include "hyperspec/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "hyperspec/errors.hpp"

namespace hyperspec {

namespace {

template <typename T>
T entry_value(const CubicalTensor& a, std::size_t e) {
    if constexpr (std::is_same_v<T, double>) {
        return a.numeric(e).real();
    } else {
        return a.numeric(e);
    }
}

template <typename T>
std::vector<T> apply_rows(const CubicalTensor& a, std::span<const T> x) {
    if (x.size() != static_cast<std::size_t>(a.order())) {
        throw DimensionError("vector length " + std::to_string(x.size()) + " differs from tensor order " +
                             std::to_string(a.order()));
    }
    const long n = a.order();
    const std::size_t r = static_cast<std::size_t>(a.arity());
    const Index* idx = a.flat_indices().data();
    std::vector<T> out(static_cast<std::size_t>(n), T{});
#pragma omp parallel for schedule(dynamic, 16)
    for (long k = 0; k < n; ++k) {
        T acc{};
        const std::size_t end = a.row_begin(static_cast<Index>(k + 1));
        for (std::size_t e = a.row_begin(static_cast<Index>(k)); e < end; ++e) {
            T term = entry_value<T>(a, e);
            const Index* tuple = idx + e * r;
            for (std::size_t j = 1; j < r; ++j) term *= x[tuple[j]];
            acc += term;
        }
        out[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

template <typename T>
T int_power(T base, int exponent) {
    T out{1};
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

}  // namespace

ComplexVector apply(const CubicalTensor& a, std::span<const std::complex<double>> x) {
    return apply_rows<std::complex<double>>(a, x);
}

std::vector<double> apply(const CubicalTensor& a, std::span<const double> x) {
    if (!a.is_real()) throw PreconditionError("real evaluation of a complex-valued tensor");
    return apply_rows<double>(a, x);
}

double eigen_residual(const CubicalTensor& a, std::complex<double> lambda,
                      std::span<const std::complex<double>> x) {
    const auto f = apply(a, x);
    double xinf = 0.0;
    for (const auto& c : x) xinf = std::max(xinf, std::abs(c));
    if (xinf == 0.0) throw PreconditionError("eigen residual of the zero vector");
    const double scale = int_power(xinf, a.arity() - 1);
    const double denom = std::max({1.0, scale * std::abs(lambda), scale});
    double worst = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        worst = std::max(worst, std::abs(lambda * int_power(x[k], a.arity() - 1) - f[k]));
    }
    return worst / denom;
}

double polynomial_form(const CubicalTensor& a, std::span<const double> x) {
    if (!a.is_real()) throw PreconditionError("polynomial form of a complex-valued tensor");
    if (x.size() != static_cast<std::size_t>(a.order())) throw DimensionError("vector length differs from order");
    const long n = a.order();
    const std::size_t r = static_cast<std::size_t>(a.arity());
    const Index* idx = a.flat_indices().data();
    std::vector<double> partial(static_cast<std::size_t>(n), 0.0);
#pragma omp parallel for schedule(dynamic, 16)
    for (long k = 0; k < n; ++k) {
        double acc = 0.0;
        const std::size_t end = a.row_begin(static_cast<Index>(k + 1));
        for (std::size_t e = a.row_begin(static_cast<Index>(k)); e < end; ++e) {
            const Index* tuple = idx + e * r;
            double term = a.numeric(e).real();
            for (std::size_t j = 0; j < r; ++j) term *= x[tuple[j]];
            acc += term;
        }
        partial[static_cast<std::size_t>(k)] = acc;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

}  // namespace hyperspec
