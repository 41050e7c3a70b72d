#include "hyperspec/reference.hpp"

#include "hyperspec/errors.hpp"

namespace hyperspec::reference {

namespace {

template <typename T>
std::vector<T> apply_serial(const CubicalTensor& a, std::span<const T> x) {
    if (x.size() != static_cast<std::size_t>(a.order())) throw DimensionError("vector length differs from order");
    std::vector<T> out(x.size(), T{});
    for (std::size_t e = 0; e < a.size(); ++e) {
        const auto idx = a.index(e);
        T term;
        if constexpr (std::is_same_v<T, double>) {
            term = a.numeric(e).real();
        } else {
            term = a.numeric(e);
        }
        for (std::size_t j = 1; j < idx.size(); ++j) term *= x[idx[j]];
        out[idx[0]] += term;
    }
    return out;
}

}  // namespace

ComplexVector apply(const CubicalTensor& a, std::span<const std::complex<double>> x) {
    return apply_serial<std::complex<double>>(a, x);
}

std::vector<double> apply(const CubicalTensor& a, std::span<const double> x) {
    if (!a.is_real()) throw PreconditionError("real evaluation of a complex-valued tensor");
    return apply_serial<double>(a, x);
}

double polynomial_form(const CubicalTensor& a, std::span<const double> x) {
    if (!a.is_real()) throw PreconditionError("polynomial form of a complex-valued tensor");
    if (x.size() != static_cast<std::size_t>(a.order())) throw DimensionError("vector length differs from order");
    std::vector<double> partial(x.size(), 0.0);
    for (std::size_t e = 0; e < a.size(); ++e) {
        const auto idx = a.index(e);
        double term = a.numeric(e).real();
        for (Index i : idx) term *= x[i];
        partial[idx[0]] += term;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

}  // namespace hyperspec::reference

namespace hyperspec::reference {

std::vector<std::optional<Rational>> evaluate_nodes(const ResultantSystem& sys, std::span<const Rational> nodes) {
    std::vector<std::optional<Rational>> out;
    out.reserve(nodes.size());
    for (const auto& node : nodes) out.push_back(evaluate_resultant(sys, node));
    return out;
}

UniPoly charpoly_tensor(const CubicalTensor& a) {
    return resultant_polynomial(resultant_system(a), evaluate_nodes);
}

}  // namespace hyperspec::reference
