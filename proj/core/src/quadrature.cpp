#include "dfdm/quadrature.hpp"

#include <cmath>
#include <string>

#include "dfdm/error.hpp"

namespace dfdm {

namespace {

void check_node(const PeriodicGrid& grid, int k) {
    if (k < 0 || k >= grid.n()) {
        throw InvalidArgument("node index " + std::to_string(k) + " outside 0.." +
                              std::to_string(grid.n() - 1));
    }
}

double checked(const std::function<double(int)>& g, int j) {
    const double v = g(j);
    if (!std::isfinite(v)) {
        throw NumericalError("integrand is not finite at node " + std::to_string(j));
    }
    return v;
}

// Accumulates in the working precision of f; kernel values come from 64-bit evaluation.
template <typename T, typename Kernel>
double adjoint_sum(const GridFunction& f, int k, Kernel kernel) {
    const int n = f.size();
    T acc = 0;
    for (int j = (k + 1) % 2; j < n; j += 2) {
        acc += static_cast<T>(kernel(j));
    }
    return static_cast<double>(acc);
}

}  // namespace

double quad_punctured(const PuncturedIntegrand& integrand, const PeriodicGrid& grid) {
    check_node(grid, integrand.pole_index);
    double sum = 0.0;
    for (int j = 0; j < grid.n(); ++j) {
        if (j == integrand.pole_index) continue;
        sum += checked(integrand.eval, j);
    }
    return grid.h() * sum;
}

double quad_atr(const std::function<double(int)>& integrand, int pole_index,
                const PeriodicGrid& grid) {
    check_node(grid, pole_index);
    double sum = 0.0;
    for (int j = (pole_index + 1) % 2; j < grid.n(); j += 2) {
        sum += checked(integrand, j);
    }
    return 2.0 * grid.h() * sum;
}

double hilbert_atr(const GridFunction& f, int k) {
    const PeriodicGrid& grid = f.grid();
    check_node(grid, k);
    const double h = grid.h();
    const Precision p = f.precision();
    auto term = [&](int j) {
        const double cot = 1.0 / std::tan(h * wrap_index(k - j, grid.n()) / 2.0);
        return round_to(p, round_to(p, cot) * f[j]);
    };
    const double sum = p == Precision::bits32 ? adjoint_sum<float>(f, k, term)
                                              : adjoint_sum<double>(f, k, term);
    return round_to(p, round_to(p, 2.0 / grid.n()) * sum);
}

double hilbert_deriv_atr(const GridFunction& f, int k) {
    const PeriodicGrid& grid = f.grid();
    check_node(grid, k);
    const double h = grid.h();
    const Precision p = f.precision();
    auto term = [&](int j) {
        const double s = std::sin(h * wrap_index(k - j, grid.n()) / 2.0);
        const double weight = round_to(p, 1.0 / (s * s));
        return round_to(p, round_to(p, f[k] - f[j]) * weight);
    };
    const double sum = p == Precision::bits32 ? adjoint_sum<float>(f, k, term)
                                              : adjoint_sum<double>(f, k, term);
    return round_to(p, round_to(p, 1.0 / grid.n()) * sum);
}

}  // namespace dfdm
