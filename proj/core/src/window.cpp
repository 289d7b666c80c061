#include "dfdm/window.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "dfdm/error.hpp"
#include "dfdm/operator.hpp"

namespace dfdm {

SuperGaussian::SuperGaussian(int s, double sigma) : s_(s), sigma_(sigma) {
    if (s < 2 || s % 2 != 0) {
        throw InvalidArgument("super-Gaussian exponent must be even and >= 2, got " +
                              std::to_string(s));
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw InvalidArgument("super-Gaussian width must be positive, got " + std::to_string(sigma));
    }
}

double super_gaussian(const SuperGaussian& w, double x) {
    return std::exp(-std::pow(w.sigma() * (x - SuperGaussian::center), w.s()));
}

double super_gaussian_derivative(const SuperGaussian& w, double x) {
    const double u = w.sigma() * (x - SuperGaussian::center);
    return -w.s() * w.sigma() * std::pow(u, w.s() - 1) * super_gaussian(w, x);
}

GridFunction windowed_samples(const ScalarFunction& f, double x_target, const SuperGaussian& w,
                              const PeriodicGrid& grid, Precision precision) {
    std::vector<double> values(static_cast<std::size_t>(grid.n()), 0.0);
    for (int j = 0; j < grid.n(); ++j) {
        const double x = grid.node(j);
        const double window = super_gaussian(w, x);
        if (!(window > window_floor)) continue;
        const double v = f(x - SuperGaussian::center + x_target);
        if (!std::isfinite(v)) {
            throw NumericalError("function is not finite at x = " +
                                 std::to_string(x - SuperGaussian::center + x_target) +
                                 " inside the window support (node " + std::to_string(j) + ")");
        }
        values[static_cast<std::size_t>(j)] = v * window;
    }
    return GridFunction(grid, std::move(values), precision);
}

double windowed_derivative(const ScalarFunction& f, double x_target, const SuperGaussian& w,
                           const PeriodicGrid& grid, Precision precision) {
    const GridFunction samples = windowed_samples(f, x_target, w, grid, precision);
    const GridFunction derivative = apply_dfdm_stencil(samples, build_coeffs(grid));
    return derivative[grid.n() / 2];
}

}  // namespace dfdm
