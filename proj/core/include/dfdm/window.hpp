#pragma once

#include <numbers>

#include "dfdm/grid.hpp"

namespace dfdm {

/// Flat-topped window exp(-(sigma (x - pi))^s) centred at pi.
class SuperGaussian {
public:
    /// s must be even and >= 2; sigma must be positive and finite.
    SuperGaussian(int s = 10, double sigma = 1.6);

    int s() const noexcept { return s_; }
    double sigma() const noexcept { return sigma_; }
    static constexpr double center = std::numbers::pi;

private:
    int s_;
    double sigma_;
};

double super_gaussian(const SuperGaussian& w, double x);

/// d/dx of the window.
double super_gaussian_derivative(const SuperGaussian& w, double x);

/// Below this window value the windowed function is set to 0 without evaluating f.
inline constexpr double window_floor = 1e-300;

/// Samples of f(x - pi + x_target) * sG(x), with f evaluated only where sG > window_floor.
GridFunction windowed_samples(const ScalarFunction& f, double x_target, const SuperGaussian& w,
                              const PeriodicGrid& grid, Precision precision = Precision::bits64);

/// f'(x_target), estimated by the dFDM (stencil form) on the windowed, shifted function
/// at node n/2, where x = pi. Because sG(pi) = 1 and sG'(pi) = 0 the windowed derivative
/// there equals f'(x_target).
double windowed_derivative(const ScalarFunction& f, double x_target, const SuperGaussian& w,
                           const PeriodicGrid& grid, Precision precision = Precision::bits64);

}  // namespace dfdm
