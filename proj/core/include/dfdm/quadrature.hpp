#pragma once

#include <functional>

#include "dfdm/grid.hpp"

namespace dfdm {

/// Node-indexed integrand with a pole at `pole_index`. The punctured rule never asks
/// for the value at the pole.
struct PuncturedIntegrand {
    std::function<double(int)> eval;
    int pole_index = 0;
};

/// Punctured trapezoid rule h * sum_{j != k} G(x_j).
///
/// For G(x) = g(x)/(x - y) + g~(x) with y = x_k, the error I - Q is
/// (g'(y) + g~(y)) h + O(h^{2m}): first order, with a spectrally small remainder.
double quad_punctured(const PuncturedIntegrand& integrand, const PeriodicGrid& grid);

/// Alternate trapezoidal rule: 2h * sum of G over the adjoint grid {j : j + pole odd}.
/// Equals 2 Q_{n} - Q_{n/2}, the Richardson extrapolation of the punctured rule, and is
/// spectrally accurate. G is never evaluated on the pole's parity class.
///
/// Throws NumericalError if G is not finite at an adjoint node.
double quad_atr(const std::function<double(int)>& integrand, int pole_index,
                const PeriodicGrid& grid);

/// Circle Hilbert transform (1/2pi) PV-int cot((x_k - y)/2) f(y) dy, by the ATR.
/// Maps cos(mx) to sin(mx) and sin(mx) to -cos(mx) for m >= 1.
double hilbert_atr(const GridFunction& f, int k);

/// Hilbert transform of f' at x_k from increments of f only:
/// (1/4pi) PV-int (f(x_k) - f(y)) / sin^2((x_k - y)/2) dy, by the ATR.
double hilbert_deriv_atr(const GridFunction& f, int k);

}  // namespace dfdm
