#pragma once

#include <complex>
#include <functional>

#include "dfdm/diff_matrix.hpp"
#include "dfdm/grid.hpp"

namespace dfdm {

/// Second-order centered difference matrix: +1/(2h) on the superdiagonal, -1/(2h) on
/// the subdiagonal, wrapped at the corners.
DiffMatrix fdm2_matrix(const PeriodicGrid& grid);

/// Periodic sinc (Fourier) differentiation matrix,
/// entries[j][m] = (1/2) (-1)^(j-m) cot((j-m) h / 2) off the diagonal.
DiffMatrix sinc_diff_matrix(const PeriodicGrid& grid);

/// What happens to the wavenumber n/2 in the transform-domain derivative.
enum class NyquistMode {
    zero,     // derivative amplitude set to zero
    amplify,  // amplitude scaled by n/2, exposing its roundoff as a (-1)^j sawtooth
};

/// Forward DFT, multiply wavenumber k in (-n/2, n/2) by ik, treat k = n/2 per `nyquist`,
/// inverse DFT, real part. Runs in the precision of f.
GridFunction dft_derivative(const GridFunction& f, NyquistMode nyquist = NyquistMode::zero);

using ComplexScalarFunction = std::function<std::complex<double>(std::complex<double>)>;

/// Im(F(x0 + ih)) / h. F must be analytic near x0.
double complex_step(const ComplexScalarFunction& F, double x0, double h);

/// (f(x0 + h) - f(x0 - h)) / (2h). Not periodic.
double fd2_pointwise(const ScalarFunction& f, double x0, double h);

}  // namespace dfdm
