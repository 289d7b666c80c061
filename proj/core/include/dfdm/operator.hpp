#pragma once

#include <vector>

#include "dfdm/diff_matrix.hpp"
#include "dfdm/grid.hpp"

namespace dfdm {

/// Coefficients of the multi-level dFDM operator on one grid.
///
/// Distance index d and level index l both run over the odd integers 1, 3, ..., n/2 - 1;
/// entry i of each table belongs to the odd index 2i + 1. All values are 64-bit.
struct MultiLevelCoeffs {
    PeriodicGrid grid;
    std::vector<double> c_d;        // cot(h d / 2)
    std::vector<double> s_l;        // sin(h l / 2) / (h l)
    std::vector<double> s_l_inv2;   // S_l^{-2} = (h l)^2 / sin^2(h l / 2)
    std::vector<double> level_h2;   // (l h)^2
    double alpha_n = 0.0;           // sum over odd l of 2 / sin^2(h l / 2)

    int levels() const noexcept { return static_cast<int>(c_d.size()); }
    /// Lookups by odd index; throw InvalidArgument for even or out-of-range indices.
    double c(int d) const;
    double s(int l) const;
};

MultiLevelCoeffs build_coeffs(const PeriodicGrid& grid);

/// (left - 2 center + right) / spacing^2, in 64-bit.
double second_difference(double left, double center, double right, double spacing);

/// Level-l centered second difference D2_{j,l}[f] with wrapped neighbours, evaluated in
/// the precision of f. l must be odd with 1 <= l <= n/2 - 1.
double second_difference(const GridFunction& f, int j, int l);

/// Literal two-level ATR composition: the discrete Hilbert transform of the discrete
/// Hilbert transform of f'. Per node,
///   -(2/N^2) sum_{m+j odd} cot(h(j-m)/2) sum_{n+m odd} (f_m - f_n) / sin^2(h(m-n)/2).
GridFunction apply_dfdm_direct(const GridFunction& f);

/// Multi-resolution stencil form:
///   -(2/N^2) sum_d C_d sum_l S_l^{-2} (D2_{j+d,l}[f] - D2_{j-d,l}[f]).
/// The level sum is formed once per stencil centre (l ascending), then combined over
/// d ascending. This is the realization used by the experiment harness.
GridFunction apply_dfdm_stencil(const GridFunction& f, const MultiLevelCoeffs& coeffs);

/// Two-grid dFDM differentiation matrix. Circulant and antisymmetric by construction;
/// the diagonal and the half-period entries are exactly zero.
DiffMatrix assemble_dfdm_matrix(const PeriodicGrid& grid, const MultiLevelCoeffs& coeffs);

}  // namespace dfdm
