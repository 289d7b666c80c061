#include "dfdm/operator.hpp"

#include <cmath>
#include <string>

#include "dfdm/error.hpp"

namespace dfdm {

namespace {

std::size_t odd_slot(int index, int levels, const char* what) {
    if (index < 1 || index % 2 == 0 || (index - 1) / 2 >= levels) {
        throw InvalidArgument(std::string(what) + " index must be odd in 1.." +
                              std::to_string(2 * levels - 1) + ", got " + std::to_string(index));
    }
    return static_cast<std::size_t>((index - 1) / 2);
}

template <typename T>
std::vector<T> rounded(const std::vector<double>& table) {
    return std::vector<T>(table.begin(), table.end());
}

template <typename T>
std::vector<double> dfdm_direct(const GridFunction& f) {
    const int n = f.size();
    const double h = f.grid().h();
    const auto un = static_cast<std::size_t>(n);

    // Kernel tables indexed by the wrapped offset; only odd offsets are used.
    std::vector<T> cot(un, T(0)), inv_sin2(un, T(0));
    for (int k = 1; k < n; k += 2) {
        const double s = std::sin(h * k / 2.0);
        cot[static_cast<std::size_t>(k)] = static_cast<T>(std::cos(h * k / 2.0) / s);
        inv_sin2[static_cast<std::size_t>(k)] = static_cast<T>(1.0 / (s * s));
    }
    const std::vector<T> v(f.values().begin(), f.values().end());

    // Inner transform at every node m: sum over the adjoint grid of m.
    std::vector<T> inner(un);
    for (int m = 0; m < n; ++m) {
        T acc = 0;
        for (int q = (m + 1) % 2; q < n; q += 2) {
            const auto um = static_cast<std::size_t>(m);
            acc += (v[um] - v[static_cast<std::size_t>(q)]) *
                   inv_sin2[static_cast<std::size_t>(wrap_index(m - q, n))];
        }
        inner[static_cast<std::size_t>(m)] = acc;
    }

    const T scale = static_cast<T>(-2.0 / (static_cast<double>(n) * n));
    std::vector<double> out(un);
    for (int j = 0; j < n; ++j) {
        T acc = 0;
        for (int m = (j + 1) % 2; m < n; m += 2) {
            acc += cot[static_cast<std::size_t>(wrap_index(j - m, n))] *
                   inner[static_cast<std::size_t>(m)];
        }
        out[static_cast<std::size_t>(j)] = static_cast<double>(scale * acc);
    }
    return out;
}

template <typename T>
std::vector<double> dfdm_stencil(const GridFunction& f, const MultiLevelCoeffs& coeffs) {
    const int n = f.size();
    const int levels = coeffs.levels();
    const auto un = static_cast<std::size_t>(n);
    const auto c_d = rounded<T>(coeffs.c_d);
    const auto s_inv2 = rounded<T>(coeffs.s_l_inv2);
    const auto lh2 = rounded<T>(coeffs.level_h2);
    const std::vector<T> v(f.values().begin(), f.values().end());
    auto at = [&](int p) { return v[static_cast<std::size_t>(wrap_index(p, n))]; };

    // sum_l S_l^{-2} D2_{c,l}[f] for every stencil centre c.
    std::vector<T> level_sum(un);
    for (int c = 0; c < n; ++c) {
        T acc = 0;
        for (int i = 0; i < levels; ++i) {
            const int l = 2 * i + 1;
            const auto ui = static_cast<std::size_t>(i);
            const T d2 = (at(c - l) - T(2) * at(c) + at(c + l)) / lh2[ui];
            acc += s_inv2[ui] * d2;
        }
        level_sum[static_cast<std::size_t>(c)] = acc;
    }

    const T scale = static_cast<T>(-2.0 / (static_cast<double>(n) * n));
    std::vector<double> out(un);
    for (int j = 0; j < n; ++j) {
        T acc = 0;
        for (int i = 0; i < levels; ++i) {
            const int d = 2 * i + 1;
            acc += c_d[static_cast<std::size_t>(i)] *
                   (level_sum[static_cast<std::size_t>(wrap_index(j + d, n))] -
                    level_sum[static_cast<std::size_t>(wrap_index(j - d, n))]);
        }
        out[static_cast<std::size_t>(j)] = static_cast<double>(scale * acc);
    }
    return out;
}

}  // namespace

double MultiLevelCoeffs::c(int d) const { return c_d[odd_slot(d, levels(), "distance")]; }
double MultiLevelCoeffs::s(int l) const { return s_l[odd_slot(l, levels(), "level")]; }

MultiLevelCoeffs build_coeffs(const PeriodicGrid& grid) {
    MultiLevelCoeffs coeffs{grid, {}, {}, {}, {}, 0.0};
    const double h = grid.h();
    const int levels = grid.n() / 4;
    for (int i = 0; i < levels; ++i) {
        const int k = 2 * i + 1;
        const double half = h * k / 2.0;
        const double s = std::sin(half);
        const double lh = h * k;
        coeffs.c_d.push_back(std::cos(half) / s);
        coeffs.s_l.push_back(s / lh);
        coeffs.s_l_inv2.push_back((lh * lh) / (s * s));
        coeffs.level_h2.push_back(lh * lh);
        coeffs.alpha_n += 2.0 / (s * s);
    }
    return coeffs;
}

double second_difference(double left, double center, double right, double spacing) {
    return (left - 2.0 * center + right) / (spacing * spacing);
}

double second_difference(const GridFunction& f, int j, int l) {
    const int n = f.size();
    if (l < 1 || l % 2 == 0 || l > n / 2 - 1) {
        throw InvalidArgument("level must be odd in 1.." + std::to_string(n / 2 - 1) + ", got " +
                              std::to_string(l));
    }
    if (j < 0 || j >= n) {
        throw InvalidArgument("node index " + std::to_string(j) + " outside grid");
    }
    const double lh = l * f.grid().h();
    const double left = f[wrap_index(j - l, n)];
    const double right = f[wrap_index(j + l, n)];
    if (f.precision() == Precision::bits32) {
        const auto lh2 = static_cast<float>(lh * lh);
        return static_cast<double>((static_cast<float>(left) - 2.0f * static_cast<float>(f[j]) +
                                    static_cast<float>(right)) /
                                   lh2);
    }
    return second_difference(left, f[j], right, lh);
}

GridFunction apply_dfdm_direct(const GridFunction& f) {
    auto out = f.precision() == Precision::bits32 ? dfdm_direct<float>(f) : dfdm_direct<double>(f);
    return GridFunction(f.grid(), std::move(out), f.precision());
}

GridFunction apply_dfdm_stencil(const GridFunction& f, const MultiLevelCoeffs& coeffs) {
    if (!(coeffs.grid == f.grid())) {
        throw InvalidArgument("coefficients built for n = " + std::to_string(coeffs.grid.n()) +
                              ", grid function has n = " + std::to_string(f.size()));
    }
    auto out = f.precision() == Precision::bits32 ? dfdm_stencil<float>(f, coeffs)
                                                  : dfdm_stencil<double>(f, coeffs);
    return GridFunction(f.grid(), std::move(out), f.precision());
}

DiffMatrix assemble_dfdm_matrix(const PeriodicGrid& grid, const MultiLevelCoeffs& coeffs) {
    if (!(coeffs.grid == grid)) {
        throw InvalidArgument("coefficients do not belong to this grid");
    }
    const int n = grid.n();
    const double h = grid.h();
    const double scale = 2.0 / (static_cast<double>(n) * n);
    auto cot = [](double x) { return std::cos(x) / std::sin(x); };

    // kernel[k] is the entry at (j, m) with k = wrap(j - m). Odd k are the adjoint-grid
    // columns, even k the same-grid columns.
    std::vector<double> kernel(static_cast<std::size_t>(n), 0.0);
    for (int k = 1; k < n / 2; ++k) {
        double value = 0.0;
        if (k % 2 == 1) {
            value = -scale * coeffs.alpha_n * cot(h * k / 2.0);
        } else {
            double sum = 0.0;
            for (int i = 0; i < coeffs.levels(); ++i) {
                const int l = 2 * i + 1;
                const double s = std::sin(h * l / 2.0);
                sum += (cot(h * (k - l) / 2.0) + cot(h * (k + l) / 2.0)) / (s * s);
            }
            value = scale * sum;
        }
        kernel[static_cast<std::size_t>(k)] = value;
        kernel[static_cast<std::size_t>(n - k)] = -value;
    }
    return DiffMatrix::circulant(kernel, MethodTag::dfdm);
}

}  // namespace dfdm
