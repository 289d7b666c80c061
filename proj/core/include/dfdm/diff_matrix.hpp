#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "dfdm/grid.hpp"

namespace dfdm {

enum class MethodTag { dfdm, sinc_fft, fdm2 };

std::string_view to_string(MethodTag tag);

/// Dense n x n differentiation matrix, row-major, entries in 1/radian.
class DiffMatrix {
public:
    DiffMatrix(int n, std::vector<double> entries, MethodTag tag);

    /// Builds the circulant matrix with entries[i][j] = kernel[wrap(i - j)].
    static DiffMatrix circulant(std::span<const double> kernel, MethodTag tag);

    int n() const noexcept { return n_; }
    MethodTag tag() const noexcept { return tag_; }
    double operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                        static_cast<std::size_t>(j)];
    }
    std::span<const double> row(int i) const {
        return std::span<const double>(entries_).subspan(
            static_cast<std::size_t>(i) * static_cast<std::size_t>(n_),
            static_cast<std::size_t>(n_));
    }
    double max_abs_entry() const;

private:
    int n_;
    std::vector<double> entries_;
    MethodTag tag_;
};

bool is_circulant(const DiffMatrix& m);
bool is_antisymmetric(const DiffMatrix& m);
/// Largest |row sum|, accumulated in 64-bit.
double max_abs_row_sum(const DiffMatrix& m);

/// Plain matrix-vector product. In bits32 the entries are rounded to float and each
/// row is accumulated in float, left to right.
GridFunction apply_matrix(const DiffMatrix& m, const GridFunction& f);

}  // namespace dfdm
