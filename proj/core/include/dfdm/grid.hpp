#pragma once

#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

namespace dfdm {

enum class Precision { bits32, bits64 };

std::string_view to_string(Precision p);

/// Rounds `x` to the working precision; identity for bits64.
inline double round_to(Precision p, double x) {
    return p == Precision::bits32 ? static_cast<double>(static_cast<float>(x)) : x;
}

/// Uniform grid on [0, 2*pi) with n nodes, n a multiple of 4 and at least 8.
class PeriodicGrid {
public:
    explicit PeriodicGrid(int n);

    int n() const noexcept { return n_; }
    double h() const noexcept { return h_; }
    /// x_j = j*h, for j in 0..n-1.
    double node(int j) const;

    friend bool operator==(const PeriodicGrid&, const PeriodicGrid&) = default;

private:
    int n_;
    double h_;
};

PeriodicGrid make_grid(int n);

/// Reduces p modulo n into 0..n-1, for any integer p.
constexpr int wrap_index(long long p, int n) {
    long long r = p % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

/// Real samples bound to a grid. For bits32 every stored value is exactly a float.
class GridFunction {
public:
    /// Rounds `values` to `precision`; throws if the size mismatches or a value is not finite.
    GridFunction(PeriodicGrid grid, std::vector<double> values, Precision precision);

    const PeriodicGrid& grid() const noexcept { return grid_; }
    Precision precision() const noexcept { return precision_; }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](int j) const { return values_[static_cast<std::size_t>(j)]; }
    int size() const noexcept { return grid_.n(); }

private:
    PeriodicGrid grid_;
    std::vector<double> values_;
    Precision precision_;
};

using ScalarFunction = std::function<double(double)>;

/// values[j] = f(node(j)) rounded to `precision`. Throws NumericalError naming the
/// first node where f is not finite.
GridFunction sample(const ScalarFunction& f, const PeriodicGrid& grid, Precision precision);

}  // namespace dfdm
