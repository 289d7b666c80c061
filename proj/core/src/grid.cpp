#include "dfdm/grid.hpp"

#include <cmath>
#include <string>

#include "dfdm/error.hpp"

namespace dfdm {

std::string_view to_string(Precision p) {
    return p == Precision::bits32 ? "f32" : "f64";
}

PeriodicGrid::PeriodicGrid(int n) : n_(n), h_(2.0 * std::numbers::pi / n) {
    if (n < 8) {
        throw InvalidArgument("grid size must be at least 8, got " + std::to_string(n));
    }
    if (n % 4 != 0) {
        throw InvalidArgument("grid size must be a multiple of 4, got " + std::to_string(n));
    }
}

double PeriodicGrid::node(int j) const {
    if (j < 0 || j >= n_) {
        throw InvalidArgument("node index " + std::to_string(j) + " outside 0.." +
                              std::to_string(n_ - 1));
    }
    return j * h_;
}

PeriodicGrid make_grid(int n) { return PeriodicGrid(n); }

GridFunction::GridFunction(PeriodicGrid grid, std::vector<double> values, Precision precision)
    : grid_(grid), values_(std::move(values)), precision_(precision) {
    if (values_.size() != static_cast<std::size_t>(grid_.n())) {
        throw InvalidArgument("grid function has " + std::to_string(values_.size()) +
                              " values for a grid of " + std::to_string(grid_.n()) + " nodes");
    }
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (!std::isfinite(values_[j])) {
            throw NumericalError("non-finite value at node " + std::to_string(j));
        }
        values_[j] = round_to(precision_, values_[j]);
    }
}

GridFunction sample(const ScalarFunction& f, const PeriodicGrid& grid, Precision precision) {
    std::vector<double> values(static_cast<std::size_t>(grid.n()));
    for (int j = 0; j < grid.n(); ++j) {
        const double x = grid.node(j);
        const double v = f(x);
        if (!std::isfinite(v)) {
            throw NumericalError("function is not finite at node " + std::to_string(j) +
                                 " (x = " + std::to_string(x) + ")");
        }
        values[static_cast<std::size_t>(j)] = v;
    }
    return GridFunction(grid, std::move(values), precision);
}

}  // namespace dfdm
