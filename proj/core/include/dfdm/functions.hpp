#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dfdm/grid.hpp"
#include "dfdm/reference.hpp"
#include "dfdm/window.hpp"

namespace dfdm {

enum class FunctionKind { cos5, cos30, cos1, gaussian, exp_sin, x92_windowed };

/// Registry key plus parameters: `delta` for the Gaussian, `window` for x^{9/2}.
struct FunctionId {
    FunctionKind kind = FunctionKind::cos5;
    double delta = 0.3;
    SuperGaussian window{};
};

/// Parses "cos5", "cos30", "cos1", "exp_sin", "gaussian[:delta]", "x92_windowed[:s,sigma]".
FunctionId parse_function_id(std::string_view text);
std::string to_string(const FunctionId& id);

/// Point where the x^{9/2} derivative is taken.
inline constexpr double squire_trapp_point = 1.5;

/// Closed-form 4.5 * 1.5^3.5.
double squire_trapp_exact();

/// Scalar function together with its analytic derivative. `complex` is set only where a
/// complex-step evaluation is meaningful.
struct TestFunction {
    ScalarFunction value;
    ScalarFunction derivative;
    std::optional<ComplexScalarFunction> complex;
};

/// The periodic function sampled on the grid. For x92_windowed this is the shifted,
/// windowed (x - pi + 1.5)^{9/2} sG(x), zero where sG <= window_floor.
TestFunction periodic_function(const FunctionId& id);

/// x^{9/2}, extended by 0 for x < 0, with a principal-branch complex evaluator.
TestFunction x92_function();

}  // namespace dfdm
