#include "dfdm/experiments.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numbers>
#include <string>

#include "dfdm/error.hpp"
#include "dfdm/operator.hpp"
#include "dfdm/window.hpp"

namespace dfdm {

Method parse_method(std::string_view text) {
    if (text == "dfdm") return Method::dfdm;
    if (text == "fft-matrix" || text == "fft_matrix") return Method::fft_matrix;
    if (text == "fft-direct" || text == "fft_direct") return Method::fft_direct;
    if (text == "fdm2") return Method::fdm2;
    if (text == "cstep") return Method::cstep;
    throw InvalidArgument("unknown method '" + std::string(text) + "'");
}

std::string_view to_string(Method m) {
    switch (m) {
    case Method::dfdm: return "dfdm";
    case Method::fft_matrix: return "fft-matrix";
    case Method::fft_direct: return "fft-direct";
    case Method::fdm2: return "fdm2";
    case Method::cstep: return "cstep";
    }
    return "unknown";
}

bool is_grid_method(Method m) { return m != Method::cstep; }

void validate(const CaseSpec& spec) {
    (void)make_grid(spec.n);
    if (spec.method == Method::cstep && spec.function.kind != FunctionKind::x92_windowed) {
        throw InvalidArgument("cstep is a pointwise method and only pairs with x92_windowed");
    }
    if (spec.step < 0.0 || !std::isfinite(spec.step)) {
        throw InvalidArgument("complex step must be positive");
    }
}

namespace {

GridFunction apply_method(Method method, const GridFunction& samples, NyquistMode nyquist) {
    const PeriodicGrid& grid = samples.grid();
    switch (method) {
    case Method::dfdm: return apply_dfdm_stencil(samples, build_coeffs(grid));
    case Method::fft_matrix: return apply_matrix(sinc_diff_matrix(grid), samples);
    case Method::fft_direct: return dft_derivative(samples, nyquist);
    case Method::fdm2: return apply_matrix(fdm2_matrix(grid), samples);
    case Method::cstep: break;
    }
    throw InvalidArgument("method is not a grid method");
}

void finish(CaseReport& report) {
    const Precision p = report.spec.precision;
    report.linf = 0.0;
    report.pointwise_error.resize(report.x.size());
    for (std::size_t i = 0; i < report.x.size(); ++i) {
        report.x[i] = round_to(p, report.x[i]);
        report.fprime_exact[i] = round_to(p, report.fprime_exact[i]);
        report.pointwise_error[i] = round_to(p, report.fprime_exact[i] - report.fprime_method[i]);
        report.linf = std::max(report.linf, std::abs(report.pointwise_error[i]));
    }
}

}  // namespace

CaseReport run_case(const CaseSpec& spec) {
    validate(spec);
    const auto start = std::chrono::steady_clock::now();
    CaseReport report{spec, {}, {}, {}, {}, {}, 0.0, 0.0};
    const PeriodicGrid grid = make_grid(spec.n);

    if (spec.method == Method::cstep) {
        const TestFunction fn = x92_function();
        const double step = spec.step > 0.0 ? spec.step : grid.h();
        const double x0 = squire_trapp_point;
        report.x = {x0};
        report.f = {round_to(spec.precision, fn.value(x0))};
        report.fprime_exact = {fn.derivative(x0)};
        report.fprime_method = {round_to(spec.precision, complex_step(*fn.complex, x0, step))};
    } else {
        const TestFunction fn = periodic_function(spec.function);
        const GridFunction samples = sample(fn.value, grid, spec.precision);
        const GridFunction derivative = apply_method(spec.method, samples, spec.nyquist);
        for (int j = 0; j < grid.n(); ++j) {
            const double x = grid.node(j);
            report.x.push_back(x);
            report.f.push_back(samples[j]);
            report.fprime_exact.push_back(fn.derivative(x));
            report.fprime_method.push_back(derivative[j]);
        }
    }
    finish(report);
    if (!std::isfinite(report.linf)) throw NumericalError("error norm is not finite");

    const auto stop = std::chrono::steady_clock::now();
    report.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

std::vector<ConvergencePoint> convergence_study(const FunctionId& function, Method method,
                                                std::span<const int> n_list) {
    if (!std::is_sorted(n_list.begin(), n_list.end())) {
        throw InvalidArgument("grid sizes must be ascending");
    }
    std::vector<ConvergencePoint> curve;
    for (int n : n_list) {
        CaseSpec spec;
        spec.function = function;
        spec.n = n;
        spec.method = method;
        spec.precision = Precision::bits64;
        curve.push_back({n, run_case(spec).linf});
    }
    return curve;
}

std::string roundoff_profile(const CaseSpec& spec) {
    if (!is_grid_method(spec.method)) {
        throw InvalidArgument("roundoff profiles need a grid method");
    }
    return to_csv(run_case(spec));
}

double localization_ratio(const CaseReport& report, double radius) {
    double inside = 0.0, outside = 0.0;
    for (std::size_t i = 0; i < report.x.size(); ++i) {
        const double e = std::abs(report.pointwise_error[i]);
        if (std::abs(report.x[i] - std::numbers::pi) > radius) {
            outside = std::max(outside, e);
        } else {
            inside = std::max(inside, e);
        }
    }
    if (inside == 0.0) throw NumericalError("no error inside the localization radius");
    return outside / inside;
}

double matrix_compare(int n) {
    const PeriodicGrid grid = make_grid(n);
    const DiffMatrix dfdm = assemble_dfdm_matrix(grid, build_coeffs(grid));
    const DiffMatrix sinc = sinc_diff_matrix(grid);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) worst = std::max(worst, std::abs(dfdm(i, j) - sinc(i, j)));
    }
    return worst;
}

int matching_digits(double a, double b) {
    // d.dddddddddddddddde+XX: compare exponents, then mantissa digits.
    auto scientific = [](double v) {
        std::array<char, 64> buf{};
        const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                             std::chars_format::scientific, 16);
        if (ec != std::errc{}) throw NumericalError("cannot format number");
        std::string s(buf.data(), ptr);
        const auto e = s.find('e');
        std::string mantissa = s.substr(0, e);
        std::erase(mantissa, '.');
        std::erase(mantissa, '-');
        return std::pair{mantissa, s.substr(e)};
    };
    if (!std::isfinite(a) || !std::isfinite(b) || (a < 0) != (b < 0)) return 0;
    const auto [ma, ea] = scientific(a);
    const auto [mb, eb] = scientific(b);
    if (ea != eb) return 0;
    int count = 0;
    while (count < static_cast<int>(ma.size()) &&
           ma[static_cast<std::size_t>(count)] == mb[static_cast<std::size_t>(count)]) {
        ++count;
    }
    return count;
}

SquireTrappResult squire_trapp(int n, int s, double sigma) {
    const PeriodicGrid grid = make_grid(n);
    const SuperGaussian window(s, sigma);
    const double estimate = windowed_derivative(x92_function().value, squire_trapp_point, window,
                                                grid, Precision::bits64);
    const double exact = squire_trapp_exact();
    return {estimate, exact, matching_digits(estimate, exact)};
}

}  // namespace dfdm
