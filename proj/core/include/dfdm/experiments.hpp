#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dfdm/functions.hpp"
#include "dfdm/grid.hpp"
#include "dfdm/reference.hpp"

namespace dfdm {

enum class Method { dfdm, fft_matrix, fft_direct, fdm2, cstep };

Method parse_method(std::string_view text);
std::string_view to_string(Method m);
bool is_grid_method(Method m);

struct CaseSpec {
    FunctionId function;
    int n = 32;
    Method method = Method::dfdm;
    Precision precision = Precision::bits64;
    NyquistMode nyquist = NyquistMode::zero;  // fft_direct only
    double step = 0.0;                        // cstep only; 0 selects 2*pi/n
};

/// Throws InvalidArgument for bad grid sizes or a cstep/function mismatch.
void validate(const CaseSpec& spec);

/// One row per grid node (one row at x = 1.5 for cstep). In bits32 every column is
/// rounded to float, so 9 significant digits reproduce it exactly.
struct CaseReport {
    CaseSpec spec;
    std::vector<double> x;
    std::vector<double> f;
    std::vector<double> fprime_exact;
    std::vector<double> fprime_method;
    std::vector<double> pointwise_error;  // fprime_exact - fprime_method
    double linf = 0.0;                    // max |pointwise_error|
    double runtime_ms = 0.0;
};

CaseReport run_case(const CaseSpec& spec);

struct ConvergencePoint {
    int n;
    double linf;
};

/// run_case at bits64 for every n (ascending).
std::vector<ConvergencePoint> convergence_study(const FunctionId& function, Method method,
                                                std::span<const int> n_list);

/// Per-node signed error of a grid method, as CSV text.
std::string roundoff_profile(const CaseSpec& spec);

/// max |error| over nodes with |x - pi| > radius, divided by max |error| over the rest.
double localization_ratio(const CaseReport& report, double radius = 2.0);

/// Largest |entry| difference between the assembled dFDM and sinc matrices (bits64).
double matrix_compare(int n);

struct SquireTrappResult {
    double estimate;
    double exact;
    int matching_digits;
};

/// Windowed dFDM derivative of x^{9/2} at 1.5 in bits64.
SquireTrappResult squire_trapp(int n, int s, double sigma);

/// Leading significant digits shared by the 17-digit decimal forms of a and b.
int matching_digits(double a, double b);

// CSV ------------------------------------------------------------------------------

struct CsvRow {
    double x, f, fprime_exact, fprime_method, error;
};

inline constexpr std::string_view csv_header = "x,f,fprime_exact,fprime_method,error";

/// Locale-independent, LF line endings; 17 significant digits (bits64) or 9 (bits32).
std::string to_csv(const CaseReport& report);
std::vector<CsvRow> parse_csv(std::string_view text);

/// Decimal form with `digits` significant digits, independent of the C locale.
std::string format_number(double value, int digits);

}  // namespace dfdm
