// dfdm: run differentiation experiments on periodic grids and emit CSV.
//
// Exit codes: 0 success, 2 invalid arguments, 1 numerical failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "dfdm/error.hpp"
#include "dfdm/experiments.hpp"

namespace {

constexpr int exit_invalid = 2;
constexpr int exit_numerical = 1;

dfdm::Precision parse_precision(const std::string& text) {
    if (text == "f32") return dfdm::Precision::bits32;
    if (text == "f64") return dfdm::Precision::bits64;
    throw dfdm::InvalidArgument("precision must be f32 or f64, got '" + text + "'");
}

dfdm::NyquistMode parse_nyquist(const std::string& text) {
    if (text == "zero") return dfdm::NyquistMode::zero;
    if (text == "amplify") return dfdm::NyquistMode::amplify;
    throw dfdm::InvalidArgument("nyquist must be zero or amplify, got '" + text + "'");
}

struct RunOptions {
    std::string function = "cos5";
    int n = 32;
    std::string method = "dfdm";
    std::string precision = "f64";
    std::string nyquist = "zero";
    double step = 0.0;
    std::string out;
};

int run(const RunOptions& opt) {
    dfdm::CaseSpec spec;
    spec.function = dfdm::parse_function_id(opt.function);
    spec.n = opt.n;
    spec.method = dfdm::parse_method(opt.method);
    spec.precision = parse_precision(opt.precision);
    spec.nyquist = parse_nyquist(opt.nyquist);
    spec.step = opt.step;

    const dfdm::CaseReport report = dfdm::run_case(spec);
    const std::string csv = dfdm::to_csv(report);
    std::ostream* summary = &std::cout;
    if (opt.out.empty()) {
        std::cout << csv;
        summary = &std::cerr;
    } else {
        std::ofstream file(opt.out, std::ios::binary);
        if (!file) throw dfdm::InvalidArgument("cannot open '" + opt.out + "' for writing");
        file << csv;
    }
    *summary << "function=" << dfdm::to_string(spec.function) << " n=" << spec.n
             << " method=" << dfdm::to_string(spec.method)
             << " precision=" << dfdm::to_string(spec.precision)
             << " linf=" << dfdm::format_number(report.linf, 6)
             << " runtime_ms=" << dfdm::format_number(report.runtime_ms, 4) << '\n';
    return 0;
}

int converge(const std::string& function, const std::string& method, const std::vector<int>& ns) {
    const auto curve =
        dfdm::convergence_study(dfdm::parse_function_id(function), dfdm::parse_method(method), ns);
    std::cout << "n,linf\n";
    for (const auto& point : curve) {
        std::cout << point.n << ',' << dfdm::format_number(point.linf, 17) << '\n';
    }
    return 0;
}

int matrix_compare(int n) {
    std::cout << dfdm::format_number(dfdm::matrix_compare(n), 16) << '\n';
    return 0;
}

int squire_trapp(int n, int s, double sigma) {
    const auto result = dfdm::squire_trapp(n, s, sigma);
    std::cout << "estimate=" << dfdm::format_number(result.estimate, 17) << '\n'
              << "exact=" << dfdm::format_number(result.exact, 17) << '\n'
              << "matching_digits=" << result.matching_digits << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distributional finite differences on periodic grids"};
    app.require_subcommand(1);

    RunOptions run_opt;
    auto* run_cmd = app.add_subcommand("run", "Differentiate one test function; write per-node CSV");
    run_cmd->add_option("--function", run_opt.function,
                        "cos5 | cos30 | cos1 | exp_sin | gaussian[:delta] | x92_windowed[:s,sigma]")
        ->required();
    run_cmd->add_option("--n", run_opt.n, "Grid size (multiple of 4, >= 8)")->required();
    run_cmd->add_option("--method", run_opt.method, "dfdm | fft-matrix | fft-direct | fdm2 | cstep")
        ->required();
    run_cmd->add_option("--precision", run_opt.precision, "f32 | f64")->required();
    run_cmd->add_option("--nyquist", run_opt.nyquist, "Nyquist mode for fft-direct: zero | amplify");
    run_cmd->add_option("--step", run_opt.step, "Complex step for cstep (default 2*pi/n)");
    run_cmd->add_option("--out", run_opt.out, "CSV output path (default stdout)");

    std::string conv_function, conv_method;
    std::vector<int> conv_ns;
    auto* conv_cmd = app.add_subcommand("converge", "Error norm versus grid size, 64-bit");
    conv_cmd->add_option("--function", conv_function)->required();
    conv_cmd->add_option("--method", conv_method)->required();
    conv_cmd->add_option("--n-list", conv_ns, "Comma-separated ascending grid sizes")
        ->required()
        ->delimiter(',');

    int cmp_n = 0;
    auto* cmp_cmd = app.add_subcommand("matrix-compare",
                                       "Max entrywise |dFDM - sinc| differentiation matrix gap");
    cmp_cmd->add_option("--n", cmp_n)->required();

    int st_n = 512, st_s = 10;
    double st_sigma = 1.6;
    auto* st_cmd = app.add_subcommand("squire-trapp",
                                      "Windowed dFDM derivative of x^(9/2) at x = 1.5");
    st_cmd->add_option("--n", st_n, "Grid size")->capture_default_str();
    st_cmd->add_option("--s", st_s, "Super-Gaussian exponent (even)")->capture_default_str();
    st_cmd->add_option("--sigma", st_sigma, "Super-Gaussian width")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_invalid;
    }

    try {
        if (*run_cmd) return run(run_opt);
        if (*conv_cmd) return converge(conv_function, conv_method, conv_ns);
        if (*cmp_cmd) return matrix_compare(cmp_n);
        if (*st_cmd) return squire_trapp(st_n, st_s, st_sigma);
    } catch (const dfdm::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return exit_numerical;
    }
    return exit_invalid;
}
