#include "dfdm/functions.hpp"

#include <charconv>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "dfdm/error.hpp"

namespace dfdm {

namespace {

constexpr double pi = std::numbers::pi;

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InvalidArgument("cannot parse " + std::string(what) + " from '" + std::string(text) +
                              "'");
    }
    return value;
}

}  // namespace

FunctionId parse_function_id(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const std::string_view params =
        colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    FunctionId id;
    auto no_params = [&](FunctionKind kind) {
        if (!params.empty()) {
            throw InvalidArgument("function '" + std::string(name) + "' takes no parameters");
        }
        id.kind = kind;
    };

    if (name == "cos5") {
        no_params(FunctionKind::cos5);
    } else if (name == "cos30") {
        no_params(FunctionKind::cos30);
    } else if (name == "cos1") {
        no_params(FunctionKind::cos1);
    } else if (name == "exp_sin") {
        no_params(FunctionKind::exp_sin);
    } else if (name == "gaussian") {
        id.kind = FunctionKind::gaussian;
        if (!params.empty()) id.delta = parse_number<double>(params, "gaussian delta");
        if (!(id.delta > 0.0)) throw InvalidArgument("gaussian delta must be positive");
    } else if (name == "x92_windowed") {
        id.kind = FunctionKind::x92_windowed;
        if (!params.empty()) {
            const auto comma = params.find(',');
            if (comma == std::string_view::npos) {
                throw InvalidArgument("x92_windowed parameters are 's,sigma'");
            }
            id.window = SuperGaussian(parse_number<int>(params.substr(0, comma), "window exponent"),
                                      parse_number<double>(params.substr(comma + 1), "window width"));
        }
    } else {
        throw InvalidArgument("unknown function id '" + std::string(name) + "'");
    }
    return id;
}

std::string to_string(const FunctionId& id) {
    std::ostringstream os;
    switch (id.kind) {
    case FunctionKind::cos5: return "cos5";
    case FunctionKind::cos30: return "cos30";
    case FunctionKind::cos1: return "cos1";
    case FunctionKind::exp_sin: return "exp_sin";
    case FunctionKind::gaussian: os << "gaussian:" << id.delta; return os.str();
    case FunctionKind::x92_windowed:
        os << "x92_windowed:" << id.window.s() << ',' << id.window.sigma();
        return os.str();
    }
    return "unknown";
}

double squire_trapp_exact() { return 4.5 * std::pow(squire_trapp_point, 3.5); }

// For x < 0 the real part of the principal branch, |x|^4.5 cos(4.5 pi), is exactly 0.
TestFunction x92_function() {
    return {
        [](double x) { return x >= 0.0 ? std::pow(x, 4.5) : 0.0; },
        [](double x) { return x >= 0.0 ? 4.5 * std::pow(x, 3.5) : 0.0; },
        [](std::complex<double> z) { return std::pow(z, 4.5); },
    };
}

TestFunction periodic_function(const FunctionId& id) {
    auto cosine = [](double k) {
        return TestFunction{
            [k](double x) { return std::cos(k * x); },
            [k](double x) { return -k * std::sin(k * x); },
            [k](std::complex<double> z) { return std::cos(k * z); },
        };
    };
    switch (id.kind) {
    case FunctionKind::cos5: return cosine(5.0);
    case FunctionKind::cos30: return cosine(30.0);
    case FunctionKind::cos1: return cosine(1.0);
    case FunctionKind::exp_sin:
        return {
            [](double x) { return std::exp(std::sin(x)); },
            [](double x) { return std::cos(x) * std::exp(std::sin(x)); },
            [](std::complex<double> z) { return std::exp(std::sin(z)); },
        };
    case FunctionKind::gaussian: {
        const double delta = id.delta;
        return {
            [delta](double x) { return std::exp(-(x - pi) * (x - pi) / delta); },
            [delta](double x) {
                return -2.0 * (x - pi) / delta * std::exp(-(x - pi) * (x - pi) / delta);
            },
            std::nullopt,
        };
    }
    case FunctionKind::x92_windowed: {
        const SuperGaussian w = id.window;
        const double shift = squire_trapp_point - pi;
        const TestFunction base = x92_function();
        return {
            [w, shift, base](double x) {
                const double window = super_gaussian(w, x);
                return window > window_floor ? base.value(x + shift) * window : 0.0;
            },
            [w, shift, base](double x) {
                const double window = super_gaussian(w, x);
                if (!(window > window_floor)) return 0.0;
                return base.derivative(x + shift) * window +
                       base.value(x + shift) * super_gaussian_derivative(w, x);
            },
            std::nullopt,
        };
    }
    }
    throw InvalidArgument("unknown function kind");
}

}  // namespace dfdm
