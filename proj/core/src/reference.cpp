#include "dfdm/reference.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "dfdm/error.hpp"

namespace dfdm {

namespace {

void require_positive_step(double h) {
    if (!(h > 0.0)) throw InvalidArgument("step must be positive, got " + std::to_string(h));
}

// Multiplier for FFT bin `i` of an n-point transform, including the 1/n normalization.
std::complex<double> derivative_symbol(int i, int n, NyquistMode nyquist) {
    if (2 * i == n) {
        return nyquist == NyquistMode::zero ? 0.0 : 0.5;
    }
    const int k = 2 * i < n ? i : i - n;
    return {0.0, static_cast<double>(k) / n};
}

template <typename Real, typename Complex, typename Plan, typename Api>
std::vector<double> fft_derivative(const GridFunction& f, NyquistMode nyquist, Api api) {
    const int n = f.size();
    auto free_buffer = [api](Complex* p) { api.free(p); };
    std::unique_ptr<Complex[], decltype(free_buffer)> in(api.alloc(n), free_buffer);
    std::unique_ptr<Complex[], decltype(free_buffer)> spec(api.alloc(n), free_buffer);
    if (!in || !spec) throw NumericalError("FFT buffer allocation failed");

    auto destroy = [api](Plan p) { api.destroy(p); };
    std::unique_ptr<std::remove_pointer_t<Plan>, decltype(destroy)> forward(
        api.plan(n, in.get(), spec.get(), FFTW_FORWARD), destroy);
    std::unique_ptr<std::remove_pointer_t<Plan>, decltype(destroy)> backward(
        api.plan(n, spec.get(), in.get(), FFTW_BACKWARD), destroy);

    for (int j = 0; j < n; ++j) {
        in[j][0] = static_cast<Real>(f[j]);
        in[j][1] = Real(0);
    }
    api.execute(forward.get());
    for (int i = 0; i < n; ++i) {
        const std::complex<double> symbol = derivative_symbol(i, n, nyquist);
        const auto sr = static_cast<Real>(symbol.real());
        const auto si = static_cast<Real>(symbol.imag());
        const Real re = spec[i][0];
        const Real im = spec[i][1];
        spec[i][0] = sr * re - si * im;
        spec[i][1] = sr * im + si * re;
    }
    api.execute(backward.get());

    std::vector<double> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = static_cast<double>(in[j][0]);
    return out;
}

struct DoubleApi {
    static fftw_complex* alloc(int n) { return fftw_alloc_complex(static_cast<std::size_t>(n)); }
    static void free(fftw_complex* p) { fftw_free(p); }
    static fftw_plan plan(int n, fftw_complex* a, fftw_complex* b, int sign) {
        return fftw_plan_dft_1d(n, a, b, sign, FFTW_ESTIMATE);
    }
    static void execute(fftw_plan p) { fftw_execute(p); }
    static void destroy(fftw_plan p) { fftw_destroy_plan(p); }
};

struct FloatApi {
    static fftwf_complex* alloc(int n) { return fftwf_alloc_complex(static_cast<std::size_t>(n)); }
    static void free(fftwf_complex* p) { fftwf_free(p); }
    static fftwf_plan plan(int n, fftwf_complex* a, fftwf_complex* b, int sign) {
        return fftwf_plan_dft_1d(n, a, b, sign, FFTW_ESTIMATE);
    }
    static void execute(fftwf_plan p) { fftwf_execute(p); }
    static void destroy(fftwf_plan p) { fftwf_destroy_plan(p); }
};

}  // namespace

DiffMatrix fdm2_matrix(const PeriodicGrid& grid) {
    std::vector<double> kernel(static_cast<std::size_t>(grid.n()), 0.0);
    const double w = 1.0 / (2.0 * grid.h());
    kernel[1] = -w;                                          // (j, j-1)
    kernel[static_cast<std::size_t>(grid.n() - 1)] = w;      // (j, j+1)
    return DiffMatrix::circulant(kernel, MethodTag::fdm2);
}

DiffMatrix sinc_diff_matrix(const PeriodicGrid& grid) {
    const int n = grid.n();
    const double h = grid.h();
    std::vector<double> kernel(static_cast<std::size_t>(n), 0.0);
    for (int k = 1; k < n / 2; ++k) {
        const double x = k * h / 2.0;
        const double value = 0.5 * (k % 2 == 0 ? 1.0 : -1.0) * std::cos(x) / std::sin(x);
        kernel[static_cast<std::size_t>(k)] = value;
        kernel[static_cast<std::size_t>(n - k)] = -value;
    }
    return DiffMatrix::circulant(kernel, MethodTag::sinc_fft);
}

// FFTW planning is not thread-safe; callers running cases in parallel must serialize
// calls into this function.
GridFunction dft_derivative(const GridFunction& f, NyquistMode nyquist) {
    auto out = f.precision() == Precision::bits32
                   ? fft_derivative<float, fftwf_complex, fftwf_plan>(f, nyquist, FloatApi{})
                   : fft_derivative<double, fftw_complex, fftw_plan>(f, nyquist, DoubleApi{});
    return GridFunction(f.grid(), std::move(out), f.precision());
}

double complex_step(const ComplexScalarFunction& F, double x0, double h) {
    require_positive_step(h);
    const std::complex<double> value = F({x0, h});
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw NumericalError("complex evaluation is not finite at " + std::to_string(x0) + " + " +
                             std::to_string(h) + "i");
    }
    return value.imag() / h;
}

double fd2_pointwise(const ScalarFunction& f, double x0, double h) {
    require_positive_step(h);
    const double right = f(x0 + h);
    const double left = f(x0 - h);
    if (!std::isfinite(right) || !std::isfinite(left)) {
        throw NumericalError("function is not finite near " + std::to_string(x0));
    }
    return (right - left) / (2.0 * h);
}

}  // namespace dfdm
