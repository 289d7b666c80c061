#include <doctest.h>

#include <cmath>
#include <limits>

#include "dfdm/error.hpp"
#include "dfdm/operator.hpp"
#include "dfdm/quadrature.hpp"
#include "oracles.hpp"

using namespace dfdm;
using oracle::pi;

namespace {

GridFunction random_function(int n, unsigned seed, Precision p = Precision::bits64) {
    return GridFunction(make_grid(n), oracle::random_values(n, seed), p);
}

double relative_gap(const GridFunction& a, const GridFunction& b) {
    const auto va = oracle::to_vector(a);
    return oracle::max_abs_diff(va, oracle::to_vector(b)) / oracle::max_abs(va);
}

}  // namespace

TEST_SUITE("dfdm_operator") {

TEST_CASE("coefficients on the 8-point grid") {
    const MultiLevelCoeffs c = build_coeffs(make_grid(8));
    REQUIRE(c.levels() == 2);
    CHECK(c.c(1) == doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-15));
    CHECK(c.c(3) == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-15));
    CHECK(c.s(1) == doctest::Approx(std::sin(pi / 8) / (pi / 4)).epsilon(1e-15));
    CHECK(c.s(3) == doctest::Approx(std::sin(3 * pi / 8) / (3 * pi / 4)).epsilon(1e-15));
    const double s1 = std::sin(pi / 8), s3 = std::sin(3 * pi / 8);
    CHECK(c.alpha_n == doctest::Approx(2 / (s1 * s1) + 2 / (s3 * s3)).epsilon(1e-15));
    CHECK_THROWS_AS(c.c(2), InvalidArgument);
    CHECK_THROWS_AS(c.s(5), InvalidArgument);
}

TEST_CASE("coefficient invariants") {
    for (int n : {8, 12, 64, 1024}) {
        const MultiLevelCoeffs c = build_coeffs(make_grid(n));
        CHECK(c.levels() == n / 4);
        CHECK(c.alpha_n > 0);
        double previous = 0.5 + 1e-15;
        for (int i = 0; i < c.levels(); ++i) {
            CHECK(std::isfinite(c.c_d[i]));
            CHECK(c.c_d[i] > 0);
            CHECK(c.s_l[i] > 0);
            CHECK(c.s_l[i] <= previous);
            previous = c.s_l[i];
            CHECK(c.s_l_inv2[i] == doctest::Approx(1 / (c.s_l[i] * c.s_l[i])).epsilon(1e-14));
        }
    }
}

TEST_CASE("second differences") {
    CHECK(second_difference(1, 2, 3, 0.5) == 0.0);
    CHECK(second_difference(0, 0, 1, 1.0) == 1.0);

    const PeriodicGrid g = make_grid(16);
    const GridFunction c = sample([](double) { return 4.0; }, g, Precision::bits64);
    for (int l : {1, 3, 5, 7}) CHECK(second_difference(c, 0, l) == 0.0);
    CHECK_THROWS_AS(second_difference(c, 0, 2), InvalidArgument);
    CHECK_THROWS_AS(second_difference(c, 0, 9), InvalidArgument);
    CHECK_THROWS_AS(second_difference(c, 0, -1), InvalidArgument);

    // Wrapped neighbours: j = 1, l = 3 touches nodes 14, 1, 4.
    const GridFunction r = random_function(16, 3);
    const double expected = (r[14] - 2 * r[1] + r[4]) / std::pow(3 * g.h(), 2);
    CHECK(second_difference(r, 1, 3) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("constants are annihilated by all realizations") {
    for (Precision p : {Precision::bits32, Precision::bits64}) {
        const PeriodicGrid g = make_grid(32);
        const GridFunction c = sample([](double) { return 1.7; }, g, p);
        const GridFunction a = apply_dfdm_direct(c);
        const GridFunction b = apply_dfdm_stencil(c, build_coeffs(g));
        for (int j = 0; j < g.n(); ++j) {
            CHECK(a[j] == 0.0);
            CHECK(b[j] == 0.0);
        }
    }
}

TEST_CASE("N = 12 worked example expands into 18 stencil differences") {
    const PeriodicGrid g = make_grid(12);
    const GridFunction f = random_function(12, 11);
    const double h = g.h();
    auto D2 = [&](int center, int l) {
        auto at = [&](int p) { return f[((p % 12) + 12) % 12]; };
        return (at(center - l) - 2 * at(center) + at(center + l)) / ((l * h) * (l * h));
    };
    auto C = [&](int d) { return 1 / std::tan(h * d / 2); };
    auto S = [&](int l) { return std::sin(h * l / 2) / (h * l); };

    // Centres j +- d for j = 4: {5, 3}, {7, 1}, {9, 11}.
    const int plus[3] = {5, 7, 9};
    const int minus[3] = {3, 1, 11};
    double total = 0.0;
    double with_inverse_s = 0.0;
    int terms = 0;
    for (int i = 0; i < 3; ++i) {
        const int d = 2 * i + 1;
        double inner = 0.0, inner_inv = 0.0;
        for (int l : {1, 3, 5}) {
            inner += (D2(plus[i], l) - D2(minus[i], l)) / (S(l) * S(l));
            inner_inv += (D2(plus[i], l) - D2(minus[i], l)) / S(l);
            terms += 2;
        }
        total += C(d) * inner;
        with_inverse_s += C(d) * inner_inv;
    }
    total *= -2.0 / 144.0;
    with_inverse_s *= -2.0 / 144.0;
    CHECK(terms == 18);

    const double stencil = apply_dfdm_stencil(f, build_coeffs(g))[4];
    const double direct = apply_dfdm_direct(f)[4];
    CHECK(stencil == doctest::Approx(total).epsilon(1e-13));
    CHECK(direct == doctest::Approx(total).epsilon(1e-12));
    // The level weight is S_l^{-2}; a 1/S_l weight does not reproduce the double sum.
    CHECK(std::abs(with_inverse_s - direct) > 1e-3 * std::abs(direct));
}

TEST_CASE("direct form is the composition of the two discrete Hilbert transforms") {
    // f' = -H[H[f']]: feed hilbert_deriv_atr into hilbert_atr.
    for (int n : {8, 16, 32}) {
        const PeriodicGrid g = make_grid(n);
        const GridFunction f = random_function(n, 100 + n);
        std::vector<double> hd(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) hd[static_cast<std::size_t>(k)] = hilbert_deriv_atr(f, k);
        const GridFunction hf(g, hd, Precision::bits64);
        const GridFunction direct = apply_dfdm_direct(f);
        for (int j = 0; j < n; ++j) {
            CHECK(direct[j] == doctest::Approx(-hilbert_atr(hf, j)).epsilon(1e-12).scale(1e-12));
        }
    }
}

TEST_CASE("stencil and matrix forms agree with the direct double sum") {
    for (int n : {8, 12, 16, 32, 64}) {
        const PeriodicGrid g = make_grid(n);
        const MultiLevelCoeffs c = build_coeffs(g);
        const DiffMatrix m = assemble_dfdm_matrix(g, c);
        for (unsigned seed : {1u, 2u, 3u}) {
            const GridFunction f = random_function(n, seed * 31 + n);
            const GridFunction direct = apply_dfdm_direct(f);
            CHECK(relative_gap(direct, apply_dfdm_stencil(f, c)) <= 1e-12);
            CHECK(relative_gap(direct, apply_matrix(m, f)) <= 1e-12);
        }
    }
}

TEST_CASE("dFDM matrix structure") {
    for (int n : {8, 12, 32, 128}) {
        const PeriodicGrid g = make_grid(n);
        const DiffMatrix m = assemble_dfdm_matrix(g, build_coeffs(g));
        CHECK(m.tag() == MethodTag::dfdm);
        CHECK(is_circulant(m));
        CHECK(is_antisymmetric(m));
        CHECK(max_abs_row_sum(m) <= 64 * std::numeric_limits<double>::epsilon() * n * m.max_abs_entry());
        for (int j = 0; j < n; ++j) {
            CHECK(m(j, j) == 0.0);
            CHECK(m(j, wrap_index(j + n / 2, n)) == 0.0);
        }
    }
}

TEST_CASE("matrix columns equal the direct form applied to unit vectors") {
    const int n = 12;
    const PeriodicGrid g = make_grid(n);
    const DiffMatrix m = assemble_dfdm_matrix(g, build_coeffs(g));
    for (int col = 0; col < n; ++col) {
        std::vector<double> e(n, 0.0);
        e[static_cast<std::size_t>(col)] = 1.0;
        const GridFunction out = apply_dfdm_direct(GridFunction(g, e, Precision::bits64));
        for (int row = 0; row < n; ++row) {
            CHECK(std::abs(out[row] - m(row, col)) <= 1e-13 * m.max_abs_entry());
        }
    }
}

TEST_CASE("band-limited modes are differentiated to roundoff") {
    const double eps = std::numeric_limits<double>::epsilon();
    for (int n : {8, 16, 32, 64}) {
        const PeriodicGrid g = make_grid(n);
        const MultiLevelCoeffs c = build_coeffs(g);
        const DiffMatrix m = assemble_dfdm_matrix(g, c);
        for (int k = 1; k < n / 2; ++k) {
            const GridFunction cs = sample([k](double x) { return std::cos(k * x); }, g, Precision::bits64);
            const GridFunction sn = sample([k](double x) { return std::sin(k * x); }, g, Precision::bits64);
            for (const GridFunction& out :
                 {apply_dfdm_direct(cs), apply_dfdm_stencil(cs, c), apply_matrix(m, cs)}) {
                for (int j = 0; j < n; ++j) {
                    CHECK(std::abs(out[j] + k * std::sin(k * g.node(j))) <= 1e3 * eps * n);
                }
            }
            for (const GridFunction& out :
                 {apply_dfdm_direct(sn), apply_dfdm_stencil(sn, c), apply_matrix(m, sn)}) {
                for (int j = 0; j < n; ++j) {
                    CHECK(std::abs(out[j] - k * std::cos(k * g.node(j))) <= 1e3 * eps * n);
                }
            }
        }
    }
}

TEST_CASE("linearity") {
    const int n = 64;
    const PeriodicGrid g = make_grid(n);
    const MultiLevelCoeffs c = build_coeffs(g);
    const auto fv = oracle::random_values(n, 5), gv = oracle::random_values(n, 6);
    const double a = 0.37, b = -2.5;
    std::vector<double> mix(n);
    for (int j = 0; j < n; ++j) mix[j] = a * fv[j] + b * gv[j];
    const GridFunction df = apply_dfdm_stencil(GridFunction(g, fv, Precision::bits64), c);
    const GridFunction dg = apply_dfdm_stencil(GridFunction(g, gv, Precision::bits64), c);
    const GridFunction dm = apply_dfdm_stencil(GridFunction(g, mix, Precision::bits64), c);
    double scale = 0.0;
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(dm[j]));
    for (int j = 0; j < n; ++j) CHECK(std::abs(dm[j] - (a * df[j] + b * dg[j])) <= 1e-12 * scale);
}

TEST_CASE("shift equivariance") {
    for (int n : {16, 64}) {
        const PeriodicGrid g = make_grid(n);
        const MultiLevelCoeffs c = build_coeffs(g);
        const auto v = oracle::random_values(n, 9);
        for (int r : {1, 3, n / 2 + 1}) {
            std::vector<double> rotated(n);
            for (int j = 0; j < n; ++j) rotated[wrap_index(j + r, n)] = v[j];
            const GridFunction d = apply_dfdm_direct(GridFunction(g, v, Precision::bits64));
            const GridFunction dr = apply_dfdm_direct(GridFunction(g, rotated, Precision::bits64));
            const GridFunction sr = apply_dfdm_stencil(GridFunction(g, rotated, Precision::bits64), c);
            double scale = 0.0;
            for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(d[j]));
            for (int j = 0; j < n; ++j) {
                CHECK(std::abs(dr[wrap_index(j + r, n)] - d[j]) <= 1e-12 * scale);
                CHECK(std::abs(sr[wrap_index(j + r, n)] - d[j]) <= 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("spectral convergence on exp(sin x)") {
    std::vector<double> errors;
    for (int n : {8, 16, 32, 64}) {
        const PeriodicGrid g = make_grid(n);
        const GridFunction f = sample([](double x) { return std::exp(std::sin(x)); }, g, Precision::bits64);
        const GridFunction d = apply_dfdm_stencil(f, build_coeffs(g));
        double worst = 0.0;
        for (int j = 0; j < n; ++j) {
            const double x = g.node(j);
            worst = std::max(worst, std::abs(d[j] - std::cos(x) * std::exp(std::sin(x))));
        }
        errors.push_back(worst);
    }
    const double floor = 1e-13;
    for (std::size_t i = 0; i + 1 < errors.size() && errors[i] > floor; ++i) {
        CHECK(std::log10(errors[i + 1]) - std::log10(errors[i]) <= -1.0);
    }
}

TEST_CASE("single-precision roundoff levels") {
    // Order-of-magnitude bands around the single-precision figures.
    auto linf = [](int n, double k, bool stencil) {
        const PeriodicGrid g = make_grid(n);
        const GridFunction f = sample([k](double x) { return std::cos(k * x); }, g, Precision::bits32);
        const GridFunction d = stencil ? apply_dfdm_stencil(f, build_coeffs(g)) : apply_dfdm_direct(f);
        double worst = 0.0;
        for (int j = 0; j < n; ++j) worst = std::max(worst, std::abs(d[j] + k * std::sin(k * g.node(j))));
        return worst;
    };
    for (bool stencil : {true, false}) {
        const double e5 = linf(32, 5, stencil);
        CHECK(e5 >= 1.4e-7);
        CHECK(e5 <= 1.4e-5);
        const double e30 = linf(64, 30, stencil);
        CHECK(e30 >= 8.1e-7);
        CHECK(e30 <= 8.1e-5);
    }
}

TEST_CASE("dFDM matrix in single precision") {
    auto linf = [](int n, auto f, auto df) {
        const PeriodicGrid g = make_grid(n);
        const GridFunction s = sample(f, g, Precision::bits32);
        const GridFunction d = apply_matrix(assemble_dfdm_matrix(g, build_coeffs(g)), s);
        double worst = 0.0;
        for (int j = 0; j < n; ++j) worst = std::max(worst, std::abs(d[j] - df(g.node(j))));
        return worst;
    };
    const double cos_err = linf(
        4096, [](double x) { return std::cos(x); }, [](double x) { return -std::sin(x); });
    CHECK(cos_err >= 7e-6);
    CHECK(cos_err <= 1e-3);
    const double gauss_err = linf(
        512, [](double x) { return std::exp(-(x - pi) * (x - pi) / 0.3); },
        [](double x) { return -2 * (x - pi) / 0.3 * std::exp(-(x - pi) * (x - pi) / 0.3); });
    CHECK(gauss_err >= 7.8e-7);
    CHECK(gauss_err <= 7.8e-5);
}

TEST_CASE("apply_matrix checks sizes") {
    const DiffMatrix zero(8, std::vector<double>(64, 0.0), MethodTag::dfdm);
    const GridFunction f = random_function(8, 1);
    const GridFunction product = apply_matrix(zero, f);
    for (double v : product.values()) CHECK(v == 0.0);
    const DiffMatrix other = assemble_dfdm_matrix(make_grid(12), build_coeffs(make_grid(12)));
    CHECK_THROWS_AS(apply_matrix(other, f), InvalidArgument);
    CHECK_THROWS_AS(apply_dfdm_stencil(f, build_coeffs(make_grid(12))), InvalidArgument);
}

}
