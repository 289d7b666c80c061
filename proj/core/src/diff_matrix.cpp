#include "dfdm/diff_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dfdm/error.hpp"

namespace dfdm {

std::string_view to_string(MethodTag tag) {
    switch (tag) {
    case MethodTag::dfdm: return "dfdm";
    case MethodTag::sinc_fft: return "sinc_fft";
    case MethodTag::fdm2: return "fdm2";
    }
    return "unknown";
}

DiffMatrix::DiffMatrix(int n, std::vector<double> entries, MethodTag tag)
    : n_(n), entries_(std::move(entries)), tag_(tag) {
    if (n <= 0 || entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        throw InvalidArgument("matrix storage does not match size " + std::to_string(n));
    }
}

DiffMatrix DiffMatrix::circulant(std::span<const double> kernel, MethodTag tag) {
    const int n = static_cast<int>(kernel.size());
    std::vector<double> entries(kernel.size() * kernel.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            entries[static_cast<std::size_t>(i) * kernel.size() + static_cast<std::size_t>(j)] =
                kernel[static_cast<std::size_t>(wrap_index(i - j, n))];
        }
    }
    return DiffMatrix(n, std::move(entries), tag);
}

double DiffMatrix::max_abs_entry() const {
    double m = 0.0;
    for (double e : entries_) m = std::max(m, std::abs(e));
    return m;
}

bool is_circulant(const DiffMatrix& m) {
    const int n = m.n();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (m(i, j) != m(wrap_index(i - j, n), 0)) return false;
        }
    }
    return true;
}

bool is_antisymmetric(const DiffMatrix& m) {
    for (int i = 0; i < m.n(); ++i) {
        for (int j = i; j < m.n(); ++j) {
            if (m(i, j) != -m(j, i)) return false;
        }
    }
    return true;
}

double max_abs_row_sum(const DiffMatrix& m) {
    double worst = 0.0;
    for (int i = 0; i < m.n(); ++i) {
        double s = 0.0;
        for (double e : m.row(i)) s += e;
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

namespace {

template <typename T>
std::vector<double> matvec(const DiffMatrix& m, std::span<const double> f) {
    const auto n = static_cast<std::size_t>(m.n());
    std::vector<T> x(f.begin(), f.end());
    std::vector<double> out(n);
    for (int i = 0; i < m.n(); ++i) {
        const auto row = m.row(i);
        T acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += static_cast<T>(row[j]) * x[j];
        out[static_cast<std::size_t>(i)] = static_cast<double>(acc);
    }
    return out;
}

}  // namespace

GridFunction apply_matrix(const DiffMatrix& m, const GridFunction& f) {
    if (m.n() != f.size()) {
        throw InvalidArgument("matrix of size " + std::to_string(m.n()) +
                              " applied to grid function of size " + std::to_string(f.size()));
    }
    auto out = f.precision() == Precision::bits32 ? matvec<float>(m, f.values())
                                                  : matvec<double>(m, f.values());
    return GridFunction(f.grid(), std::move(out), f.precision());
}

}  // namespace dfdm
