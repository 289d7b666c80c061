#include "dfdm/experiments.hpp"

#include <array>
#include <charconv>

#include "dfdm/error.hpp"

namespace dfdm {

std::string format_number(double value, int digits) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, digits);
    if (ec != std::errc{}) throw NumericalError("cannot format number");
    return std::string(buf.data(), ptr);
}

std::string to_csv(const CaseReport& report) {
    const int digits = report.spec.precision == Precision::bits32 ? 9 : 17;
    std::string out(csv_header);
    out += '\n';
    for (std::size_t i = 0; i < report.x.size(); ++i) {
        for (double v : {report.x[i], report.f[i], report.fprime_exact[i], report.fprime_method[i],
                         report.pointwise_error[i]}) {
            out += format_number(v, digits);
            out += ',';
        }
        out.back() = '\n';
    }
    return out;
}

std::vector<CsvRow> parse_csv(std::string_view text) {
    std::vector<CsvRow> rows;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line_no == 1) {
            if (line != csv_header) throw InvalidArgument("unexpected CSV header");
            continue;
        }
        if (line.empty()) continue;

        std::array<double, 5> v{};
        for (std::size_t k = 0; k < v.size(); ++k) {
            const auto comma = line.find(',');
            const std::string_view field = line.substr(0, comma);
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v[k]);
            if (ec != std::errc{} || ptr != field.data() + field.size() ||
                (k + 1 < v.size()) == (comma == std::string_view::npos)) {
                throw InvalidArgument("malformed CSV line " + std::to_string(line_no));
            }
            line = comma == std::string_view::npos ? std::string_view{} : line.substr(comma + 1);
        }
        rows.push_back({v[0], v[1], v[2], v[3], v[4]});
    }
    return rows;
}

}  // namespace dfdm
