#include <cmath>
#include <cstdio>
#include <sstream>

#include "slisim/codec.hpp"
#include "slisim/experiments.hpp"
#include "slisim/minifloat.hpp"

namespace slisim::experiments {

namespace {

std::string format_value(const TableRow& row) {
    if (row.is_nan) {
        return "NaN";
    }
    if (std::isinf(row.value)) {
        // Past binary64 for SLI words; a genuine infinity for floats.
        if (std::isfinite(row.log10_magnitude)) {
            char buf[48];
            std::snprintf(buf, sizeof buf, "%s10^%.4f", row.value < 0 ? "-" : "", row.log10_magnitude);
            return buf;
        }
        return row.value < 0 ? "-inf" : "inf";
    }
    if (row.value == 0.0 && std::isfinite(row.log10_magnitude)) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "10^%.4f", row.log10_magnitude);
        return buf;
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", row.value);
    return buf;
}

std::string format_log(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v < 0 ? "-inf" : "inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v + 0.0);
    return buf;
}

}  // namespace

std::vector<TableRow> table_rows(std::string_view format_name, bool raw) {
    std::vector<TableRow> rows;
    if (format_name.starts_with("sli")) {
        for (const auto& e : enumerate(SliFormat::parse(format_name), raw)) {
            rows.push_back({e.word.to_string(), e.value, e.log10_magnitude, false});
        }
        return rows;
    }
    for (const auto& p : minifloat::enumerate_floats(minifloat::FloatFormat::parse(format_name))) {
        const double lg = p.is_nan ? std::nan("") : std::log10(std::fabs(p.value));
        rows.push_back({p.bit_string(), p.value, lg, p.is_nan});
    }
    return rows;
}

std::string render_table(std::string_view format_name, bool raw) {
    std::ostringstream out;
    out << "pattern value log10_magnitude\n";
    for (const auto& row : table_rows(format_name, raw)) {
        out << row.pattern << ' ' << format_value(row) << ' ' << format_log(row.log10_magnitude) << '\n';
    }
    return out.str();
}

}  // namespace slisim::experiments
