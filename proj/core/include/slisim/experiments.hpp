#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "slisim/format.hpp"
#include "slisim/minifloat.hpp"

namespace slisim::experiments {

// A number system under test and the .dat column it reports into.
struct System {
    std::string column;
    std::variant<SliFormat, minifloat::FloatFormat> format;

    // SLI names ("sli2.12") report as "level-index", float names as themselves.
    static System parse(std::string_view name);

    bool is_sli() const noexcept { return std::holds_alternative<SliFormat>(format); }

    // Nearest value of the system, as binary64: decode(encode(x)) or fl(x).
    double round(double x) const;
};

struct ErrorRecord {
    double key = 0.0;                       // sample x, or matrix dimension n
    std::map<std::string, double> errors;   // column -> error; +inf flags overflow
};

struct ExperimentConfig {
    std::vector<System> systems;

    // Representation sweep: samples min, min + step, ... up to max.
    double min = 1e-2;
    double max = 8.0;
    double step = 1e-5;

    // Matrix-vector experiment: A uniform on (lo, hi), x uniform on (0, 1).
    std::vector<std::size_t> dims{10, 100, 1000};
    double lo = 0.0;
    double hi = 1.0;
    std::uint64_t seed = 1;

    // Column order for .dat output: key column first, then the systems.
    std::vector<std::string> columns(std::string_view key_column) const;
};

// Relative representation error |round(x) - x| / |x| per system.
// Throws std::invalid_argument if step <= 0, max < min, or 0 lies in [min, max].
std::vector<ErrorRecord> repr_error_sweep(const ExperimentConfig& cfg);

// Normwise backward error ||y_hat - y||_inf / (||A||_inf ||x||_inf) of y = A x
// with every input rounded into the system and every product and running-sum
// addition done in the system's arithmetic (left-to-right accumulation). The
// reference y is binary64. A non-finite component of y_hat records +inf.
// Throws std::invalid_argument for unsorted or zero dimensions or lo >= hi.
std::vector<ErrorRecord> matvec_backward_error(const ExperimentConfig& cfg);

// The same measurement for one system and an explicit row-major n x n matrix.
// Throws std::invalid_argument if a.size() != x.size()^2 or x is empty.
double backward_error(const System& system, const std::vector<double>& a, const std::vector<double>& x);

// Seed of the independent stream used for dimension n.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t n);

// Header of column names, then one row per record, 17 significant digits,
// non-finite entries written as "inf".
void write_dat(std::ostream& out, const std::vector<ErrorRecord>& records, const std::vector<std::string>& columns);
// Throws std::runtime_error on I/O failure.
void emit_dat(const std::vector<ErrorRecord>& records, const std::vector<std::string>& columns,
              const std::filesystem::path& path);

struct DatFile {
    std::vector<std::string> columns;
    std::vector<ErrorRecord> records;
};

// Parses emit_dat output. Throws std::runtime_error on malformed input.
DatFile read_dat(std::istream& in);
DatFile read_dat(const std::filesystem::path& path);

// Exhaustive table of an SLI ("sli2.2u") or float ("toy5") format, one row per
// bit pattern. `raw` skips the SLI zero convention.
struct TableRow {
    std::string pattern;
    double value = 0.0;
    double log10_magnitude = 0.0;
    bool is_nan = false;
};

std::vector<TableRow> table_rows(std::string_view format_name, bool raw);
std::string render_table(std::string_view format_name, bool raw);

}  // namespace slisim::experiments
