#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "slisim/arith.hpp"
#include "slisim/codec.hpp"
#include "slisim/experiments.hpp"
#include "slisim/level_index.hpp"
#include "slisim/minifloat.hpp"

namespace slisim::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Format names are user input: any parse failure is a usage error.
experiments::System parse_system(const std::string& name) {
    try {
        return experiments::System::parse(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// MATLAB "format long" style: fixed 15 decimals in the mid range.
std::string format_value(double v) {
    char buf[64];
    if (std::isinf(v)) {
        return v < 0 ? "-Inf" : "Inf";
    }
    const double a = std::fabs(v);
    if (v == 0.0 || (a >= 1e-3 && a < 1e5)) {
        std::snprintf(buf, sizeof buf, "%.15f", v);
    } else {
        std::snprintf(buf, sizeof buf, "%.15e", v);
    }
    return buf;
}

void print_number(std::ostream& out, const SliNumber& n) {
    const SliFormat& fmt = n.format();
    const BitWord w = pack(n);
    const RawFields f = raw_fields(w, fmt);
    char idx[64];
    std::snprintf(idx, sizeof idx, "%.15f", std::ldexp(static_cast<double>(f.index_units), -fmt.index_bits()));
    out << "format: " << fmt.name() << '\n'
        << "level_bits: " << fmt.level_bits() << '\n'
        << "index_bits: " << fmt.index_bits() << '\n'
        << "sign: " << (f.sign == Sign::negative ? 1 : 0) << '\n'
        << "reciprocal: " << (f.reciprocal == Reciprocal::direct ? 1 : 0) << '\n'
        << "level: " << f.level << '\n'
        << "index: " << idx << '\n'
        << "value: " << format_value(decode(n)) << '\n'
        << "log10_magnitude: " << format_value(log10_magnitude(n)) << '\n'
        << "bits: " << w.to_string() << '\n';
}

void print_float(std::ostream& out, const minifloat::FloatFormat& fmt, double v) {
    out << "format: " << fmt.name() << '\n' << "value: " << format_value(v) << '\n';
}

void write_output(const std::string& path, const std::vector<experiments::ErrorRecord>& records,
                  const std::vector<std::string>& columns, std::ostream& out) {
    if (path == "-") {
        experiments::write_dat(out, records, columns);
    } else {
        experiments::emit_dat(records, columns, path);
    }
}

std::vector<experiments::System> systems_for(const std::string& sli, const std::string& flt) {
    std::vector<experiments::System> systems;
    if (!flt.empty()) {
        auto s = parse_system(flt);
        if (s.is_sli()) {
            throw UsageError("--float expects a float format, got '" + flt + "'");
        }
        systems.push_back(std::move(s));
    }
    if (!sli.empty()) {
        auto s = parse_system(sli);
        if (!s.is_sli()) {
            throw UsageError("--sli expects an SLI format, got '" + sli + "'");
        }
        systems.push_back(std::move(s));
    }
    if (systems.empty()) {
        throw UsageError("at least one of --sli / --float is required");
    }
    return systems;
}

// CLI11 reads config files only for the top-level app, so subcommand files
// are applied here. Flags given on the command line take precedence.
void apply_config(CLI::App* sub, const std::string& path) {
    if (path.empty()) {
        return;
    }
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigINI().from_file(path);
    } catch (const CLI::FileError& e) {
        throw UsageError(e.what());
    }
    for (const auto& item : items) {
        if (item.name == "++" || item.name == "--") {
            continue;
        }
        if (!item.parents.empty() && item.parents != std::vector<std::string>{sub->get_name()}) {
            throw UsageError("config key '" + item.fullname() + "' does not belong to '" + sub->get_name() + "'");
        }
        CLI::Option* opt = item.name == "config" ? nullptr : sub->get_option_no_throw("--" + item.name);
        if (opt == nullptr) {
            throw UsageError("unknown config key '" + item.name + "'");
        }
        if (opt->count() > 0) {
            continue;
        }
        opt->add_result(item.inputs);
        opt->run_callback();
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symmetric level-index arithmetic simulator", "slisim"};
    app.require_subcommand(1);

    // table
    std::string table_fmt;
    bool table_raw = false;
    auto* table = app.add_subcommand("table", "List every bit pattern of an SLI or float format");
    table->add_option("format", table_fmt, "e.g. sli2.2u, sli1.3u, toy5")->required();
    table->add_flag("--raw", table_raw, "Decode every SLI word by its fields (no zero convention)");

    // encode
    std::string encode_fmt;
    double encode_value = 0.0;
    auto* enc = app.add_subcommand("encode", "Round a binary64 value into a format and show its fields");
    enc->add_option("format", encode_fmt)->required();
    enc->add_option("value", encode_value)->required();

    // op
    std::string op_name;
    std::string op_fmt;
    double op_x = 0.0;
    double op_y = 0.0;
    auto* op = app.add_subcommand("op", "Apply one arithmetic operation in a format");
    op->add_option("operation", op_name)->required()->check(CLI::IsMember({"add", "sub", "mul", "div"}));
    op->add_option("format", op_fmt)->required();
    op->add_option("x", op_x)->required();
    op->add_option("y", op_y)->required();

    // sweep-repr
    std::string sweep_sli = "sli2.12";
    std::string sweep_float = "binary16";
    double sweep_min = 1e-2;
    double sweep_max = 8.0;
    double sweep_step = 1e-5;
    std::string sweep_out;
    auto* sweep = app.add_subcommand("sweep-repr", "Relative representation error over a range of inputs");
    std::string sweep_config;
    sweep->add_option("--config", sweep_config, "key=value file supplying any of the flags below");
    sweep->add_option("--sli", sweep_sli, "SLI format")->capture_default_str();
    sweep->add_option("--float", sweep_float, "Float format")->capture_default_str();
    sweep->add_option("--min", sweep_min)->capture_default_str();
    sweep->add_option("--max", sweep_max)->capture_default_str();
    sweep->add_option("--step", sweep_step)->capture_default_str();
    sweep->add_option("--out", sweep_out, "Output .dat path, '-' for stdout");

    // matvec
    std::string mv_sli = "sli2.12";
    std::string mv_float = "binary16";
    std::vector<std::size_t> mv_dims{10, 100, 1000};
    double mv_lo = 0.0;
    double mv_hi = 1.0;
    std::uint64_t mv_seed = 1;
    std::string mv_out;
    auto* matvec = app.add_subcommand("matvec", "Backward error of simulated matrix-vector products");
    std::string mv_config;
    matvec->add_option("--config", mv_config, "key=value file supplying any of the flags below");
    matvec->add_option("--sli", mv_sli, "SLI format")->capture_default_str();
    matvec->add_option("--float", mv_float, "Float format")->capture_default_str();
    matvec->add_option("--dims", mv_dims, "Comma-separated ascending dimensions")->delimiter(',');
    matvec->add_option("--lo", mv_lo, "Lower bound of the entries of A")->capture_default_str();
    matvec->add_option("--hi", mv_hi, "Upper bound of the entries of A")->capture_default_str();
    matvec->add_option("--seed", mv_seed)->capture_default_str();
    matvec->add_option("--out", mv_out, "Output .dat path, '-' for stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (*sweep) {
            apply_config(sweep, sweep_config);
        } else if (*matvec) {
            apply_config(matvec, mv_config);
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*table) {
            parse_system(table_fmt);
            out << experiments::render_table(table_fmt, table_raw);
        } else if (*enc) {
            const auto system = parse_system(encode_fmt);
            if (const auto* fmt = std::get_if<SliFormat>(&system.format)) {
                print_number(out, encode(encode_value, *fmt));
            } else {
                const auto& ff = std::get<minifloat::FloatFormat>(system.format);
                print_float(out, ff, minifloat::fl(encode_value, ff));
            }
        } else if (*op) {
            const auto system = parse_system(op_fmt);
            if (const auto* fmt = std::get_if<SliFormat>(&system.format)) {
                const SliNumber x = encode(op_x, *fmt);
                const SliNumber y = encode(op_y, *fmt);
                SliNumber r;
                if (op_name == "add") {
                    r = add(x, y);
                } else if (op_name == "sub") {
                    r = sub(x, y);
                } else if (op_name == "mul") {
                    r = mul(x, y);
                } else {
                    r = div(x, y);
                }
                print_number(out, r);
            } else {
                const auto& ff = std::get<minifloat::FloatFormat>(system.format);
                const double x = minifloat::fl(op_x, ff);
                const double y = minifloat::fl(op_y, ff);
                double r = 0.0;
                if (op_name == "add") {
                    r = minifloat::fl_op(x, y, minifloat::Op::add, ff);
                } else if (op_name == "sub") {
                    r = minifloat::fl_op(x, y, minifloat::Op::sub, ff);
                } else if (op_name == "mul") {
                    r = minifloat::fl_op(x, y, minifloat::Op::mul, ff);
                } else {
                    r = minifloat::fl(x / y, ff);
                }
                print_float(out, ff, r);
            }
        } else if (*sweep) {
            experiments::ExperimentConfig cfg;
            cfg.systems = systems_for(sweep_sli, sweep_float);
            cfg.min = sweep_min;
            cfg.max = sweep_max;
            cfg.step = sweep_step;
            const auto records = experiments::repr_error_sweep(cfg);
            const std::string path =
                sweep_out.empty() ? "representation_" + (sweep_float.empty() ? sweep_sli : sweep_float) + ".dat"
                                  : sweep_out;
            write_output(path, records, cfg.columns("x"), out);
        } else if (*matvec) {
            experiments::ExperimentConfig cfg;
            cfg.systems = systems_for(mv_sli, mv_float);
            cfg.dims = mv_dims;
            cfg.lo = mv_lo;
            cfg.hi = mv_hi;
            cfg.seed = mv_seed;
            const auto records = experiments::matvec_backward_error(cfg);
            const std::string path =
                mv_out.empty() ? "matvec_" + (mv_float.empty() ? mv_sli : mv_float) + ".dat" : mv_out;
            write_output(path, records, cfg.columns("n"), out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace slisim::cli
