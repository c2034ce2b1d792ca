#include "slisim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "slisim/arith.hpp"
#include "slisim/level_index.hpp"

namespace slisim::experiments {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Splits [0, count) into contiguous chunks, one per hardware thread. Callers
// write to disjoint slots, so results do not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count / 64, 1));
    if (workers == 1) {
        fn(std::size_t{0}, count);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t begin = 0; begin < count; begin += chunk) {
        const std::size_t end = std::min(count, begin + chunk);
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform on the open interval (lo, hi), bit-reproducible across platforms.
double uniform_open(std::mt19937_64& gen, double lo, double hi) {
    const double u = (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

struct SliArithmetic {
    SliFormat fmt;

    using value_type = SliNumber;
    SliNumber from_double(double v) const { return encode(v, fmt); }
    static SliNumber multiply(const SliNumber& a, const SliNumber& b) { return mul(a, b); }
    static SliNumber plus(const SliNumber& a, const SliNumber& b) { return add(a, b); }
    static double to_double(const SliNumber& v) { return decode(v); }
};

struct FloatArithmetic {
    minifloat::FloatFormat fmt;

    using value_type = double;
    double from_double(double v) const { return minifloat::fl(v, fmt); }
    double multiply(double a, double b) const { return minifloat::fl_op(a, b, minifloat::Op::mul, fmt); }
    double plus(double a, double b) const { return minifloat::fl_op(a, b, minifloat::Op::add, fmt); }
    static double to_double(double v) { return v; }
};

// y_hat = A x in the given arithmetic, recursive summation per row.
template <class Arithmetic>
std::vector<double> simulate_matvec(const Arithmetic& ar, const std::vector<double>& a, const std::vector<double>& x) {
    using V = typename Arithmetic::value_type;
    const std::size_t n = x.size();
    std::vector<V> xs;
    xs.reserve(n);
    for (double v : x) {
        xs.push_back(ar.from_double(v));
    }
    std::vector<double> y(n);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const double* row = a.data() + i * n;
            V acc = ar.multiply(ar.from_double(row[0]), xs[0]);
            for (std::size_t j = 1; j < n; ++j) {
                acc = ar.plus(acc, ar.multiply(ar.from_double(row[j]), xs[j]));
            }
            y[i] = ar.to_double(acc);
        }
    });
    return y;
}

void validate_systems(const ExperimentConfig& cfg) {
    if (cfg.systems.empty()) {
        throw std::invalid_argument("experiment needs at least one number system");
    }
    std::set<std::string> seen;
    for (const auto& s : cfg.systems) {
        if (!seen.insert(s.column).second) {
            throw std::invalid_argument("duplicate column '" + s.column + "'");
        }
    }
}

}  // namespace

System System::parse(std::string_view name) {
    if (name.starts_with("sli")) {
        return {"level-index", SliFormat::parse(name)};
    }
    auto fmt = minifloat::FloatFormat::parse(name);
    return {fmt.name(), fmt};
}

double System::round(double x) const {
    if (const auto* sli = std::get_if<SliFormat>(&format)) {
        return decode(encode(x, *sli));
    }
    return minifloat::fl(x, std::get<minifloat::FloatFormat>(format));
}

std::vector<std::string> ExperimentConfig::columns(std::string_view key_column) const {
    std::vector<std::string> out{std::string(key_column)};
    for (const auto& s : systems) {
        out.push_back(s.column);
    }
    return out;
}

std::vector<ErrorRecord> repr_error_sweep(const ExperimentConfig& cfg) {
    validate_systems(cfg);
    if (!(cfg.step > 0.0) || !std::isfinite(cfg.step)) {
        throw std::invalid_argument("sweep step must be positive");
    }
    if (!(cfg.max >= cfg.min) || !std::isfinite(cfg.min) || !std::isfinite(cfg.max)) {
        throw std::invalid_argument("sweep needs finite min <= max");
    }
    if (cfg.min <= 0.0 && cfg.max >= 0.0) {
        throw std::invalid_argument("sweep range must exclude 0 (relative error undefined there)");
    }
    const auto count = static_cast<std::size_t>(std::floor((cfg.max - cfg.min) / cfg.step * (1.0 + 1e-12))) + 1;

    std::vector<ErrorRecord> records(count);
    parallel_for(count, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const double x = cfg.min + static_cast<double>(i) * cfg.step;
            ErrorRecord& r = records[i];
            r.key = x;
            for (const auto& s : cfg.systems) {
                const double approx = s.round(x);
                r.errors[s.column] = std::isfinite(approx) ? std::fabs(approx - x) / std::fabs(x) : kInf;
            }
        }
    });
    return records;
}

double backward_error(const System& system, const std::vector<double>& a, const std::vector<double>& x) {
    const std::size_t n = x.size();
    if (n == 0 || a.size() != n * n) {
        throw std::invalid_argument("backward_error needs a square matrix matching x");
    }
    std::vector<double> y(n, 0.0);
    double norm_a = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row_abs = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            y[i] += a[i * n + j] * x[j];
            row_abs += std::fabs(a[i * n + j]);
        }
        norm_a = std::max(norm_a, row_abs);
    }
    double norm_x = 0.0;
    for (double v : x) {
        norm_x = std::max(norm_x, std::fabs(v));
    }

    std::vector<double> y_hat;
    if (const auto* sli = std::get_if<SliFormat>(&system.format)) {
        y_hat = simulate_matvec(SliArithmetic{*sli}, a, x);
    } else {
        y_hat = simulate_matvec(FloatArithmetic{std::get<minifloat::FloatFormat>(system.format)}, a, x);
    }
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(y_hat[i])) {
            return kInf;
        }
        residual = std::max(residual, std::fabs(y_hat[i] - y[i]));
    }
    return residual / (norm_a * norm_x);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t n) { return splitmix64(seed ^ splitmix64(n)); }

std::vector<ErrorRecord> matvec_backward_error(const ExperimentConfig& cfg) {
    validate_systems(cfg);
    if (cfg.dims.empty() || !std::is_sorted(cfg.dims.begin(), cfg.dims.end()) || cfg.dims.front() == 0) {
        throw std::invalid_argument("matvec dimensions must be positive and sorted ascending");
    }
    if (!(cfg.lo < cfg.hi) || !std::isfinite(cfg.lo) || !std::isfinite(cfg.hi)) {
        throw std::invalid_argument("matvec distribution needs finite lo < hi");
    }

    std::vector<ErrorRecord> records;
    for (std::size_t n : cfg.dims) {
        std::mt19937_64 gen(substream_seed(cfg.seed, n));
        std::vector<double> a(n * n);
        for (double& v : a) {
            v = uniform_open(gen, cfg.lo, cfg.hi);
        }
        std::vector<double> x(n);
        for (double& v : x) {
            v = uniform_open(gen, 0.0, 1.0);
        }

        ErrorRecord rec;
        rec.key = static_cast<double>(n);
        for (const auto& s : cfg.systems) {
            rec.errors[s.column] = backward_error(s, a, x);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace slisim::experiments
