#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "slisim/experiments.hpp"

using namespace slisim;
using namespace slisim::experiments;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

ExperimentConfig sli_and_half() {
    ExperimentConfig cfg;
    cfg.systems = {System::parse("binary16"), System::parse("sli2.12")};
    return cfg;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("systems") {
    const System s = System::parse("sli2.12");
    CHECK(s.is_sli());
    CHECK(s.column == "level-index");
    CHECK(s.round(std::numbers::e) == doctest::Approx(std::numbers::e).epsilon(1e-15));
    const System f = System::parse("bfloat16");
    CHECK(!f.is_sli());
    CHECK(f.column == "bfloat16");
    CHECK(f.round(1.0) == 1.0);
    CHECK_THROWS_AS(System::parse("float32"), std::invalid_argument);
    CHECK(sli_and_half().columns("x") == std::vector<std::string>{"x", "binary16", "level-index"});
}

TEST_CASE("representation sweep") {
    ExperimentConfig cfg = sli_and_half();
    cfg.min = 1.0;
    cfg.max = 2.0;
    cfg.step = 0.25;
    const auto recs = repr_error_sweep(cfg);
    REQUIRE(recs.size() == 5);
    CHECK(recs[0].key == 1.0);
    CHECK(recs[4].key == 2.0);
    CHECK(recs[0].errors.at("binary16") == 0.0);
    CHECK(recs[0].errors.at("level-index") == 0.0);
    CHECK(recs[2].errors.at("binary16") == 0.0);

    cfg.min = cfg.max = std::numbers::e;
    CHECK(repr_error_sweep(cfg)[0].errors.at("level-index") <= 1e-15);
}

TEST_CASE("sweep level-1 bound and overflow column") {
    ExperimentConfig cfg = sli_and_half();
    cfg.min = 1.0;
    cfg.max = std::numbers::e - 1e-9;
    cfg.step = 1e-3;
    for (const auto& r : repr_error_sweep(cfg)) {
        CHECK(r.errors.at("level-index") <= 1.01 * std::numbers::e * std::ldexp(1.0, -13));
    }

    cfg.min = 65000.0;
    cfg.max = 66000.0;
    cfg.step = 1.0;
    for (const auto& r : repr_error_sweep(cfg)) {
        CHECK(std::isfinite(r.errors.at("level-index")));
        CHECK(std::isinf(r.errors.at("binary16")) == (r.key >= 65520.0));
    }
}

TEST_CASE("sweep validation") {
    ExperimentConfig cfg = sli_and_half();
    cfg.step = 0.0;
    CHECK_THROWS_AS(repr_error_sweep(cfg), std::invalid_argument);
    cfg.step = 1e-3;
    cfg.min = -1.0;
    CHECK_THROWS_AS(repr_error_sweep(cfg), std::invalid_argument);
    cfg.min = 3.0;
    cfg.max = 2.0;
    CHECK_THROWS_AS(repr_error_sweep(cfg), std::invalid_argument);
    cfg.systems = {System::parse("sli2.12"), System::parse("sli3.11")};
    cfg.min = 1.0;
    CHECK_THROWS_AS(repr_error_sweep(cfg), std::invalid_argument);
    cfg.systems.clear();
    CHECK_THROWS_AS(repr_error_sweep(cfg), std::invalid_argument);
}

TEST_CASE("backward error of a 1x1 product") {
    for (const char* name : {"binary16", "bfloat16", "toy5"}) {
        CHECK(backward_error(System::parse(name), {1.0}, {0.5}) == 0.0);
    }
    // 0.5 itself is not an sli2.12 value; its nearest one is.
    const System sli = System::parse("sli2.12");
    CHECK(backward_error(sli, {1.0}, {0.5}) > 0.0);
    CHECK(backward_error(sli, {1.0}, {sli.round(0.5)}) == 0.0);
    CHECK_THROWS_AS(backward_error(System::parse("sli2.12"), {1.0, 2.0}, {0.5}), std::invalid_argument);
}

TEST_CASE("backward error flags overflow") {
    const std::vector<double> a(4, 10.0);
    CHECK(backward_error(System::parse("toy5"), a, {1.0, 1.0}) == kInf);
    CHECK(std::isfinite(backward_error(System::parse("sli2.12"), a, {1.0, 1.0})));
}

TEST_CASE("matvec") {
    ExperimentConfig cfg = sli_and_half();
    cfg.dims = {1, 8, 32};
    const auto recs = matvec_backward_error(cfg);
    REQUIRE(recs.size() == 3);
    CHECK(recs[1].key == 8.0);
    for (const auto& r : recs) {
        for (const auto& [col, err] : r.errors) {
            CHECK(err >= 0.0);
            CHECK(err < 5e-2);
        }
    }

    cfg.dims = {32, 8};
    CHECK_THROWS_AS(matvec_backward_error(cfg), std::invalid_argument);
    cfg.dims = {0, 8};
    CHECK_THROWS_AS(matvec_backward_error(cfg), std::invalid_argument);
    cfg.dims = {8};
    cfg.lo = 1.0;
    cfg.hi = 1.0;
    CHECK_THROWS_AS(matvec_backward_error(cfg), std::invalid_argument);
}

TEST_CASE("matvec is deterministic and seed-dependent") {
    ExperimentConfig cfg = sli_and_half();
    cfg.dims = {16, 48};
    cfg.hi = 100.0;
    std::ostringstream a;
    std::ostringstream b;
    write_dat(a, matvec_backward_error(cfg), cfg.columns("n"));
    write_dat(b, matvec_backward_error(cfg), cfg.columns("n"));
    CHECK(a.str() == b.str());
    cfg.seed = 2;
    std::ostringstream c;
    write_dat(c, matvec_backward_error(cfg), cfg.columns("n"));
    CHECK(a.str() != c.str());
    CHECK(substream_seed(1, 10) != substream_seed(1, 100));
    CHECK(substream_seed(1, 10) != substream_seed(2, 10));
}

TEST_CASE("dat output") {
    std::vector<ErrorRecord> recs(2);
    recs[0].key = 0.1;
    recs[0].errors = {{"binary16", 1.0 / 3.0}, {"level-index", 0.0}};
    recs[1].key = 10;
    recs[1].errors = {{"binary16", kInf}, {"level-index", 5e-300}};
    const std::vector<std::string> cols{"x", "binary16", "level-index"};

    std::ostringstream out;
    write_dat(out, recs, cols);
    CHECK(out.str() ==
          "x binary16 level-index\n"
          "0.10000000000000001 0.33333333333333331 0\n"
          "10 inf 5e-300\n");

    std::istringstream in(out.str());
    const DatFile dat = read_dat(in);
    CHECK(dat.columns == cols);
    REQUIRE(dat.records.size() == 2);
    CHECK(dat.records[0].key == recs[0].key);
    CHECK(dat.records[0].errors == recs[0].errors);
    CHECK(dat.records[1].errors == recs[1].errors);

    std::ostringstream header_only;
    write_dat(header_only, {}, cols);
    CHECK(header_only.str() == "x binary16 level-index\n");

    std::vector<ErrorRecord> missing(1);
    CHECK_THROWS_AS(write_dat(out, missing, cols), std::invalid_argument);
    std::istringstream bad("x y\n1 2 3\n");
    CHECK_THROWS_AS(read_dat(bad), std::runtime_error);
    std::istringstream junk("x y\n1 z\n");
    CHECK_THROWS_AS(read_dat(junk), std::runtime_error);
}

TEST_CASE("dat files round-trip through disk") {
    ExperimentConfig cfg = sli_and_half();
    cfg.min = 0.01;
    cfg.max = 8.0;
    cfg.step = 1e-2;
    const auto recs = repr_error_sweep(cfg);
    const auto path = std::filesystem::temp_directory_path() / "slisim_roundtrip.dat";
    emit_dat(recs, cfg.columns("x"), path);
    const DatFile dat = read_dat(path);
    REQUIRE(dat.records.size() == recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(dat.records[i].key == recs[i].key);
        CHECK(dat.records[i].errors == recs[i].errors);
    }
    const std::string first = slurp(path);
    emit_dat(repr_error_sweep(cfg), cfg.columns("x"), path);
    CHECK(slurp(path) == first);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(emit_dat(recs, cfg.columns("x"), "/nonexistent-dir/out.dat"), std::runtime_error);
    CHECK_THROWS_AS(read_dat(std::filesystem::path("/nonexistent-dir/out.dat")), std::runtime_error);
}

TEST_CASE("tables") {
    const auto toy = table_rows("toy5", false);
    REQUIRE(toy.size() == 32);
    CHECK(toy[0b01100].value == 1.0);
    CHECK(toy[0b11101].is_nan);

    const std::string rendered = render_table("sli2.2u", true);
    CHECK(rendered.starts_with("pattern value log10_magnitude\n00000 1 0.000000\n"));
    CHECK(rendered.find("11111 10^1758.3818 1758.381778\n") != std::string::npos);
    CHECK(render_table("sli2.2u", false).find("00000 0 -inf\n") != std::string::npos);
    CHECK(render_table("toy5", false).find("11100 inf inf\n") != std::string::npos);
    CHECK_THROWS_AS(table_rows("sli9.9", false), std::invalid_argument);
}
