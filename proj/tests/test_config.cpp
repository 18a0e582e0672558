#include <sstream>

#include "doctest.h"
#include "forktx/config.hpp"

using forktx::parse_config;
using forktx::RunConfig;

TEST_CASE("parse_config: empty object yields the full default run") {
    const RunConfig cfg = parse_config("{}");
    CHECK(cfg.device.vertex.wavenumbers == std::vector<double>{1.0, 1.0, 1.0});
    CHECK(cfg.device.vertex.barrier == 0.0);
    CHECK(cfg.device.gaps.gaps == std::vector<double>{1.0, 1.0});
    CHECK(cfg.device.mode == forktx::CoherenceMode::quantum);
    CHECK(cfg.device.temperature == 0.0);
    CHECK(cfg.v_min == -3.0);
    CHECK(cfg.v_max == 3.0);
    CHECK(cfg.v_points == 601);
    CHECK(cfg.format == forktx::TableFormat::csv);
    CHECK(cfg.device.gaps.above_gap == forktx::AboveGap::continuation);
}

TEST_CASE("parse_config: unequal-gap run") {
    const RunConfig cfg = parse_config(R"({"delta3": 2.0})");
    CHECK(cfg.device.gaps.gaps == std::vector<double>{1.0, 2.0});
}

TEST_CASE("parse_config: value errors name the key") {
    CHECK_THROWS_WITH_AS(parse_config(R"({"k2": -1})"),
                         doctest::Contains("k2"), forktx::DomainError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"delta2": -0.5})"),
                         doctest::Contains("delta2"), forktx::DomainError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"v_points": 1})"),
                         doctest::Contains("v_points"), forktx::DomainError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"T": -0.1})"), doctest::Contains("T"),
                         forktx::DomainError);
    CHECK_THROWS_AS(parse_config(R"({"v_min": 2, "v_max": -2})"),
                    forktx::DomainError);
}

TEST_CASE("parse_config: schema errors name the key") {
    CHECK_THROWS_WITH_AS(parse_config(R"({"k4": 1.0})"), doctest::Contains("k4"),
                         forktx::ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"mode": "both"})"),
                         doctest::Contains("mode"), forktx::ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"k2": "fast"})"),
                         doctest::Contains("k2"), forktx::ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"v_points": 10.5})"),
                         doctest::Contains("v_points"), forktx::ConfigError);
    CHECK_THROWS_AS(parse_config("not json"), forktx::ConfigError);
    CHECK_THROWS_AS(parse_config("[1, 2]"), forktx::ConfigError);
}

TEST_CASE("parse_config: mode, format and above_gap strings") {
    CHECK(parse_config(R"({"mode": "classical"})").device.mode ==
          forktx::CoherenceMode::classical);
    CHECK(parse_config(R"({"format": "tsv"})").format == forktx::TableFormat::tsv);
    CHECK(parse_config(R"({"above_gap": "cutoff"})").device.gaps.above_gap ==
          forktx::AboveGap::cutoff);
}

TEST_CASE("format_number: 12 significant digits, locale independent") {
    CHECK(forktx::format_number(8.0 / 9.0) == "0.888888888889");
    CHECK(forktx::format_number(1.0) == "1");
    CHECK(forktx::format_number(-0.5) == "-0.5");
}

TEST_CASE("write_spectrum_table: header and row count") {
    const RunConfig cfg = parse_config(R"({"v_points": 2, "v_min": 0, "v_max": 1})");
    const auto grid = forktx::voltage_grid(cfg.v_min, cfg.v_max, cfg.v_points);
    const auto spec = forktx::spectrum(cfg.device, grid);
    std::ostringstream os;
    forktx::write_spectrum_table(os, cfg, spec, nullptr);
    const std::string text = os.str();
    CHECK(text.rfind("V_over_Delta,g,g_over_gN,A,B\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);  // header + 2 rows
}

TEST_CASE("write_spectrum_table: comparison group appends _classical columns") {
    RunConfig cfg = parse_config(R"({"v_points": 2, "v_min": 0, "v_max": 1})");
    cfg.compare = true;
    const auto grid = forktx::voltage_grid(cfg.v_min, cfg.v_max, cfg.v_points);
    const auto quantum = forktx::spectrum(cfg.device, grid);
    forktx::DeviceConfig classical = cfg.device;
    classical.mode = forktx::CoherenceMode::classical;
    const auto side = forktx::spectrum(classical, grid);
    std::ostringstream os;
    forktx::write_spectrum_table(os, cfg, quantum, &side);
    CHECK(os.str().rfind("V_over_Delta,g,g_over_gN,A,B,g_classical,"
                         "g_over_gN_classical,A_classical,B_classical\n",
                         0) == 0);
}

TEST_CASE("write_braess_table: rows plus the summary comment") {
    const auto scan = forktx::braess_scan({1.0, 1.0, 1}, {1.0, 1.0, 1}, {0.0, 0.0, 1});
    std::ostringstream os;
    forktx::write_braess_table(os, scan, forktx::TableFormat::csv);
    const std::string text = os.str();
    CHECK(text.rfind("k2,k3,K,D_quantum,D_classical,paradox\n", 0) == 0);
    CHECK(text.find("1,1,0,0.888888888889,1,true") != std::string::npos);
    CHECK(text.find("# paradox_fraction = 1") != std::string::npos);
}

TEST_CASE("figure_presets: known ids come with configs and a plot script") {
    for (const std::string id : {"2a", "2b", "3a", "3b"}) {
        const auto presets = forktx::figure_presets(id);
        CHECK(!presets.empty());
        for (const auto& p : presets) CHECK_NOTHROW(parse_config(p.config_json));
        const auto script = forktx::gnuplot_script(id, presets);
        CHECK(script.find(presets.front().stem + ".csv") != std::string::npos);
    }
    CHECK_THROWS_AS(forktx::figure_presets("9z"), forktx::ConfigError);
}
