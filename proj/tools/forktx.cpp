#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "forktx/config.hpp"
#include "forktx/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitSolver = 2;
constexpr int kExitIo = 3;

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open \"" + path + "\" for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoFailure("error while reading \"" + path + "\"");
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot open \"" + path + "\" for writing");
    out << text;
    out.flush();
    if (!out) throw IoFailure("error while writing \"" + path + "\"");
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        spill(out_path, text);
}

forktx::SpectrumResult run_one_spectrum(const forktx::DeviceConfig& device,
                                        const forktx::RunConfig& cfg) {
    const auto grid = forktx::voltage_grid(cfg.v_min, cfg.v_max, cfg.v_points);
    return forktx::spectrum(device, grid);
}

std::string spectrum_text(const forktx::RunConfig& cfg) {
    // With --compare the quantum columns come first, then the classical
    // group, whatever mode the config asked for.
    if (cfg.compare) {
        forktx::DeviceConfig quantum = cfg.device;
        quantum.mode = forktx::CoherenceMode::quantum;
        forktx::DeviceConfig classical = cfg.device;
        classical.mode = forktx::CoherenceMode::classical;
        const auto main = run_one_spectrum(quantum, cfg);
        const auto side = run_one_spectrum(classical, cfg);
        std::ostringstream ss;
        forktx::write_spectrum_table(ss, cfg, main, &side);
        return ss.str();
    }
    const auto main = run_one_spectrum(cfg.device, cfg);
    std::ostringstream ss;
    forktx::write_spectrum_table(ss, cfg, main, nullptr);
    return ss.str();
}

forktx::AxisSpec parse_axis(const std::string& text, const std::string& flag) {
    forktx::AxisSpec axis;
    char c1 = 0, c2 = 0;
    std::istringstream ss(text);
    if (!(ss >> axis.lo >> c1 >> axis.hi >> c2 >> axis.points) || c1 != ':' ||
        c2 != ':' || !ss.eof())
        throw forktx::ConfigError("braess: " + flag +
                                  " expects min:max:points, got \"" + text + "\"");
    return axis;
}

int cmd_spectrum(const std::string& config_path, const std::string& out_path,
                 bool compare) {
    forktx::RunConfig cfg = forktx::parse_config(slurp(config_path));
    cfg.compare = compare;
    emit(out_path, spectrum_text(cfg));
    return kExitOk;
}

int cmd_braess(const std::string& k2, const std::string& k3, const std::string& k,
               const std::string& out_path, const std::string& format) {
    if (format != "csv" && format != "tsv")
        throw forktx::ConfigError("braess: --format must be csv or tsv");
    const auto scan =
        forktx::braess_scan(parse_axis(k2, "--k2"), parse_axis(k3, "--k3"),
                            parse_axis(k, "--K"));
    std::ostringstream ss;
    forktx::write_braess_table(ss, scan,
                               format == "csv" ? forktx::TableFormat::csv
                                               : forktx::TableFormat::tsv);
    emit(out_path, ss.str());
    return kExitOk;
}

int cmd_validate() {
    const auto reports = forktx::run_validation_checks();
    bool all_passed = true;
    for (const auto& r : reports) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name
                  << ": max error " << forktx::format_number(r.max_error)
                  << " (threshold " << forktx::format_number(r.threshold) << ")\n";
        all_passed = all_passed && r.passed;
    }
    std::cout << "[info] particle-hole asymmetry of the kernel: K=0 -> "
              << forktx::format_number(forktx::particle_hole_asymmetry(0.0))
              << ", K=3 -> "
              << forktx::format_number(forktx::particle_hole_asymmetry(3.0))
              << " (not a pass/fail check)\n";
    return all_passed ? kExitOk : kExitValidation;
}

int cmd_figure(const std::string& id, const std::string& dir) {
    namespace fs = std::filesystem;
    const auto presets = forktx::figure_presets(id);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoFailure("cannot create directory \"" + dir + "\"");

    for (const auto& preset : presets) {
        forktx::RunConfig cfg = forktx::parse_config(preset.config_json);
        cfg.compare = preset.compare;
        const auto base = fs::path(dir) / preset.stem;
        spill(base.string() + ".json", preset.config_json);
        spill(base.string() + ".csv", spectrum_text(cfg));
        std::cout << "wrote " << base.string() << ".json, " << base.string()
                  << ".csv\n";
    }
    const auto script = fs::path(dir) / ("fig" + id + ".gp");
    spill(script.string(), forktx::gnuplot_script(id, presets));
    std::cout << "wrote " << script.string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "forktx - phase-coherent transport through a Y-shaped junction with "
        "superconducting arms"};
    app.require_subcommand(1);

    auto* sp = app.add_subcommand("spectrum",
                                  "Differential conductance spectrum as CSV/TSV");
    std::string config_path, out_path;
    bool compare = false;
    sp->add_option("--config", config_path, "JSON config file")->required();
    sp->add_option("--out", out_path, "output file (default: stdout)");
    sp->add_flag("--compare", compare,
                 "append the classical column group next to the quantum one");

    auto* br = app.add_subcommand(
        "braess", "Scan coherent vs incoherent escape probabilities");
    std::string k2_spec, k3_spec, k_spec, braess_out, braess_format = "csv";
    br->add_option("--k2", k2_spec, "k2 axis as min:max:points")->required();
    br->add_option("--k3", k3_spec, "k3 axis as min:max:points")->required();
    br->add_option("--K", k_spec, "barrier axis as min:max:points")->required();
    br->add_option("--out", braess_out, "output file (default: stdout)");
    br->add_option("--format", braess_format, "csv or tsv (default csv)");

    auto* va = app.add_subcommand("validate",
                                  "Run the cross-module consistency checks");

    auto* fg = app.add_subcommand(
        "figure", "Emit a preset config, its CSV and a gnuplot script");
    std::string figure_id, figure_dir = ".";
    fg->add_option("id", figure_id, "one of: 2a, 2b, 3a, 3b")->required();
    fg->add_option("--dir", figure_dir, "output directory (default: .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (sp->parsed()) return cmd_spectrum(config_path, out_path, compare);
        if (br->parsed())
            return cmd_braess(k2_spec, k3_spec, k_spec, braess_out, braess_format);
        if (va->parsed()) return cmd_validate();
        if (fg->parsed()) return cmd_figure(figure_id, figure_dir);
    } catch (const forktx::SingularLoop& e) {
        std::cerr << "error: solver hit a bound-state energy at eV = "
                  << forktx::format_number(e.energy()) << " (|det| = "
                  << forktx::format_number(e.det_magnitude()) << ")\n";
        return kExitSolver;
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        // DomainError / ConfigError / bad numbers
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
