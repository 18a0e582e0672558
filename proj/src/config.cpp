#include "forktx/config.hpp"

#include <cstdio>
#include <ostream>
#include <set>

#include "json.hpp"

namespace forktx {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {
    "k2",    "k3",    "K",     "delta2",   "delta3", "mode",
    "T",     "v_min", "v_max", "v_points", "format", "above_gap"};

double number_or(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_number())
        throw ConfigError(std::string("config: key \"") + key + "\" must be a number");
    return v.get<double>();
}

int integer_or(const json& j, const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_number_integer())
        throw ConfigError(std::string("config: key \"") + key +
                          "\" must be an integer");
    return v.get<int>();
}

std::string string_or(const json& j, const char* key, const std::string& fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_string())
        throw ConfigError(std::string("config: key \"") + key + "\" must be a string");
    return v.get<std::string>();
}

void require_positive(double v, const char* key) {
    if (!(v > 0.0))
        throw DomainError(std::string("config: key \"") + key + "\" must be > 0");
}

void require_nonnegative(double v, const char* key) {
    if (!(v >= 0.0))
        throw DomainError(std::string("config: key \"") + key + "\" must be >= 0");
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ConfigError("config: top level must be a JSON object");
    for (const auto& item : doc.items())
        if (!kKnownKeys.count(item.key()))
            throw ConfigError("config: unknown key \"" + item.key() + "\"");

    const double k2 = number_or(doc, "k2", 1.0);
    const double k3 = number_or(doc, "k3", 1.0);
    const double barrier = number_or(doc, "K", 0.0);
    const double delta2 = number_or(doc, "delta2", 1.0);
    const double delta3 = number_or(doc, "delta3", 1.0);
    const double temperature = number_or(doc, "T", 0.0);
    const double v_min = number_or(doc, "v_min", -3.0);
    const double v_max = number_or(doc, "v_max", 3.0);
    const int v_points = integer_or(doc, "v_points", 601);
    const std::string mode = string_or(doc, "mode", "quantum");
    const std::string format = string_or(doc, "format", "csv");
    const std::string above_gap = string_or(doc, "above_gap", "continuation");

    require_positive(k2, "k2");
    require_positive(k3, "k3");
    require_nonnegative(barrier, "K");
    require_nonnegative(delta2, "delta2");
    require_nonnegative(delta3, "delta3");
    require_nonnegative(temperature, "T");
    if (v_points < 2)
        throw DomainError("config: key \"v_points\" must be >= 2");
    if (!(v_min < v_max))
        throw DomainError("config: require v_min < v_max");

    RunConfig cfg;
    cfg.device.vertex = {{1.0, k2, k3}, barrier};
    cfg.device.gaps.gaps = {delta2, delta3};
    cfg.device.temperature = temperature;
    cfg.v_min = v_min;
    cfg.v_max = v_max;
    cfg.v_points = v_points;

    if (mode == "quantum")
        cfg.device.mode = CoherenceMode::quantum;
    else if (mode == "classical")
        cfg.device.mode = CoherenceMode::classical;
    else
        throw ConfigError("config: key \"mode\" must be \"quantum\" or \"classical\"");

    if (format == "csv")
        cfg.format = TableFormat::csv;
    else if (format == "tsv")
        cfg.format = TableFormat::tsv;
    else
        throw ConfigError("config: key \"format\" must be \"csv\" or \"tsv\"");

    if (above_gap == "continuation")
        cfg.device.gaps.above_gap = AboveGap::continuation;
    else if (above_gap == "cutoff")
        cfg.device.gaps.above_gap = AboveGap::cutoff;
    else
        throw ConfigError(
            "config: key \"above_gap\" must be \"continuation\" or \"cutoff\"");

    cfg.device.validate();
    return cfg;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {
char separator(TableFormat format) {
    return format == TableFormat::csv ? ',' : '\t';
}
}  // namespace

void write_spectrum_table(std::ostream& os, const RunConfig& cfg,
                          const SpectrumResult& main, const SpectrumResult* side) {
    const char sep = separator(cfg.format);
    os << "V_over_Delta" << sep << "g" << sep << "g_over_gN" << sep << "A" << sep
       << "B";
    if (side)
        os << sep << "g_classical" << sep << "g_over_gN_classical" << sep
           << "A_classical" << sep << "B_classical";
    os << '\n';

    for (std::size_t i = 0; i < main.voltages.size(); ++i) {
        os << format_number(main.voltages[i]) << sep << format_number(main.kernel[i])
           << sep << format_number(main.normalized[i]) << sep
           << format_number(main.andreev_prob[i]) << sep
           << format_number(main.normal_prob[i]);
        if (side)
            os << sep << format_number(side->kernel[i]) << sep
               << format_number(side->normalized[i]) << sep
               << format_number(side->andreev_prob[i]) << sep
               << format_number(side->normal_prob[i]);
        os << '\n';
    }
}

void write_braess_table(std::ostream& os, const BraessScan& scan,
                        TableFormat format) {
    const char sep = separator(format);
    os << "k2" << sep << "k3" << sep << "K" << sep << "D_quantum" << sep
       << "D_classical" << sep << "paradox" << '\n';
    for (const BraessPoint& p : scan.points) {
        os << format_number(p.k2) << sep << format_number(p.k3) << sep
           << format_number(p.barrier) << sep << format_number(p.d_quantum) << sep
           << format_number(p.d_classical) << sep << (p.paradox ? "true" : "false")
           << '\n';
    }
    os << "# paradox_fraction = " << format_number(scan.paradox_fraction) << '\n';
}

namespace {

std::string device_json(double k2, double k3, double barrier, double delta3) {
    json doc;
    doc["k2"] = k2;
    doc["k3"] = k3;
    doc["K"] = barrier;
    doc["delta2"] = 1.0;
    doc["delta3"] = delta3;
    doc["mode"] = "quantum";
    doc["T"] = 0.0;
    doc["v_min"] = -3.0;
    doc["v_max"] = 3.0;
    doc["v_points"] = 601;
    return doc.dump(2) + "\n";
}

}  // namespace

std::vector<FigurePreset> figure_presets(const std::string& id) {
    // Demo parameter sets. Equal gaps for the 2a family, a 2:1 gap ratio
    // for the rest; K = 3 stands in for the "strong barrier" curves.
    if (id == "2a")
        return {
            {"fig2a_K0", "K=0", device_json(1.0, 1.0, 0.0, 1.0), true},
            {"fig2a_K3", "K=3", device_json(1.0, 1.0, 3.0, 1.0), true},
        };
    if (id == "2b")
        return {
            {"fig2b_K0", "K=0", device_json(1.0, 1.0, 0.0, 2.0), true},
            {"fig2b_K3", "K=3", device_json(1.0, 1.0, 3.0, 2.0), true},
        };
    if (id == "3a")
        return {
            {"fig3a_balanced", "k2=k3=1", device_json(1.0, 1.0, 0.0, 2.0), false},
            {"fig3a_arm2_mismatch", "k2=0.5", device_json(0.5, 1.0, 0.0, 2.0), false},
            {"fig3a_arm3_mismatch", "k3=0.5", device_json(1.0, 0.5, 0.0, 2.0), false},
        };
    if (id == "3b")
        return {
            {"fig3b_half", "k2=k3=1/2", device_json(0.5, 0.5, 0.0, 2.0), false},
            {"fig3b_third", "k2=k3=1/3",
             device_json(1.0 / 3.0, 1.0 / 3.0, 0.0, 2.0), false},
        };
    throw ConfigError("figure: unknown id \"" + id +
                      "\" (expected 2a, 2b, 3a or 3b)");
}

std::string gnuplot_script(const std::string& id,
                           const std::vector<FigurePreset>& presets) {
    std::string s;
    s += "# gnuplot script for figure " + id + "\n";
    s += "set datafile separator \",\"\n";
    s += "set xlabel \"eV / Delta_ref\"\n";
    s += "set ylabel \"G / G_N\"\n";
    s += "set key top left\n";
    s += "plot \\\n";
    bool first = true;
    for (const FigurePreset& p : presets) {
        if (!first) s += ", \\\n";
        first = false;
        s += "  '" + p.stem + ".csv' using 1:3 skip 1 with lines title \"" +
             p.title + ", quantum\"";
        if (p.compare)
            s += ", \\\n  '" + p.stem +
                 ".csv' using 1:7 skip 1 with lines dashtype 2 title \"" + p.title +
                 ", classical\"";
    }
    s += "\npause -1 \"press return to close\"\n";
    return s;
}

}  // namespace forktx
