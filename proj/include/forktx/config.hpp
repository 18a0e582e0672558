#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "forktx/braess.hpp"
#include "forktx/transport.hpp"

namespace forktx {

enum class TableFormat { csv, tsv };

/// Everything a spectrum run needs: device, voltage grid (in units of the
/// reference gap over e) and output options.
struct RunConfig {
    DeviceConfig device;
    double v_min = -3.0;
    double v_max = 3.0;
    int v_points = 601;
    TableFormat format = TableFormat::csv;
    bool compare = false;  // also emit the classical column group
};

/// Parse a JSON config document. Recognized keys (all optional):
///   k2, k3        wavenumber ratios of the arms     (default 1)
///   K             barrier strength                  (default 0)
///   delta2, delta3  arm gaps in reference units     (default 1)
///   mode          "quantum" | "classical"           (default "quantum")
///   T             temperature                       (default 0)
///   v_min, v_max, v_points  voltage grid            (default -3, 3, 601)
///   format        "csv" | "tsv"                     (default "csv")
///   above_gap     "continuation" | "cutoff"         (default "continuation")
/// Unknown keys and type errors raise ConfigError naming the key; values
/// out of physical range raise DomainError naming the key.
RunConfig parse_config(const std::string& json_text);

/// 12-significant-digit, locale-independent number formatting used by all
/// table writers (keeps repeated runs byte-identical).
std::string format_number(double v);

/// Header "V_over_Delta,g,g_over_gN,A,B", one row per grid point; when
/// side is non-null its columns are appended with a _classical suffix.
void write_spectrum_table(std::ostream& os, const RunConfig& cfg,
                          const SpectrumResult& main,
                          const SpectrumResult* side);

/// Header "k2,k3,K,D_quantum,D_classical,paradox" plus a trailing
/// "# paradox_fraction = ..." comment line.
void write_braess_table(std::ostream& os, const BraessScan& scan,
                        TableFormat format);

/// Canned configs reproducing the documented demo figures.
struct FigurePreset {
    std::string stem;         // output file stem, e.g. "fig2a_K0"
    std::string title;        // curve label used in the plot script
    std::string config_json;  // complete config document
    bool compare = false;
};

/// Presets for figure ids "2a", "2b", "3a", "3b"; throws ConfigError for
/// anything else.
std::vector<FigurePreset> figure_presets(const std::string& id);

/// gnuplot script plotting the presets' CSV files.
std::string gnuplot_script(const std::string& id,
                           const std::vector<FigurePreset>& presets);

}  // namespace forktx
