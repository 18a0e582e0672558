#pragma once

#include <vector>

#include "forktx/andreev.hpp"
#include "forktx/vertex.hpp"

namespace forktx {

/// Whether the two outgoing arms stay phase coherent at the node.
enum class CoherenceMode {
    quantum,   ///< arm separation below the decoherence length: one 3-lead node
    classical  ///< arms decohered: two independent 2-lead junctions
};

/// Full device description. The vertex always carries three leads;
/// classical mode derives two 2-lead junctions from the same parameters.
struct DeviceConfig {
    VertexParams vertex;
    AndreevModel gaps;  // one gap per outgoing arm
    CoherenceMode mode = CoherenceMode::quantum;
    double temperature = 0.0;  // in units of the reference gap; 0 = sharp kernel

    void validate() const;  // throws DomainError
};

/// Total reflection amplitudes seen from the injector at one energy.
struct ReflectionResult {
    Complex r_ee;        // electron -> electron
    Complex r_eh;        // electron -> retroreflected hole
    double andreev_prob; // A = |r_eh|^2
    double normal_prob;  // B = |r_ee|^2
};

/// Amplitudes for a junction of 2 or 3 leads whose outgoing arms end in
/// superconductors. All closed electron/hole round trips through the arms
/// are resummed in closed form:
///
///   r_eh = out_h (I - C R_e C R_h)^{-1} C in_e
///   r_ee = r11_e + out_e (C R_h C) (I - R_e C R_h C)^{-1} in_e
///
/// with C the diagonal conversion matrix, R_e/R_h the arm blocks of the
/// electron/hole node matrices, and in/out the injector coupling blocks.
/// Throws SingularLoop at isolated bound-state energies where the loop
/// matrix I - M is singular (e.g. a fully decoupled arm mode exactly at a
/// gap edge).
ReflectionResult junction_reflection(const VertexParams& vertex,
                                     const AndreevModel& gaps, double energy);

/// Spec'd entry point for the coherent three-lead device.
ReflectionResult reflection_amplitudes(const DeviceConfig& cfg, double energy);

/// Same r_eh with the conversion matrix pulled through the resolvent,
///   out_h C (I - R_e C R_h C)^{-1} in_e;
/// algebraically identical to junction_reflection's value and used as a
/// consistency check.
Complex retro_amplitude_reordered(const VertexParams& vertex,
                                  const AndreevModel& gaps, double energy);

/// Brute-force path sum: the geometric series behind junction_reflection,
/// truncated when the next term drops below term_tol or at max_terms.
/// Independent of the closed-form inverse; used as an oracle.
ReflectionResult junction_reflection_neumann(const VertexParams& vertex,
                                             const AndreevModel& gaps,
                                             double energy,
                                             double term_tol = 1e-13,
                                             int max_terms = 10000);

/// Spectral radius of the conversion loop matrix at one energy.
double loop_spectral_radius(const VertexParams& vertex,
                            const AndreevModel& gaps, double energy);

/// Zero-temperature differential conductance kernel in units of the
/// injector's ballistic conductance: g = 1 + A - B, bounded by [0, 2].
double conductance_kernel(const ReflectionResult& r);

/// Closed-form single N/S point-contact coefficients for a delta barrier
/// of dimensionless strength Z. Serves as an independent oracle for the
/// 2-lead reduction of the junction machinery.
struct BtkPoint {
    double andreev_prob;
    double normal_prob;
    double kernel;
};
BtkPoint btk_reference(double energy, double gap, double barrier_z);

/// Incoherent kernel: sum of the two independent 2-lead channels
/// (k1, k_j; K) with gap_j, each evaluated through junction_reflection.
double classical_kernel(const DeviceConfig& cfg, double energy);

/// Same device with superconductivity switched off (all gaps zero).
double normal_state_conductance(const DeviceConfig& cfg);

struct SpectrumResult {
    std::vector<double> voltages;      // as evaluated (gap-edge hits are nudged)
    std::vector<double> kernel;        // g at each point
    std::vector<double> normalized;    // g / normal_conductance
    std::vector<double> andreev_prob;  // A (classical mode: channel average)
    std::vector<double> normal_prob;   // B (classical mode: channel average)
    double normal_conductance = 0.0;
};

/// Sweep the kernel over a strictly increasing voltage grid. Points that
/// land exactly on a gap edge are nudged 1e-9 into the gap; a point whose
/// loop is singular is retried once 1e-9 higher before SingularLoop
/// propagates. cfg.temperature > 0 smears the kernel with the thermal
/// window -df/de by trapezoid over +-10 T in steps of T/10.
SpectrumResult spectrum(const DeviceConfig& cfg,
                        const std::vector<double>& voltage_grid);

/// Inclusive linear grid helper (points >= 2).
std::vector<double> voltage_grid(double v_min, double v_max, int points);

}  // namespace forktx
