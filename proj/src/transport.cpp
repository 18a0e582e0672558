#include "forktx/transport.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace forktx {

namespace {

struct NodeSectors {
    LeadBlocks e;
    LeadBlocks h;
};

NodeSectors split_sectors(const VertexParams& vertex) {
    const Matrix s_e = star_vertex(vertex);
    return {lead_blocks(s_e), lead_blocks(hole_vertex(s_e))};
}

void check_arm_count(const VertexParams& vertex, const AndreevModel& gaps) {
    if (static_cast<int>(gaps.gaps.size()) != vertex.leads() - 1)
        throw DomainError("device: one gap per outgoing arm required (" +
                          std::to_string(vertex.leads() - 1) + " arms, " +
                          std::to_string(gaps.gaps.size()) + " gaps)");
}

Matrix loop_resolvent(const Matrix& loop, double energy) {
    const auto n = loop.rows();
    try {
        return numerics::inverse(Matrix::Identity(n, n) - loop);
    } catch (const numerics::SingularMatrix& ex) {
        throw SingularLoop(energy, ex.det_magnitude());
    }
}

ReflectionResult pack(Complex r_ee, Complex r_eh) {
    return {r_ee, r_eh, std::norm(r_eh), std::norm(r_ee)};
}

}  // namespace

void DeviceConfig::validate() const {
    vertex.validate();
    gaps.validate();
    if (vertex.leads() != 3)
        throw DomainError("device: the vertex must join exactly 3 leads");
    check_arm_count(vertex, gaps);
    if (!std::isfinite(temperature) || temperature < 0.0)
        throw DomainError("device: temperature must be finite and >= 0");
}

ReflectionResult junction_reflection(const VertexParams& vertex,
                                     const AndreevModel& gaps, double energy) {
    vertex.validate();
    gaps.validate();
    check_arm_count(vertex, gaps);

    const auto [e, h] = split_sectors(vertex);
    const Matrix conv = andreev_matrix(energy, gaps);

    // Hole exit: inject, convert once, resum hole->electron->hole arm
    // round trips, leave through the hole row.
    const Matrix loop_h = numerics::multiply(
        numerics::multiply(conv, e.arm_block), numerics::multiply(conv, h.arm_block));
    const Complex r_eh =
        (h.out_of_arms * loop_resolvent(loop_h, energy) * conv * e.into_arms).value();

    // Electron exit: the same path family needs an even number of
    // conversions, so one hole segment is factored out in front.
    const Matrix hole_segment =
        numerics::multiply(numerics::multiply(conv, h.arm_block), conv);
    const Matrix loop_e = numerics::multiply(e.arm_block, hole_segment);
    const Complex r_ee =
        e.r11 +
        (e.out_of_arms * hole_segment * loop_resolvent(loop_e, energy) * e.into_arms)
            .value();

    return pack(r_ee, r_eh);
}

ReflectionResult reflection_amplitudes(const DeviceConfig& cfg, double energy) {
    cfg.validate();
    if (cfg.mode != CoherenceMode::quantum)
        throw DomainError("reflection_amplitudes: quantum mode required");
    return junction_reflection(cfg.vertex, cfg.gaps, energy);
}

Complex retro_amplitude_reordered(const VertexParams& vertex,
                                  const AndreevModel& gaps, double energy) {
    vertex.validate();
    gaps.validate();
    check_arm_count(vertex, gaps);

    const auto [e, h] = split_sectors(vertex);
    const Matrix conv = andreev_matrix(energy, gaps);
    const Matrix loop = numerics::multiply(
        numerics::multiply(e.arm_block, conv), numerics::multiply(h.arm_block, conv));
    return (h.out_of_arms * conv * loop_resolvent(loop, energy) * e.into_arms).value();
}

ReflectionResult junction_reflection_neumann(const VertexParams& vertex,
                                             const AndreevModel& gaps,
                                             double energy, double term_tol,
                                             int max_terms) {
    vertex.validate();
    gaps.validate();
    check_arm_count(vertex, gaps);

    const auto [e, h] = split_sectors(vertex);
    const Matrix conv = andreev_matrix(energy, gaps);
    const Matrix loop_h = conv * e.arm_block * conv * h.arm_block;
    const Matrix hole_segment = conv * h.arm_block * conv;
    const Matrix loop_e = e.arm_block * hole_segment;

    Vector state_h = conv * e.into_arms;
    Vector state_e = e.into_arms;
    Complex r_eh = 0.0;
    Complex r_ee = e.r11;
    bool done_h = false;
    bool done_e = false;

    // The state norm bounds every remaining increment (all loop factors
    // have norm <= 1), so it is the safe truncation signal; the projected
    // increment itself can rotate through zero mid-series.
    for (int n = 0; n < max_terms && !(done_h && done_e); ++n) {
        if (!done_h) {
            r_eh += (h.out_of_arms * state_h).value();
            done_h = state_h.norm() < term_tol;
            state_h = loop_h * state_h;
        }
        if (!done_e) {
            r_ee += (e.out_of_arms * hole_segment * state_e).value();
            done_e = state_e.norm() < term_tol;
            state_e = loop_e * state_e;
        }
    }
    return pack(r_ee, r_eh);
}

double loop_spectral_radius(const VertexParams& vertex, const AndreevModel& gaps,
                            double energy) {
    vertex.validate();
    gaps.validate();
    check_arm_count(vertex, gaps);

    const auto [e, h] = split_sectors(vertex);
    const Matrix conv = andreev_matrix(energy, gaps);
    const Matrix loop = conv * e.arm_block * conv * h.arm_block;

    if (loop.rows() == 1) return std::abs(loop(0, 0));
    // 2x2: eigenvalues from trace and determinant.
    const Complex tr = loop.trace();
    const Complex det = loop(0, 0) * loop(1, 1) - loop(0, 1) * loop(1, 0);
    const Complex disc = std::sqrt(tr * tr - 4.0 * det);
    return std::max(std::abs((tr + disc) / 2.0), std::abs((tr - disc) / 2.0));
}

double conductance_kernel(const ReflectionResult& r) {
    return 1.0 + r.andreev_prob - r.normal_prob;
}

BtkPoint btk_reference(double energy, double gap, double barrier_z) {
    if (!std::isfinite(gap) || gap < 0.0)
        throw DomainError("btk: gap must be finite and >= 0");
    if (!std::isfinite(barrier_z) || barrier_z < 0.0)
        throw DomainError("btk: barrier must be finite and >= 0");

    const double zz = barrier_z * barrier_z;
    if (gap == 0.0) {
        const double b = zz / (1.0 + zz);
        return {0.0, b, 1.0 - b};
    }

    const double x = std::abs(energy) / gap;
    double a, b;
    if (x < 1.0) {
        const double f = 1.0 + 2.0 * zz;
        a = gap * gap / (energy * energy + (gap * gap - energy * energy) * f * f);
        b = 1.0 - a;
    } else {
        const double u2 = 0.5 * (1.0 + std::sqrt(x * x - 1.0) / x);
        const double v2 = 1.0 - u2;
        const double gamma = u2 + zz * (u2 - v2);
        a = u2 * v2 / (gamma * gamma);
        b = (u2 - v2) * (u2 - v2) * zz * (1.0 + zz) / (gamma * gamma);
    }
    return {a, b, 1.0 + a - b};
}

namespace {

VertexParams channel_vertex(const DeviceConfig& cfg, int arm) {
    return {{cfg.vertex.wavenumbers[0], cfg.vertex.wavenumbers[arm]},
            cfg.vertex.barrier};
}

AndreevModel channel_gap(const DeviceConfig& cfg, int arm) {
    return {{cfg.gaps.gaps[arm - 1]}, cfg.gaps.above_gap};
}

struct KernelSample {
    double voltage;  // energy actually evaluated
    double kernel;
    double andreev_prob;
    double normal_prob;
};

KernelSample sample_at(const DeviceConfig& cfg, double energy) {
    if (cfg.mode == CoherenceMode::quantum) {
        const ReflectionResult r = junction_reflection(cfg.vertex, cfg.gaps, energy);
        return {energy, conductance_kernel(r), r.andreev_prob, r.normal_prob};
    }
    const ReflectionResult r2 =
        junction_reflection(channel_vertex(cfg, 1), channel_gap(cfg, 1), energy);
    const ReflectionResult r3 =
        junction_reflection(channel_vertex(cfg, 2), channel_gap(cfg, 2), energy);
    return {energy, conductance_kernel(r2) + conductance_kernel(r3),
            0.5 * (r2.andreev_prob + r3.andreev_prob),
            0.5 * (r2.normal_prob + r3.normal_prob)};
}

constexpr double kEdgeNudge = 1e-9;
constexpr double kEdgeMatchTol = 1e-12;

// Gap edges are branch points and can host bound states of decoupled arm
// modes; grid points landing exactly there are moved just inside the gap.
double nudge_off_gap_edges(double energy, const AndreevModel& gaps) {
    for (double gap : gaps.gaps) {
        if (gap <= kEdgeNudge) continue;
        if (std::abs(std::abs(energy) - gap) < kEdgeMatchTol)
            return energy < 0.0 ? -(gap - kEdgeNudge) : gap - kEdgeNudge;
    }
    return energy;
}

KernelSample evaluate_point(const DeviceConfig& cfg, double energy) {
    const double e = nudge_off_gap_edges(energy, cfg.gaps);
    try {
        return sample_at(cfg, e);
    } catch (const SingularLoop&) {
        return sample_at(cfg, e + kEdgeNudge);  // one retry, then propagate
    }
}

// -df/de evaluated at offset u from the bias point.
double thermal_window(double u, double temperature) {
    const double c = std::cosh(u / (2.0 * temperature));
    return 1.0 / (4.0 * temperature * c * c);
}

KernelSample smeared_point(const DeviceConfig& cfg, double voltage) {
    const double t = cfg.temperature;
    const int half = 100;  // step T/10 over +-10 T
    const double step = t / 10.0;

    double mass = 0.0, g = 0.0, a = 0.0, b = 0.0;
    for (int i = -half; i <= half; ++i) {
        double w = thermal_window(i * step, t);
        if (i == -half || i == half) w *= 0.5;  // trapezoid ends
        const KernelSample s = evaluate_point(cfg, voltage + i * step);
        mass += w;
        g += w * s.kernel;
        a += w * s.andreev_prob;
        b += w * s.normal_prob;
    }
    return {voltage, g / mass, a / mass, b / mass};
}

}  // namespace

double classical_kernel(const DeviceConfig& cfg, double energy) {
    cfg.validate();
    if (cfg.mode != CoherenceMode::classical)
        throw DomainError("classical_kernel: classical mode required");
    return sample_at(cfg, energy).kernel;
}

double normal_state_conductance(const DeviceConfig& cfg) {
    DeviceConfig normal = cfg;
    normal.gaps.gaps.assign(cfg.gaps.gaps.size(), 0.0);
    return sample_at(normal, 0.0).kernel;  // energy-independent without gaps
}

SpectrumResult spectrum(const DeviceConfig& cfg,
                        const std::vector<double>& voltage_grid) {
    cfg.validate();
    if (voltage_grid.empty())
        throw DomainError("spectrum: empty voltage grid");
    for (std::size_t i = 1; i < voltage_grid.size(); ++i)
        if (!(voltage_grid[i] > voltage_grid[i - 1]))
            throw DomainError("spectrum: voltage grid must be strictly increasing");

    SpectrumResult out;
    out.normal_conductance = normal_state_conductance(cfg);
    out.voltages.reserve(voltage_grid.size());
    out.kernel.reserve(voltage_grid.size());
    out.normalized.reserve(voltage_grid.size());
    out.andreev_prob.reserve(voltage_grid.size());
    out.normal_prob.reserve(voltage_grid.size());

    for (double v : voltage_grid) {
        const KernelSample s = cfg.temperature > 0.0 ? smeared_point(cfg, v)
                                                     : evaluate_point(cfg, v);
        out.voltages.push_back(s.voltage);
        out.kernel.push_back(s.kernel);
        out.normalized.push_back(s.kernel / out.normal_conductance);
        out.andreev_prob.push_back(s.andreev_prob);
        out.normal_prob.push_back(s.normal_prob);
    }
    return out;
}

std::vector<double> voltage_grid(double v_min, double v_max, int points) {
    if (points < 2) throw DomainError("voltage_grid: need at least 2 points");
    if (!(v_min < v_max)) throw DomainError("voltage_grid: require v_min < v_max");
    std::vector<double> grid(points);
    const double step = (v_max - v_min) / (points - 1);
    for (int i = 0; i < points; ++i) grid[i] = v_min + i * step;
    grid.back() = v_max;
    return grid;
}

}  // namespace forktx
