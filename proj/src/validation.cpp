#include "forktx/validation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "forktx/transport.hpp"

namespace forktx {

namespace {

constexpr unsigned kSeed = 0x5eedu;

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

VertexParams random_vertex(std::mt19937_64& rng) {
    return {{uniform(rng, 0.1, 10.0), uniform(rng, 0.1, 10.0),
             uniform(rng, 0.1, 10.0)},
            uniform(rng, 0.0, 10.0)};
}

CheckReport unitarity_sweep() {
    std::mt19937_64 rng(kSeed);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Matrix s = star_vertex(random_vertex(rng));
        worst = std::max(worst, numerics::unitarity_error(s));
    }
    return {"vertex unitarity (1000 draws)", worst, 1e-12, worst < 1e-12};
}

CheckReport single_contact_oracle() {
    double worst = 0.0;
    for (double z : {0.0, 0.5, 1.0, 3.0}) {
        const VertexParams contact{{1.0, 1.0}, 2.0 * z};  // Z = K / (2 k)
        const AndreevModel gap{{1.0}};
        for (double e : voltage_grid(-3.0, 3.0, 601)) {
            const double g = conductance_kernel(junction_reflection(contact, gap, e));
            worst = std::max(worst, std::abs(g - btk_reference(e, 1.0, z).kernel));
        }
    }
    return {"single-contact oracle reduction", worst, 1e-10, worst < 1e-10};
}

CheckReport resummation_equivalence() {
    std::mt19937_64 rng(kSeed + 1);
    double worst = 0.0;
    int accepted = 0;
    while (accepted < 200) {
        const VertexParams v = random_vertex(rng);
        const AndreevModel gaps{{uniform(rng, 0.1, 2.5), uniform(rng, 0.1, 2.5)}};
        const double e = uniform(rng, -3.0, 3.0);
        if (loop_spectral_radius(v, gaps, e) >= 0.999) continue;
        ++accepted;

        const ReflectionResult closed = junction_reflection(v, gaps, e);
        const ReflectionResult summed =
            junction_reflection_neumann(v, gaps, e, 1e-14, 40000);
        const Complex reordered = retro_amplitude_reordered(v, gaps, e);
        worst = std::max({worst, std::abs(closed.r_eh - summed.r_eh),
                          std::abs(closed.r_ee - summed.r_ee),
                          std::abs(closed.r_eh - reordered)});
    }
    return {"path-sum / reordering equivalence (200 draws)", worst, 1e-10,
            worst < 1e-10};
}

CheckReport subgap_conservation() {
    std::mt19937_64 rng(kSeed + 2);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const VertexParams v = random_vertex(rng);
        const AndreevModel gaps{{uniform(rng, 0.1, 2.0), uniform(rng, 0.1, 2.0)}};
        const double cap = 0.999 * std::min(gaps.gaps[0], gaps.gaps[1]);
        const double e = uniform(rng, -cap, cap);
        const ReflectionResult r = junction_reflection(v, gaps, e);
        worst = std::max(worst, std::abs(r.andreev_prob + r.normal_prob - 1.0));
    }
    return {"sub-gap flux conservation (500 draws)", worst, 1e-10, worst < 1e-10};
}

}  // namespace

std::vector<CheckReport> run_validation_checks() {
    return {unitarity_sweep(), single_contact_oracle(), resummation_equivalence(),
            subgap_conservation()};
}

double particle_hole_asymmetry(double barrier) {
    const DeviceConfig probe{{{1.0, 0.7, 1.3}, barrier}, {{1.0, 2.0}}};
    double worst = 0.0;
    for (double e : {0.2, 0.45, 0.9, 1.5, 2.5}) {
        const double plus = conductance_kernel(reflection_amplitudes(probe, e));
        const double minus = conductance_kernel(reflection_amplitudes(probe, -e));
        worst = std::max(worst, std::abs(plus - minus));
    }
    return worst;
}

}  // namespace forktx
