#pragma once

#include <string>
#include <vector>

namespace forktx {

struct CheckReport {
    std::string name;
    double max_error = 0.0;
    double threshold = 0.0;
    bool passed = false;
};

/// Cross-module consistency suite: node unitarity sweep, single-contact
/// oracle reduction, closed-form vs path-sum vs reordered resummation,
/// and sub-gap flux conservation. Deterministic (fixed seed).
std::vector<CheckReport> run_validation_checks();

/// Max |g(e) - g(-e)| over a fixed probe device with the given barrier.
/// Informational: the kernel is energy-symmetric for K = 0 but not in
/// general.
double particle_hole_asymmetry(double barrier);

}  // namespace forktx
