#pragma once

#include <vector>

#include "forktx/vertex.hpp"

namespace forktx {

/// One sample of the coherent-vs-incoherent escape-probability comparison.
struct BraessPoint {
    double k2 = 1.0;
    double k3 = 1.0;
    double barrier = 0.0;
    double d_quantum = 0.0;    // escape probability with the coherent inter-arm link
    double d_classical = 0.0;  // escape probability of two decoupled channels
    bool paradox = false;      // d_classical > d_quantum beyond tolerance
};

/// Inclusive scan axis; lo == hi (or points == 1) collapses to one value.
struct AxisSpec {
    double lo = 0.0;
    double hi = 0.0;
    int points = 1;
};

struct BraessScan {
    std::vector<BraessPoint> points;  // ordered by (K, k2, k3)
    double paradox_fraction = 0.0;
};

/// Probability that an injected electron leaves through either arm of the
/// coherent three-lead node: D = 1 - |r11|^2.
double transmission_quantum(const VertexParams& params);

/// Same probability when the arms are decoupled: the incident flux splits
/// evenly over two independent 2-lead junctions, D = sum_j (1/2) T_j with
/// T_j = 4 k1 k_j / ((k1 + k_j)^2 + K^2).
double transmission_classical(const VertexParams& params);

BraessScan braess_scan(const AxisSpec& k2, const AxisSpec& k3,
                       const AxisSpec& barrier);

}  // namespace forktx
