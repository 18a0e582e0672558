#pragma once

#include <vector>

#include "forktx/numerics.hpp"

namespace forktx {

/// Node where two or three one-dimensional leads meet. Lead 0 is the
/// injector. Wavenumbers are dimensionless (configs quote them in units
/// of the injector's, but any positive values are accepted); the barrier
/// is the effective point-scatterer strength in the same units.
struct VertexParams {
    std::vector<double> wavenumbers;
    double barrier = 0.0;

    int leads() const { return static_cast<int>(wavenumbers.size()); }
    void validate() const;  // throws DomainError
};

/// Injector row/column split of a node scattering matrix:
///
///   [ r11         out_of_arms ]
///   [ into_arms   arm_block   ]
struct LeadBlocks {
    Complex r11;            // injector back-reflection amplitude
    Vector into_arms;       // injector -> arm transmission column
    RowVector out_of_arms;  // arm -> injector transmission row
    Matrix arm_block;       // arm -> arm scattering submatrix
};

/// Electron-sector scattering matrix of the star node,
/// S_ij = 2 sqrt(k_i k_j) / (sum_m k_m + i K) - delta_ij.
/// Unitary for positive wavenumbers and real K; symmetric.
Matrix star_vertex(const VertexParams& params);

/// Hole sector: entrywise complex conjugate of the electron sector.
Matrix hole_vertex(const Matrix& electron_sector);

LeadBlocks lead_blocks(const Matrix& s);

/// Rebuild the full matrix from its blocks (inverse of lead_blocks).
Matrix assemble(const LeadBlocks& blocks);

}  // namespace forktx
