#pragma once

#include <vector>

#include "forktx/numerics.hpp"

namespace forktx {

/// Behaviour of the electron-hole conversion amplitude outside the gap.
enum class AboveGap {
    continuation,  ///< real decaying branch joining the sub-gap phase at the edge
    cutoff         ///< amplitude forced to zero for |energy| >= gap
};

/// Per-arm superconducting gaps, in units of the reference gap.
/// A zero gap marks a normal (non-superconducting) arm.
struct AndreevModel {
    std::vector<double> gaps;
    AboveGap above_gap = AboveGap::continuation;

    void validate() const;  // throws DomainError
};

/// Electron<->hole conversion amplitude at a transparent N/S interface.
///
/// Inside the gap the amplitude is the pure phase
///   a = exp(i chi),  chi = -acos(energy / gap),
/// so |a| = 1 and a(0) = -i. Outside the gap the default branch is
///   a = energy/gap - sign(energy) sqrt((energy/gap)^2 - 1),
/// real with |a| <= 1, continuous at the edges and -> 0 at large energy.
Complex andreev_amplitude(double energy, double gap,
                          AboveGap above_gap = AboveGap::continuation);

/// Diagonal conversion matrix over the outgoing arms.
Matrix andreev_matrix(double energy, const AndreevModel& model);

}  // namespace forktx
