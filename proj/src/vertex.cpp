#include "forktx/vertex.hpp"

#include <cmath>
#include <string>

namespace forktx {

void VertexParams::validate() const {
    const auto n = wavenumbers.size();
    if (n != 2 && n != 3)
        throw DomainError("vertex: expected 2 or 3 leads, got " + std::to_string(n));
    for (double k : wavenumbers)
        if (!std::isfinite(k) || k <= 0.0)
            throw DomainError("vertex: wavenumbers must be finite and > 0");
    if (!std::isfinite(barrier) || barrier < 0.0)
        throw DomainError("vertex: barrier must be finite and >= 0");
}

Matrix star_vertex(const VertexParams& params) {
    params.validate();
    const int n = params.leads();

    Eigen::VectorXd root_k(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        root_k(i) = std::sqrt(params.wavenumbers[i]);
        total += params.wavenumbers[i];
    }

    const Complex denom(total, params.barrier);
    Matrix s = (2.0 / denom) * (root_k * root_k.transpose()).cast<Complex>();
    s.diagonal().array() -= 1.0;
    return s;
}

Matrix hole_vertex(const Matrix& electron_sector) {
    if (electron_sector.rows() != electron_sector.cols())
        throw numerics::DimensionMismatch("hole_vertex: matrix must be square");
    return electron_sector.conjugate();
}

LeadBlocks lead_blocks(const Matrix& s) {
    const auto n = s.rows();
    if (n != s.cols() || n < 2)
        throw numerics::DimensionMismatch("lead_blocks: need a square matrix of size >= 2");
    LeadBlocks b;
    b.r11 = s(0, 0);
    b.into_arms = s.block(1, 0, n - 1, 1);
    b.out_of_arms = s.block(0, 1, 1, n - 1);
    b.arm_block = s.block(1, 1, n - 1, n - 1);
    return b;
}

Matrix assemble(const LeadBlocks& blocks) {
    const auto arms = blocks.arm_block.rows();
    Matrix s(arms + 1, arms + 1);
    s(0, 0) = blocks.r11;
    s.block(0, 1, 1, arms) = blocks.out_of_arms;
    s.block(1, 0, arms, 1) = blocks.into_arms;
    s.block(1, 1, arms, arms) = blocks.arm_block;
    return s;
}

}  // namespace forktx
