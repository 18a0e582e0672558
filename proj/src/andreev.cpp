#include "forktx/andreev.hpp"

#include <cmath>

namespace forktx {

void AndreevModel::validate() const {
    if (gaps.empty()) throw DomainError("andreev: at least one arm required");
    for (double g : gaps)
        if (!std::isfinite(g) || g < 0.0)
            throw DomainError("andreev: gaps must be finite and >= 0");
}

Complex andreev_amplitude(double energy, double gap, AboveGap above_gap) {
    if (!std::isfinite(gap) || gap < 0.0)
        throw DomainError("andreev: gap must be finite and >= 0");
    if (!std::isfinite(energy))
        throw DomainError("andreev: energy must be finite");

    if (gap == 0.0) return {0.0, 0.0};

    const double x = energy / gap;
    if (std::abs(x) < 1.0)
        return {x, -std::sqrt(1.0 - x * x)};  // exp(-i acos(x)), unimodular

    if (above_gap == AboveGap::cutoff) return {0.0, 0.0};
    const double sign = x < 0.0 ? -1.0 : 1.0;
    return {x - sign * std::sqrt(x * x - 1.0), 0.0};
}

Matrix andreev_matrix(double energy, const AndreevModel& model) {
    model.validate();
    const auto arms = static_cast<Eigen::Index>(model.gaps.size());
    Matrix m = Matrix::Zero(arms, arms);
    for (Eigen::Index j = 0; j < arms; ++j)
        m(j, j) = andreev_amplitude(energy, model.gaps[j], model.above_gap);
    return m;
}

}  // namespace forktx
