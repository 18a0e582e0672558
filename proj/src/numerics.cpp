#include "forktx/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace forktx::numerics {

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("multiply: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " +
                                std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
    Matrix p = a * b;
    if (!is_finite(p)) throw DomainError("multiply: non-finite result");
    return p;
}

Matrix inverse(const Matrix& m) {
    const auto n = m.rows();
    if (n != m.cols()) throw DimensionMismatch("inverse: matrix must be square");
    if (n < 1 || n > 4)
        throw DimensionMismatch("inverse: supported sizes are 1..4, got " +
                                std::to_string(n));

    // Singularity floor scales like (max row norm)^n, the natural size of
    // the determinant for a matrix of that magnitude.
    const double row_norm = m.cwiseAbs().rowwise().sum().maxCoeff();
    const double floor =
        kSingularRelTol * std::max(1.0, std::pow(row_norm, static_cast<double>(n)));
    const Complex det = m.determinant();
    if (std::abs(det) < floor)
        throw SingularMatrix("inverse: matrix singular within tolerance",
                             std::abs(det));

    Matrix inv = m.inverse();
    if (!is_finite(inv))
        throw SingularMatrix("inverse: non-finite result", std::abs(det));
    return inv;
}

}  // namespace forktx::numerics
