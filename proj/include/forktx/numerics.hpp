#pragma once

#include <complex>

#include <Eigen/Dense>

#include "forktx/errors.hpp"

namespace forktx {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowVector = Eigen::RowVectorXcd;

namespace numerics {

/// Relative determinant floor below which a matrix counts as singular.
inline constexpr double kSingularRelTol = 1e-14;

/// Checked matrix product. Throws DimensionMismatch on incompatible shapes.
Matrix multiply(const Matrix& a, const Matrix& b);

/// Inverse of a small (1..4) square matrix. Throws SingularMatrix when
/// |det| falls below kSingularRelTol relative to the max row norm.
Matrix inverse(const Matrix& m);

template <class Derived>
bool is_finite(const Eigen::MatrixBase<Derived>& m) {
    return m.allFinite();
}

template <class Derived>
auto adjoint(const Eigen::MatrixBase<Derived>& m) {
    return m.adjoint().eval();
}

/// Max-entry magnitude of (m^dag m - I); zero for a unitary matrix.
template <class Derived>
double unitarity_error(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("unitarity_error: matrix must be square");
    const auto n = m.rows();
    return (m.adjoint() * m - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace numerics
}  // namespace forktx
