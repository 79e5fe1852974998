#pragma once

#include <stdexcept>

#include <Eigen/Core>

#include "zlattice/integer.hpp"

namespace zlattice {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Int>;
using IntVector = DenseVector<Int>;

template <typename Derived>
void require_nonempty(const Eigen::MatrixBase<Derived>& a) {
    if (a.rows() < 1 || a.cols() < 1)
        throw std::invalid_argument("matrix must have at least one row and one column");
}

// Exact determinant by fraction-free (Bareiss) elimination. All interior
// divisions are exact, so this stays in the integers for integer input.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a_expr) {
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> a = a_expr;
    require_nonempty(a);
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant requires a square matrix");
    const Eigen::Index n = a.rows();
    bool negate = false;
    Scalar prev(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index piv = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Scalar(0);
            a.row(k).swap(a.row(piv));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Scalar num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num / prev;
            }
            a(i, k) = Scalar(0);
        }
        prev = a(k, k);
    }
    Scalar det = a(n - 1, n - 1);
    return negate ? Scalar(-det) : det;
}

}  // namespace zlattice
