#pragma once

#include <optional>
#include <stdexcept>

#include <Eigen/Core>

#include "zlattice/integer.hpp"
#include "zlattice/matrix.hpp"
#include "zlattice/normal_form.hpp"

namespace zlattice {

// One unsatisfiable scalar congruence diag * x = rhs (mod modulus), extracted
// from the Smith diagonal. Checkable on its own: gcd(diag, modulus) | rhs fails.
template <typename Scalar>
struct FailingCongruence {
    Scalar diag;
    Scalar rhs;
    Scalar modulus;

    bool holds() const {
        Scalar g = gcd_nonneg(diag, modulus);
        if (g == 0) return rhs != 0;
        return pos_mod(rhs, g) != 0;
    }
};

enum class SolveStatus { Solvable, Unsolvable };

template <typename Scalar>
struct SolveOutcome {
    SolveStatus status;
    std::optional<DenseVector<Scalar>> witness;
    std::optional<FailingCongruence<Scalar>> certificate;

    bool solvable() const { return status == SolveStatus::Solvable; }
};

// Solve a * x = c over the integers, or report that no solution exists.
// Route: u*a*v = d diagonal, back-substitute d*y = u*c, x = v*y; free
// coordinates are pinned to zero.
template <typename DerivedA, typename DerivedC>
std::optional<DenseVector<typename DerivedA::Scalar>> solve_integer(const Eigen::MatrixBase<DerivedA>& a_expr,
                                                                    const Eigen::MatrixBase<DerivedC>& c_expr) {
    using Scalar = typename DerivedA::Scalar;
    DenseMatrix<Scalar> a = a_expr;
    DenseVector<Scalar> c = c_expr;
    require_nonempty(a);
    if (c.size() != a.rows())
        throw std::invalid_argument("solve_integer: right-hand side length must equal the row count");

    NormalFormResult<Scalar> nf = smith_normal_form(a);
    DenseVector<Scalar> b = nf.u * c;
    const Eigen::Index rank_bound = std::min(a.rows(), a.cols());
    DenseVector<Scalar> y = DenseVector<Scalar>::Zero(a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        if (i < rank_bound && nf.d(i, i) != 0) {
            if (b(i) % nf.d(i, i) != 0) return std::nullopt;
            y(i) = b(i) / nf.d(i, i);
        } else if (b(i) != 0) {
            return std::nullopt;
        }
    }
    return DenseVector<Scalar>(nf.v * y);
}

// Decide a * x = c (mod m), m >= 1. Equivalent to integer solvability of the
// augmented system [a | m*I] * (x, y) = c; decided here on the Smith diagonal
// of a, which decouples the system into scalar congruences d_i * y_i = e_i and
// yields a FailingCongruence directly when one of them is unsatisfiable.
// Witnesses are reduced into [0, m); free coordinates are pinned to zero.
template <typename DerivedA, typename DerivedC>
SolveOutcome<typename DerivedA::Scalar> solve_mod(const Eigen::MatrixBase<DerivedA>& a_expr,
                                                  const Eigen::MatrixBase<DerivedC>& c_expr,
                                                  const typename DerivedA::Scalar& m) {
    using Scalar = typename DerivedA::Scalar;
    DenseMatrix<Scalar> a = a_expr;
    DenseVector<Scalar> c = c_expr;
    require_nonempty(a);
    if (c.size() != a.rows())
        throw std::invalid_argument("solve_mod: right-hand side length must equal the row count");
    if (m < 1) throw std::invalid_argument("solve_mod: modulus must be >= 1");

    if (m == 1)
        return {SolveStatus::Solvable, DenseVector<Scalar>::Zero(a.cols()), std::nullopt};

    NormalFormResult<Scalar> nf = smith_normal_form(a);
    DenseVector<Scalar> b = nf.u * c;
    const Eigen::Index rank_bound = std::min(a.rows(), a.cols());
    DenseVector<Scalar> y = DenseVector<Scalar>::Zero(a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Scalar di = i < rank_bound ? nf.d(i, i) : Scalar(0);
        Scalar ei = pos_mod(b(i), m);
        Scalar g = gcd_nonneg(di, m);  // g = m when di = 0
        if (pos_mod(ei, g) != 0)
            return {SolveStatus::Unsolvable, std::nullopt, FailingCongruence<Scalar>{di, ei, m}};
        if (i < rank_bound) {
            Scalar mg = m / g;
            if (mg != 1) {
                Scalar inv = mod_inverse(pos_mod(Scalar(di / g), mg), mg);
                y(i) = pos_mod(Scalar((ei / g) * inv), mg);
            }
        }
    }
    DenseVector<Scalar> x = nf.v * y;
    for (Eigen::Index j = 0; j < x.size(); ++j) x(j) = pos_mod(x(j), m);
    return {SolveStatus::Solvable, std::move(x), std::nullopt};
}

}  // namespace zlattice
