#pragma once

#include <utility>

#include <Eigen/Core>

#include "zlattice/integer.hpp"
#include "zlattice/matrix.hpp"

namespace zlattice {

// Result of a unimodular reduction: u * a * v = d, det(u) = det(v) = +-1.
// For the Hermite form v is the identity.
template <typename Scalar>
struct NormalFormResult {
    DenseMatrix<Scalar> d;
    DenseMatrix<Scalar> u;
    DenseMatrix<Scalar> v;
};

namespace detail {

// Smallest nonzero |entry| of a(k:, k:), first hit in row-major scan order.
// Returns {-1, -1} when the submatrix is zero.
template <typename Scalar>
std::pair<Eigen::Index, Eigen::Index> min_abs_pivot(const DenseMatrix<Scalar>& a, Eigen::Index k) {
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = k; i < a.rows(); ++i)
        for (Eigen::Index j = k; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            if (pi < 0 || abs(a(i, j)) < abs(a(pi, pj))) {
                pi = i;
                pj = j;
            }
        }
    return {pi, pj};
}

}  // namespace detail

// Row-style Hermite normal form: returns (h, u, identity) with u * a = h,
// u unimodular. Convention: pivots positive, entries above each pivot
// reduced into [0, pivot), pivot columns strictly increasing, zero rows last.
// Pivoting picks the minimal nonzero |entry| to limit growth.
template <typename Derived>
NormalFormResult<typename Derived::Scalar> hermite_normal_form(const Eigen::MatrixBase<Derived>& a_expr) {
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> h = a_expr;
    require_nonempty(h);
    const Eigen::Index m = h.rows();
    const Eigen::Index n = h.cols();
    DenseMatrix<Scalar> u = DenseMatrix<Scalar>::Identity(m, m);

    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < n && r < m; ++c) {
        // Euclidean descent within column c, rows r..m-1.
        while (true) {
            Eigen::Index piv = -1;
            for (Eigen::Index i = r; i < m; ++i) {
                if (h(i, c) == 0) continue;
                if (piv < 0 || abs(h(i, c)) < abs(h(piv, c))) piv = i;
            }
            if (piv < 0) break;
            if (piv != r) {
                h.row(piv).swap(h.row(r));
                u.row(piv).swap(u.row(r));
            }
            bool reduced = true;
            for (Eigen::Index i = r + 1; i < m; ++i) {
                if (h(i, c) == 0) continue;
                Scalar q = h(i, c) / h(r, c);
                if (q != 0) {
                    h.row(i) -= h.row(r) * q;
                    u.row(i) -= u.row(r) * q;
                }
                if (h(i, c) != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (h(r, c) == 0) continue;  // no pivot in this column
        if (h(r, c) < 0) {
            h.row(r) = -h.row(r);
            u.row(r) = -u.row(r);
        }
        for (Eigen::Index i = 0; i < r; ++i) {
            Scalar q = floor_div(h(i, c), h(r, c));
            if (q != 0) {
                h.row(i) -= h.row(r) * q;
                u.row(i) -= u.row(r) * q;
            }
        }
        ++r;
    }

    return {std::move(h), std::move(u), DenseMatrix<Scalar>::Identity(n, n)};
}

// Smith normal form: returns (d, u, v) with u * a * v = d, both transforms
// unimodular, d diagonal with nonnegative entries and d(0,0) | d(1,1) | ...,
// trailing zeros last. Same minimal-|entry| pivoting as the Hermite form.
template <typename Derived>
NormalFormResult<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& a_expr) {
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> d = a_expr;
    require_nonempty(d);
    const Eigen::Index m = d.rows();
    const Eigen::Index n = d.cols();
    DenseMatrix<Scalar> u = DenseMatrix<Scalar>::Identity(m, m);
    DenseMatrix<Scalar> v = DenseMatrix<Scalar>::Identity(n, n);

    const Eigen::Index steps = std::min(m, n);
    for (Eigen::Index k = 0; k < steps; ++k) {
        bool submatrix_zero = false;
        while (true) {
            auto [pi, pj] = detail::min_abs_pivot(d, k);
            if (pi < 0) {
                submatrix_zero = true;
                break;
            }
            if (pi != k) {
                d.row(pi).swap(d.row(k));
                u.row(pi).swap(u.row(k));
            }
            if (pj != k) {
                d.col(pj).swap(d.col(k));
                v.col(pj).swap(v.col(k));
            }
            bool clean = true;
            for (Eigen::Index i = k + 1; i < m; ++i) {
                if (d(i, k) == 0) continue;
                Scalar q = d(i, k) / d(k, k);
                if (q != 0) {
                    d.row(i) -= d.row(k) * q;
                    u.row(i) -= u.row(k) * q;
                }
                if (d(i, k) != 0) clean = false;
            }
            for (Eigen::Index j = k + 1; j < n; ++j) {
                if (d(k, j) == 0) continue;
                Scalar q = d(k, j) / d(k, k);
                if (q != 0) {
                    d.col(j) -= d.col(k) * q;
                    v.col(j) -= v.col(k) * q;
                }
                if (d(k, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility gate: the pivot must divide the rest of the
            // submatrix, otherwise fold an offending row in and repeat.
            Eigen::Index bad = -1;
            for (Eigen::Index i = k + 1; i < m && bad < 0; ++i)
                for (Eigen::Index j = k + 1; j < n; ++j)
                    if (d(i, j) % d(k, k) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            d.row(k) += d.row(bad);
            u.row(k) += u.row(bad);
        }
        if (submatrix_zero) break;
        if (d(k, k) < 0) {
            d.row(k) = -d.row(k);
            u.row(k) = -u.row(k);
        }
    }

    return {std::move(d), std::move(u), std::move(v)};
}

}  // namespace zlattice
