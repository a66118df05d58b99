#pragma once

// Exact dense linear algebra over Z and Q on Eigen matrices.

#include <utility>
#include <vector>

#include "belted/scalar.hpp"

namespace belted {

/// Smith normal form `left * A * right = diag(invariants, 0, ...)`.
///
/// `invariants` are positive and each divides the next. The transforms are
/// unimodular and are only filled when requested.
template <typename Scalar>
struct SmithForm {
  std::vector<Scalar> invariants;
  Matrix<Scalar> left;
  Matrix<Scalar> right;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(invariants.size()); }

  /// Invariant factors greater than one: the torsion of the cokernel.
  std::vector<Scalar> torsion() const {
    std::vector<Scalar> out;
    for (const auto& d : invariants)
      if (d != Scalar(1)) out.push_back(d);
    return out;
  }
};

namespace detail {

template <typename Scalar>
void swap_rows(Matrix<Scalar>& a, Eigen::Index i, Eigen::Index j) {
  if (i != j) a.row(i).swap(a.row(j));
}

template <typename Scalar>
void swap_cols(Matrix<Scalar>& a, Eigen::Index i, Eigen::Index j) {
  if (i != j) a.col(i).swap(a.col(j));
}

// row_i -= q * row_t
template <typename Scalar>
void row_axpy(Matrix<Scalar>& a, Eigen::Index i, Eigen::Index t, const Scalar& q, Eigen::Index from = 0) {
  for (Eigen::Index c = from; c < a.cols(); ++c)
    if (!is_zero(a(t, c))) a(i, c) -= q * a(t, c);
}

// col_j -= q * col_t
template <typename Scalar>
void col_axpy(Matrix<Scalar>& a, Eigen::Index j, Eigen::Index t, const Scalar& q, Eigen::Index from = 0) {
  for (Eigen::Index r = from; r < a.rows(); ++r)
    if (!is_zero(a(r, t))) a(r, j) -= q * a(r, t);
}

}  // namespace detail

template <typename Scalar>
SmithForm<Scalar> smith_normal_form(Matrix<Scalar> a, bool with_transforms = false) {
  using detail::col_axpy;
  using detail::row_axpy;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();

  SmithForm<Scalar> out;
  if (with_transforms) {
    out.left = Matrix<Scalar>::Identity(rows, rows);
    out.right = Matrix<Scalar>::Identity(cols, cols);
  }

  auto swap_r = [&](Eigen::Index i, Eigen::Index j) {
    detail::swap_rows(a, i, j);
    if (with_transforms) detail::swap_rows(out.left, i, j);
  };
  auto swap_c = [&](Eigen::Index i, Eigen::Index j) {
    detail::swap_cols(a, i, j);
    if (with_transforms) detail::swap_cols(out.right, i, j);
  };

  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    Eigen::Index pr = -1, pc = -1;
    Scalar best{};
    for (Eigen::Index r = t; r < rows; ++r)
      for (Eigen::Index c = t; c < cols; ++c)
        if (!is_zero(a(r, c))) {
          Scalar v = abs_value(a(r, c));
          if (pr < 0 || v < best) {
            best = v;
            pr = r;
            pc = c;
          }
        }
    if (pr < 0) break;
    swap_r(t, pr);
    swap_c(t, pc);

    for (;;) {
      bool clean = true;
      for (Eigen::Index r = t + 1; r < rows; ++r) {
        if (is_zero(a(r, t))) continue;
        Scalar q = trunc_div(a(r, t), a(t, t));
        row_axpy(a, r, t, q, t);
        if (with_transforms) row_axpy(out.left, r, t, q);
        if (!is_zero(a(r, t))) clean = false;
      }
      for (Eigen::Index c = t + 1; c < cols; ++c) {
        if (is_zero(a(t, c))) continue;
        Scalar q = trunc_div(a(t, c), a(t, t));
        col_axpy(a, c, t, q, t);
        if (with_transforms) col_axpy(out.right, c, t, q);
        if (!is_zero(a(t, c))) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote it.
        Eigen::Index br = t, bc = t;
        Scalar bv = abs_value(a(t, t));
        for (Eigen::Index r = t + 1; r < rows; ++r)
          if (!is_zero(a(r, t)) && abs_value(a(r, t)) < bv) {
            bv = abs_value(a(r, t));
            br = r;
            bc = t;
          }
        for (Eigen::Index c = t + 1; c < cols; ++c)
          if (!is_zero(a(t, c)) && abs_value(a(t, c)) < bv) {
            bv = abs_value(a(t, c));
            br = t;
            bc = c;
          }
        swap_r(t, br);
        swap_c(t, bc);
        continue;
      }
      // Divisibility: the pivot must divide the whole trailing block.
      Eigen::Index bad = -1;
      for (Eigen::Index r = t + 1; r < rows && bad < 0; ++r)
        for (Eigen::Index c = t + 1; c < cols; ++c)
          if (!is_zero(a(r, c)) && !is_zero(Scalar(a(r, c) - trunc_div(a(r, c), a(t, t)) * a(t, t)))) {
            bad = r;
            break;
          }
      if (bad < 0) break;
      // row_t += row_bad, then re-reduce.
      row_axpy(a, t, bad, Scalar(-1), t);
      if (with_transforms) row_axpy(out.left, t, bad, Scalar(-1));
    }

    if (a(t, t) < Scalar(0)) {
      a.row(t) = -a.row(t);
      if (with_transforms) out.left.row(t) = -out.left.row(t);
    }
    out.invariants.push_back(a(t, t));
  }
  return out;
}

/// True iff `x` lies in the integer column span of the matrix whose Smith form
/// (computed with transforms) is `snf`.
template <typename Scalar>
bool in_integer_image(const SmithForm<Scalar>& snf, const Vector<Scalar>& x) {
  Vector<Scalar> y = snf.left * x;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (i < snf.rank()) {
      const Scalar& d = snf.invariants[static_cast<std::size_t>(i)];
      if (!is_zero(Scalar(y(i) - trunc_div(y(i), d) * d))) return false;
    } else if (!is_zero(y(i))) {
      return false;
    }
  }
  return true;
}

/// Rank over a field by Gaussian elimination (exact for Rational).
template <typename Scalar>
Eigen::Index field_rank(Matrix<Scalar> a) {
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < a.cols() && rank < a.rows(); ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = rank; r < a.rows(); ++r)
      if (!is_zero(a(r, c))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    detail::swap_rows(a, rank, piv);
    for (Eigen::Index r = rank + 1; r < a.rows(); ++r) {
      if (is_zero(a(r, c))) continue;
      Scalar f = a(r, c) / a(rank, c);
      detail::row_axpy(a, r, rank, f, c);
    }
    ++rank;
  }
  return rank;
}

/// Exact inverse of a square rational matrix; throws on singular input.
RationalMatrix rational_inverse(const RationalMatrix& a);

/// Determinant of a small integer matrix (Bareiss, exact).
Integer integer_determinant(const IntMatrix& a);

}  // namespace belted
