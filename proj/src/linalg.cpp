#include "belted/linalg.hpp"

#include <stdexcept>

namespace belted {

RationalMatrix rational_inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("rational_inverse: matrix is not square");
  const Eigen::Index n = a.rows();
  RationalMatrix m = a;
  RationalMatrix inv = RationalMatrix::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && is_zero(m(piv, c))) ++piv;
    if (piv == n) throw std::domain_error("rational_inverse: singular matrix");
    detail::swap_rows(m, c, piv);
    detail::swap_rows(inv, c, piv);
    Rational d = m(c, c);
    m.row(c) /= d;
    inv.row(c) /= d;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || is_zero(m(r, c))) continue;
      Rational f = m(r, c);
      m.row(r) -= f * m.row(c);
      inv.row(r) -= f * inv.row(c);
    }
  }
  return inv;
}

Integer integer_determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("integer_determinant: matrix is not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      Eigen::Index piv = k + 1;
      while (piv < n && is_zero(m(piv, k))) ++piv;
      if (piv == n) return 0;
      detail::swap_rows(m, k, piv);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign > 0 ? Integer(m(n - 1, n - 1)) : Integer(-m(n - 1, n - 1));
}

}  // namespace belted
