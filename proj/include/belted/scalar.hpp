#pragma once

// Exact scalar types usable as Eigen matrix coefficients.
//
// Integer: mpz_class (arbitrary precision).
// Rational: mpq_class (arbitrary precision).
// CheckedInt: 64-bit integer that throws Overflow instead of wrapping; used as
// the fast path for homology computations, which retry with Integer on overflow.

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <gmpxx.h>
#include <Eigen/Core>

namespace belted {

using Integer = mpz_class;
using Rational = mpq_class;

struct Overflow : std::overflow_error {
  Overflow() : std::overflow_error("64-bit integer overflow") {}
};

class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const { return v_; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow();
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow();
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow();
    return r;
  }
  // Truncating division, same as the builtin.
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
    if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1) throw Overflow();
    return a.v_ / b.v_;
  }
  friend CheckedInt operator%(CheckedInt a, CheckedInt b) { return b.v_ == -1 ? 0 : a.v_ % b.v_; }
  CheckedInt operator-() const { return CheckedInt(0) - *this; }
  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }

  friend bool operator==(CheckedInt a, CheckedInt b) { return a.v_ == b.v_; }
  friend auto operator<=>(CheckedInt a, CheckedInt b) { return a.v_ <=> b.v_; }

  friend std::ostream& operator<<(std::ostream& os, CheckedInt c) { return os << c.v_; }

 private:
  std::int64_t v_ = 0;
};

// Scalar helpers shared by the templated algorithms.
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(CheckedInt x) { return x.value() == 0; }

inline Integer abs_value(const Integer& x) { return abs(x); }
inline CheckedInt abs_value(CheckedInt x) { return x.value() < 0 ? -x : x; }

// Quotient rounded toward zero; remainder has the sign of the dividend.
inline Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline CheckedInt trunc_div(CheckedInt a, CheckedInt b) { return a / b; }

inline long to_long(const Integer& x) {
  if (!x.fits_slong_p()) throw Overflow();
  return x.get_si();
}
inline long to_long(CheckedInt x) { return static_cast<long>(x.value()); }

template <typename Scalar>
Scalar from_long(long v) {
  return Scalar(v);
}

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

}  // namespace belted

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<belted::CheckedInt> : GenericNumTraits<belted::CheckedInt> {
  using Real = belted::CheckedInt;
  using NonInteger = double;
  using Nested = belted::CheckedInt;
  using Literal = belted::CheckedInt;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 2
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 18; }
};

}  // namespace Eigen
