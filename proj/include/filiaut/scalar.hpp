#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace filiaut {

/// Exact scalar: arbitrary-precision rational, always in lowest terms with
/// positive denominator (mpq canonical form).
using Rational = mpq_class;

/// Approximate scalar for computations that leave the rationals.
using Cplx = std::complex<double>;

/// Entrywise tolerance for approximate comparisons, scaled by max(1, |expected|).
inline constexpr double kTol = 1e-9;

Rational rat(long num, long den = 1);

/// Parses "p" or "p/q" (optional sign, q > 0 after canonicalization).
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

double to_double(const Rational& q);
Cplx to_cplx(const Rational& q);

inline bool scalar_zero(const Rational& v) { return sgn(v) == 0; }
inline bool scalar_zero(const Cplx& v) { return std::abs(v) <= kTol; }

/// Bitwise zero test, safe to use for skip-work fast paths in either mode.
inline bool is_exact_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_exact_zero(const Cplx& v) { return v.real() == 0.0 && v.imag() == 0.0; }

/// Compares a computed value against an expected one: exact equality for
/// rationals, scaled tolerance for complex.
inline bool scalar_eq(const Rational& got, const Rational& expected) {
  return got == expected;
}
inline bool scalar_eq(const Cplx& got, const Cplx& expected) {
  return std::abs(got - expected) <= kTol * std::max(1.0, std::abs(expected));
}

template <class S>
struct ScalarMode;

template <>
struct ScalarMode<Rational> {
  static constexpr bool exact = true;
  static Rational from(const Rational& q) { return q; }
};

template <>
struct ScalarMode<Cplx> {
  static constexpr bool exact = false;
  static Cplx from(const Rational& q) { return to_cplx(q); }
};

/// Rational k-th root of `value` if one exists (k >= 1).  For even k and
/// positive value the positive root is returned.
std::optional<Rational> exact_nth_root(const Rational& value, int k);

/// All k complex k-th roots, principal root first, then by increasing argument.
std::vector<Cplx> cplx_nth_roots(const Cplx& value, int k);

struct RootSet {
  std::optional<Rational> exact;  // rational root, when one exists
  std::vector<Cplx> roots;        // all k complex roots
};
RootSet nth_roots(const Rational& value, int k);

/// Solutions of z^k = value within the scalar's own field, preferred first:
/// for rationals the positive exact root then its negative (even k); for
/// complex all k roots in principal order.  Empty when no rational root exists.
std::vector<Rational> root_candidates(const Rational& value, int k);
std::vector<Cplx> root_candidates(const Cplx& value, int k);

}  // namespace filiaut

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
