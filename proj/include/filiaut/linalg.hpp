#pragma once

#include <Eigen/Dense>
#include <optional>

#include "filiaut/scalar.hpp"

namespace filiaut {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using RMatrix = Matrix<Rational>;
using RVector = Vector<Rational>;
using CMatrix = Matrix<Cplx>;
using CVector = Vector<Cplx>;

template <class S>
Vector<S> mat_vec(const Matrix<S>& m, const Vector<S>& v) {
  if (m.cols() != v.size())
    throw std::invalid_argument("mat_vec: dimension mismatch");
  return m * v;
}

CMatrix to_cplx(const RMatrix& m);
CVector to_cplx(const RVector& v);

/// Exact inverse via fraction-free (Bareiss) Gauss-Jordan elimination on the
/// denominator-cleared integer matrix.  Empty when singular.
std::optional<RMatrix> try_inverse(const RMatrix& m);

/// Approximate inverse via partial-pivot LU.  Empty when numerically singular.
std::optional<CMatrix> try_inverse(const CMatrix& m);

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  auto inv = try_inverse(m);
  if (!inv) throw std::domain_error("inverse: singular matrix");
  return *inv;
}

bool is_invertible(const RMatrix& m);
bool is_invertible(const CMatrix& m);

/// In-place row reduction; returns the rank.  Rows beyond the rank are zeroed.
int rref_in_place(RMatrix& rows);

template <class S>
bool entries_eq(const Matrix<S>& got, const Matrix<S>& expected) {
  if (got.rows() != expected.rows() || got.cols() != expected.cols()) return false;
  for (Eigen::Index j = 0; j < got.cols(); ++j)
    for (Eigen::Index i = 0; i < got.rows(); ++i)
      if (!scalar_eq(got(i, j), expected(i, j))) return false;
  return true;
}

template <class S>
bool entries_eq(const Vector<S>& got, const Vector<S>& expected) {
  if (got.size() != expected.size()) return false;
  for (Eigen::Index i = 0; i < got.size(); ++i)
    if (!scalar_eq(got(i), expected(i))) return false;
  return true;
}

inline double abs_value(const Rational& v) { return std::abs(v.get_d()); }
inline double abs_value(const Cplx& v) { return std::abs(v); }

/// Largest entrywise error of got - expected, scaled by max(1, |expected|).
template <class S>
double scaled_residual(const Vector<S>& got, const Vector<S>& expected) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < got.size(); ++i) {
    if constexpr (ScalarMode<S>::exact) {
      if (got(i) == expected(i)) continue;
    }
    const double err = abs_value(S(got(i) - expected(i)));
    worst = std::max(worst, err / std::max(1.0, abs_value(expected(i))));
  }
  return worst;
}

}  // namespace filiaut
