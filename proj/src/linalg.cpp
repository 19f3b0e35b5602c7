#include "filiaut/linalg.hpp"

#include <cassert>
#include <vector>

namespace filiaut {

CMatrix to_cplx(const RMatrix& m) {
  CMatrix out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = to_cplx(m(i, j));
  return out;
}

CVector to_cplx(const RVector& v) {
  CVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = to_cplx(v(i));
  return out;
}

namespace {

// Clears denominators row by row: m = diag(1/scale) * Z with integer Z.
void clear_denominators(const RMatrix& m, std::vector<std::vector<mpz_class>>& z,
                        std::vector<mpz_class>& scale) {
  const int n = static_cast<int>(m.rows());
  z.assign(n, std::vector<mpz_class>(m.cols()));
  scale.assign(n, 1);
  for (int i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      mpz_lcm(scale[i].get_mpz_t(), scale[i].get_mpz_t(), m(i, j).get_den_mpz_t());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      z[i][j] = m(i, j).get_num() * (scale[i] / m(i, j).get_den());
  }
}

mpz_class divided_exactly(const mpz_class& num, const mpz_class& den) {
  assert(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()));
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// One-step fraction-free Gauss-Jordan.  Every intermediate entry is a minor of
// the (row-permuted) input, so the division by the previous pivot is exact.
// On success the diagonal holds det and aug holds det * inverse.
bool bareiss_jordan(std::vector<std::vector<mpz_class>>& a, int n, mpz_class& det) {
  const int cols = static_cast<int>(a[0].size());
  mpz_class prev = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (a[r][k] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    if (pivot != k) std::swap(a[pivot], a[k]);
    const mpz_class p = a[k][k];
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const mpz_class aik = a[i][k];
      for (int j = 0; j < cols; ++j)
        a[i][j] = divided_exactly(p * a[i][j] - aik * a[k][j], prev);
    }
    prev = p;
  }
  det = prev;
  return true;
}

}  // namespace

std::optional<RMatrix> try_inverse(const RMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const int n = static_cast<int>(m.rows());
  std::vector<std::vector<mpz_class>> aug;
  std::vector<mpz_class> scale;
  clear_denominators(m, aug, scale);
  for (int i = 0; i < n; ++i) {
    aug[i].resize(2 * n);
    aug[i][n + i] = 1;
  }
  mpz_class det;
  if (!bareiss_jordan(aug, n, det)) return std::nullopt;
  RMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational q(aug[i][n + j] * scale[j], det);
      q.canonicalize();
      inv(i, j) = q;
    }
  return inv;
}

std::optional<CMatrix> try_inverse(const CMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  if (!is_invertible(m)) return std::nullopt;
  return m.partialPivLu().inverse();
}

bool is_invertible(const RMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_invertible: matrix not square");
  const int n = static_cast<int>(m.rows());
  std::vector<std::vector<mpz_class>> a;
  std::vector<mpz_class> scale;
  clear_denominators(m, a, scale);
  // forward Bareiss only: det != 0 iff all pivots found
  mpz_class prev = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (a[r][k] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    if (pivot != k) std::swap(a[pivot], a[k]);
    const mpz_class p = a[k][k];
    for (int i = k + 1; i < n; ++i) {
      const mpz_class aik = a[i][k];
      for (int j = k; j < n; ++j)
        a[i][j] = divided_exactly(p * a[i][j] - aik * a[k][j], prev);
    }
    prev = p;
  }
  return true;
}

bool is_invertible(const CMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_invertible: matrix not square");
  if (m.rows() == 0) return true;
  auto lu = m.partialPivLu();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return lu.matrixLU().diagonal().cwiseAbs().minCoeff() > 1e-12 * scale;
}

int rref_in_place(RMatrix& rows) {
  const int nr = static_cast<int>(rows.rows());
  const int nc = static_cast<int>(rows.cols());
  int rank = 0;
  for (int col = 0; col < nc && rank < nr; ++col) {
    int pivot = -1;
    for (int r = rank; r < nr; ++r)
      if (rows(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    rows.row(rank).swap(rows.row(pivot));
    const Rational p = rows(rank, col);
    for (int c = col; c < nc; ++c) rows(rank, c) /= p;
    for (int r = 0; r < nr; ++r) {
      if (r == rank || rows(r, col) == 0) continue;
      const Rational f = rows(r, col);
      for (int c = col; c < nc; ++c) rows(r, c) -= f * rows(rank, c);
    }
    ++rank;
  }
  for (int r = rank; r < nr; ++r) rows.row(r).setZero();
  return rank;
}

}  // namespace filiaut
