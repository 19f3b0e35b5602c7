#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "filiaut/algebra.hpp"
#include "filiaut/linalg.hpp"
#include "filiaut/scalar.hpp"

namespace filiaut {

/// Parameters generating one automorphism.  `a` is the image of e_1.  The
/// optional fields belong to specific families: b_nm1 to the filiform ones
/// (defaults to 0 when absent), b_n to Mu11 (required, nonzero), sqrt_a1 to
/// Mu12 (the square-root branch s with s^2 = a_1; may be omitted for odd n,
/// where the matrix only involves even powers of s).
template <class S>
struct AutParams {
  Family family = Family::Mu0;
  int n = 0;
  std::vector<S> a;
  std::optional<S> b_nm1;
  std::optional<S> b_n;
  std::optional<S> sqrt_a1;

  S bnm1_or_zero() const { return b_nm1 ? *b_nm1 : S(0); }
};

template <class S>
void validate(const AutParams<S>& p) {
  const int n = p.n;
  if (p.family == Family::Mu0 ? n < 2 : n < 4)
    throw std::invalid_argument("parameter dimension below the family minimum");
  if (static_cast<int>(p.a.size()) != n)
    throw std::invalid_argument("parameter vector a must have length n");
  if (scalar_zero(p.a[0])) throw std::invalid_argument("a_1 must be nonzero");
  switch (p.family) {
    case Family::Mu0:
      if (p.b_nm1 || p.b_n || p.sqrt_a1)
        throw std::invalid_argument("null-filiform parameters take only a");
      break;
    case Family::Mu11:
      if (!p.b_n || scalar_zero(*p.b_n))
        throw std::invalid_argument("b_n must be present and nonzero");
      if (p.sqrt_a1) throw std::invalid_argument("sqrt_a1 applies to mu12 only");
      break;
    case Family::Mu12:
      if (p.b_n) throw std::invalid_argument("b_n applies to mu11 only");
      if (p.sqrt_a1) {
        if (!scalar_eq(*p.sqrt_a1 * *p.sqrt_a1, p.a[0]))
          throw std::invalid_argument("sqrt_a1^2 must equal a_1");
      } else if (n % 2 == 0) {
        throw std::invalid_argument("sqrt_a1 is required for even n");
      }
      break;
    case Family::Mu13:
      if (p.b_n || p.sqrt_a1)
        throw std::invalid_argument("mu13 parameters take a and b_nm1 only");
      break;
    case Family::Mu14:
      if (p.b_n || p.sqrt_a1)
        throw std::invalid_argument("mu14 parameters take a and b_nm1 only");
      if (!scalar_eq(p.a[0], S(1)))
        throw std::invalid_argument("mu14 requires a_1 = 1");
      break;
  }
}

/// Coefficients of (a_1 t + a_2 t^2 + ... )^i for i = 1..max_pow, truncated at
/// degree max_deg.  pw[i][d] = coefficient of t^d (pw[0] unused).
template <class S>
std::vector<std::vector<S>> truncated_powers(const std::vector<S>& a, int max_pow, int max_deg) {
  std::vector<std::vector<S>> pw(max_pow + 1, std::vector<S>(max_deg + 1, S(0)));
  if (max_pow < 1) return pw;
  for (int d = 1; d <= max_deg && d <= static_cast<int>(a.size()); ++d) pw[1][d] = a[d - 1];
  for (int i = 2; i <= max_pow; ++i)
    for (int d1 = i - 1; d1 <= max_deg; ++d1) {
      if (is_exact_zero(pw[i - 1][d1])) continue;
      for (int d2 = 1; d1 + d2 <= max_deg && d2 <= static_cast<int>(a.size()); ++d2)
        pw[i][d1 + d2] += pw[i - 1][d1] * a[d2 - 1];
    }
  return pw;
}

/// Sum over ordered i-tuples (k_1,...,k_i) of positive integers with
/// k_1 + ... + k_i = j of a_{k_1} ... a_{k_i}.
template <class S>
S composition_sum(const std::vector<S>& a, int i, int j) {
  if (i < 1 || j < i) return S(0);
  return truncated_powers(a, i, j)[i][j];
}

template <class S>
S scalar_pow(S base, int e) {
  S acc(1);
  for (int k = 0; k < e; ++k) acc *= base;
  return acc;
}

/// Matrix of the automorphism generated by p: column j is the image of e_j.
template <class S>
Matrix<S> build_automorphism(const AutParams<S>& p) {
  validate(p);
  const int n = p.n;
  Matrix<S> m = Matrix<S>::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, 0) = p.a[i];
  const int last_power_col = p.family == Family::Mu0 ? n : n - 1;
  const int row_cap = p.family == Family::Mu0 ? n : n - 1;
  const auto pw = truncated_powers(p.a, last_power_col, row_cap);
  for (int col = 2; col <= last_power_col; ++col)
    for (int row = col; row <= row_cap; ++row) m(row - 1, col - 1) = pw[col][row];
  if (p.family == Family::Mu0) return m;

  const S an = p.a[n - 1];
  switch (p.family) {
    case Family::Mu11:
      m(n - 2, n - 1) = p.bnm1_or_zero();
      m(n - 1, n - 1) = *p.b_n;
      break;
    case Family::Mu12: {
      // s^{n-3} and s^{n-1} share the branch s = sqrt_a1; for odd n both are
      // even powers, so a_1 alone suffices.
      S s_nm3, s_nm1;
      if (p.sqrt_a1) {
        s_nm3 = scalar_pow(*p.sqrt_a1, n - 3);
        s_nm1 = scalar_pow(*p.sqrt_a1, n - 1);
      } else {
        s_nm3 = scalar_pow(p.a[0], (n - 3) / 2);
        s_nm1 = scalar_pow(p.a[0], (n - 1) / 2);
      }
      m(n - 2, 1) += an * an;
      m(n - 3, n - 1) = -an * s_nm3;
      m(n - 2, n - 1) = p.bnm1_or_zero();
      m(n - 1, n - 1) = s_nm1;
      break;
    }
    case Family::Mu13:
      m(n - 2, 1) += p.a[0] * an;
      m(n - 2, n - 1) = p.bnm1_or_zero();
      m(n - 1, n - 1) = scalar_pow(p.a[0], n - 2);
      break;
    case Family::Mu14:
      m(n - 2, 1) += p.a[0] * an + an * an;
      m(n - 3, n - 1) = -an;
      m(n - 2, n - 1) = p.bnm1_or_zero();
      m(n - 1, n - 1) = S(1);
      break;
    default:
      break;
  }
  return m;
}

/// Verdict of the brute-force multiplicativity check.
struct AutVerdict {
  bool ok = false;
  std::optional<std::pair<int, int>> bad_pair;  // first failing basis pair, 1-based
  std::string detail;

  explicit operator bool() const { return ok; }
};

/// Checks that m is invertible and multiply(m e_i, m e_j) = m (e_i e_j) for
/// every basis pair.
template <class S>
AutVerdict is_automorphism(const Algebra& alg, const Matrix<S>& m) {
  const int n = alg.n;
  if (m.rows() != n || m.cols() != n) return {false, std::nullopt, "dimension mismatch"};
  if (!is_invertible(m)) return {false, std::nullopt, "singular matrix"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vector<S> lhs = multiply<S>(alg, m.col(i), m.col(j));
      Vector<S> rhs = Vector<S>::Zero(n);
      const RVector& table = alg.product(i, j);
      for (int k = 0; k < n; ++k)
        if (table(k) != 0) rhs += ScalarMode<S>::from(table(k)) * m.col(k);
      if (!entries_eq(lhs, rhs))
        return {false, std::make_pair(i + 1, j + 1),
                "multiplicativity fails at basis pair (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + ")"};
    }
  return {true, std::nullopt, ""};
}

template <class S>
Matrix<S> compose(const Matrix<S>& m1, const Matrix<S>& m2) {
  if (m1.cols() != m2.rows()) throw std::invalid_argument("compose: dimension mismatch");
  return m1 * m2;
}

template <class S>
struct RecoverResult {
  std::optional<AutParams<S>> params;
  std::string error;

  explicit operator bool() const { return params.has_value(); }
};

/// Inverts the parameterization: reads a from column 1 and the family's last
/// column parameters, rebuilds, and compares entry by entry.  For odd-n mu12
/// the square-root branch is not visible in the matrix (even powers only), so
/// sqrt_a1 is left empty.
template <class S>
RecoverResult<S> recover_params(Family f, int n, const Matrix<S>& m) {
  if (m.rows() != n || m.cols() != n) return {std::nullopt, "dimension mismatch"};
  AutParams<S> p;
  p.family = f;
  p.n = n;
  p.a.resize(n);
  for (int i = 0; i < n; ++i) p.a[i] = m(i, 0);
  if (scalar_zero(p.a[0])) return {std::nullopt, "a_1 = 0 is not invertible"};
  switch (f) {
    case Family::Mu0:
      break;
    case Family::Mu11:
      p.b_nm1 = m(n - 2, n - 1);
      p.b_n = m(n - 1, n - 1);
      break;
    case Family::Mu12:
      p.b_nm1 = m(n - 2, n - 1);
      if (n % 2 == 0) p.sqrt_a1 = m(n - 1, n - 1) / scalar_pow(p.a[0], (n - 2) / 2);
      break;
    case Family::Mu13:
      p.b_nm1 = m(n - 2, n - 1);
      break;
    case Family::Mu14:
      p.b_nm1 = m(n - 2, n - 1);
      break;
  }
  Matrix<S> rebuilt;
  try {
    rebuilt = build_automorphism(p);
  } catch (const std::invalid_argument& e) {
    return {std::nullopt, e.what()};
  }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (!scalar_eq(m(i, j), rebuilt(i, j)))
        return {std::nullopt, "matrix is outside the parameterized family: entry (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ") does not match its rebuilt value"};
  return {p, ""};
}

template <class S>
bool params_eq(const AutParams<S>& x, const AutParams<S>& y) {
  if (x.family != y.family || x.n != y.n || x.a.size() != y.a.size()) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (!scalar_eq(x.a[i], y.a[i])) return false;
  auto opt_eq = [](const std::optional<S>& u, const std::optional<S>& v) {
    if (u.has_value() != v.has_value()) return false;
    return !u || scalar_eq(*u, *v);
  };
  return opt_eq(x.b_nm1, y.b_nm1) && opt_eq(x.b_n, y.b_n) && opt_eq(x.sqrt_a1, y.sqrt_a1);
}

inline AutParams<Cplx> to_cplx(const AutParams<Rational>& p) {
  AutParams<Cplx> out;
  out.family = p.family;
  out.n = p.n;
  out.a.reserve(p.a.size());
  for (const auto& v : p.a) out.a.push_back(to_cplx(v));
  if (p.b_nm1) out.b_nm1 = to_cplx(*p.b_nm1);
  if (p.b_n) out.b_n = to_cplx(*p.b_n);
  if (p.sqrt_a1) out.sqrt_a1 = to_cplx(*p.sqrt_a1);
  return out;
}

/// Parameters of the identity map in each family.
AutParams<Rational> identity_params(Family f, int n);

/// Deterministic small-rational parameter generator honoring every family
/// constraint (a_1 nonzero, mu14 a_1 = 1, mu11 b_n nonzero, mu12 a_1 a
/// perfect square with sqrt_a1 recorded for even n).
AutParams<Rational> random_automorphism(Family f, int n, std::mt19937_64& rng);
AutParams<Rational> random_automorphism(Family f, int n, unsigned long seed);

}  // namespace filiaut
