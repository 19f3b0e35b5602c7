#include "filiaut/local.hpp"

#include <numeric>
#include <type_traits>

namespace filiaut {

std::string to_string(ShapeVariant v) {
  return v == ShapeVariant::GenericDiagonal ? "generic-diagonal" : "linked-diagonal";
}

ShapeVariant parse_shape_variant(const std::string& s) {
  if (s == "generic-diagonal") return ShapeVariant::GenericDiagonal;
  if (s == "linked-diagonal") return ShapeVariant::LinkedDiagonal;
  throw std::invalid_argument("unknown shape variant: " + s);
}

std::string to_string(SolveMode m) {
  switch (m) {
    case SolveMode::Exact:
      return "exact";
    case SolveMode::Approx:
      return "approx";
    default:
      return "auto";
  }
}

namespace {

std::string entry_name(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

template <class S>
ShapeVerdict matches_local_shape(Family f, int n, const Matrix<S>& m, ShapeVariant variant) {
  if (m.rows() != n || m.cols() != n) return {false, "dimension mismatch"};
  const bool linked = variant == ShapeVariant::LinkedDiagonal;
  // Strictly upper entries must vanish except the slots a last-column
  // parameter can populate: (n-1,n) always, (n-2,n) for mu12/mu14 under the
  // linked variant.
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      if (f != Family::Mu0 && j == n) {
        if (i == n - 1) continue;
        if (i == n - 2 && linked && (f == Family::Mu12 || f == Family::Mu14)) continue;
      }
      if (!scalar_zero(m(i - 1, j - 1)))
        return {false, "entry " + entry_name(i, j) + " must vanish"};
    }
  // Filiform row n carries only the (n,1) and (n,n) slots.
  if (f != Family::Mu0)
    for (int j = 2; j <= n - 1; ++j)
      if (!scalar_zero(m(n - 1, j - 1)))
        return {false, "entry " + entry_name(n, j) + " must vanish"};
  for (int i = 1; i <= n; ++i)
    if (scalar_zero(m(i - 1, i - 1)))
      return {false, "diagonal entry " + entry_name(i, i) + " must be nonzero"};
  if (f == Family::Mu14) {
    if (!scalar_eq(m(n - 1, n - 1), S(1)))
      return {false, "entry " + entry_name(n, n) + " must equal 1"};
    if (linked)
      for (int i = 1; i <= n - 1; ++i)
        if (!scalar_eq(m(i - 1, i - 1), S(1)))
          return {false, "diagonal entry " + entry_name(i, i) + " must equal 1"};
  }
  if (linked && (f == Family::Mu12 || f == Family::Mu13)) {
    // A point mixing e_k and e_n binds the (k,k) and (n,n) entries to powers
    // of one scalar; existence of that scalar is equivalent to the cross
    // power equality below (exponents reduced by the gcd).
    const bool mu12 = f == Family::Mu12;
    const int hi = mu12 ? n - 3 : n - 2;
    const int last_exp = mu12 ? n - 1 : n - 2;
    for (int k = 2; k <= hi; ++k) {
      const int diag_exp = mu12 ? 2 * k : k;
      const int g = std::gcd(diag_exp, last_exp);
      if (!scalar_eq(scalar_pow(m(k - 1, k - 1), last_exp / g),
                     scalar_pow(m(n - 1, n - 1), diag_exp / g)))
        return {false, "diagonal entries " + entry_name(k, k) + " and " + entry_name(n, n) +
                           " violate the power link"};
    }
  }
  return {true, ""};
}

template ShapeVerdict matches_local_shape<Rational>(Family, int, const Matrix<Rational>&,
                                                    ShapeVariant);
template ShapeVerdict matches_local_shape<Cplx>(Family, int, const Matrix<Cplx>&, ShapeVariant);

namespace {

template <class S>
struct WitnessCtx {
  Family f;
  int n;
  const Matrix<S>& A;
  const Vector<S>& x;
  Vector<S> r;  // A x
  int m;        // first nonzero coordinate of x, 1-based
};

// Row value of M x over the composition-power columns [lo, min(hi, row)],
// evaluated with the currently known prefix of a (column 1 is a itself).
template <class S>
S power_row_value(const std::vector<S>& a, const Vector<S>& x, int row, int lo, int hi) {
  const int top = std::min(hi, row);
  if (lo > top) return S(0);
  const auto pw = truncated_powers(a, top, row);
  S val(0);
  for (int c = lo; c <= top; ++c)
    if (!is_exact_zero(x(c - 1))) val += pw[c][row] * x(c - 1);
  return val;
}

// Solves row `row` for a_{row-m+1}, which enters linearly with coefficient
// m a_1^{m-1} x_m; `extra` carries any known non-power contribution.
template <class S>
void forward_step(std::vector<S>& a, const WitnessCtx<S>& c, int row, int max_col,
                  const std::type_identity_t<S>& extra) {
  const int idx = row - c.m;
  a[idx] = S(0);
  const S val = power_row_value(a, c.x, row, c.m, max_col) + extra;
  const S coef = S(c.m) * scalar_pow(a[0], c.m - 1) * c.x(c.m - 1);
  a[idx] = (c.r(row - 1) - val) / coef;
}

template <class S>
AutParams<S> base_params(Family f, int n) {
  AutParams<S> p;
  p.family = f;
  p.n = n;
  p.a.assign(n, S(0));
  return p;
}

std::vector<Rational> nonzero_roots(const Rational& v, int k) {
  std::vector<Rational> out;
  for (const Rational& s : root_candidates(v, k))
    if (!scalar_zero(s)) out.push_back(s);
  return out;
}

std::vector<Cplx> nonzero_roots(const Cplx& v, int k) {
  std::vector<Cplx> out;
  for (const Cplx& s : root_candidates(v, k))
    if (!scalar_zero(s)) out.push_back(s);
  return out;
}

// a_1 choices for the row-m equation a_1^m x_m = r_m.
template <class S>
std::vector<S> leading_choices(const WitnessCtx<S>& c) {
  if (c.m == 1) {
    const S v = c.r(0) / c.x(0);
    if (scalar_zero(v)) return {};
    return {v};
  }
  return nonzero_roots(c.r(c.m - 1) / c.x(c.m - 1), c.m);
}

template <class S>
struct CandList {
  std::vector<AutParams<S>> cands;
  std::string err;
};

template <class S>
CandList<S> candidates_mu0(const WitnessCtx<S>& c) {
  CandList<S> out;
  const auto a1s = leading_choices(c);
  if (a1s.empty()) {
    out.err = "row " + std::to_string(c.m) + " leaves no usable value for a_1";
    return out;
  }
  for (const S& a1 : a1s) {
    auto p = base_params<S>(Family::Mu0, c.n);
    p.a[0] = a1;
    for (int row = c.m + 1; row <= c.n; ++row) forward_step(p.a, c, row, c.n, S(0));
    out.cands.push_back(std::move(p));
  }
  return out;
}

template <class S>
CandList<S> candidates_mu11(const WitnessCtx<S>& c) {
  CandList<S> out;
  const int n = c.n, m = c.m;
  const S xn = c.x(n - 1);
  const bool xn_zero = is_exact_zero(xn);
  const S ann = c.A(n - 1, n - 1);
  const S bn_free = scalar_zero(ann) ? S(1) : ann;
  if (m <= n - 2) {
    const auto a1s = leading_choices(c);
    if (a1s.empty()) {
      out.err = "row " + std::to_string(m) + " leaves no usable value for a_1";
      return out;
    }
    for (const S& a1 : a1s) {
      auto p = base_params<S>(Family::Mu11, n);
      p.a[0] = a1;
      for (int row = m + 1; row <= n - 2; ++row) forward_step(p.a, c, row, n - 1, S(0));
      p.b_nm1 = S(0);
      forward_step(p.a, c, n - 1, n - 1, S(0));
      if (m == 1) {
        p.b_n = bn_free;
        p.a[n - 1] = (c.r(n - 1) - *p.b_n * xn) / c.x(0);
      } else {
        p.b_n = xn_zero ? bn_free : c.r(n - 1) / xn;
      }
      out.cands.push_back(std::move(p));
    }
  } else if (m == n - 1) {
    if (xn_zero) {
      const auto a1s = nonzero_roots(c.r(n - 2) / c.x(n - 2), n - 1);
      if (a1s.empty()) {
        out.err = "no usable root of order " + std::to_string(n - 1) + " for a_1";
        return out;
      }
      for (const S& a1 : a1s) {
        auto p = base_params<S>(Family::Mu11, n);
        p.a[0] = a1;
        p.b_nm1 = S(0);
        p.b_n = bn_free;
        out.cands.push_back(std::move(p));
      }
    } else {
      auto p = base_params<S>(Family::Mu11, n);
      p.a[0] = S(1);
      p.b_nm1 = (c.r(n - 2) - c.x(n - 2)) / xn;
      p.b_n = c.r(n - 1) / xn;
      out.cands.push_back(std::move(p));
    }
  } else {  // m == n
    auto p = base_params<S>(Family::Mu11, n);
    p.a[0] = S(1);
    p.b_nm1 = c.r(n - 2) / xn;
    p.b_n = c.r(n - 1) / xn;
    out.cands.push_back(std::move(p));
  }
  return out;
}

// Appends one candidate per admissible square-root branch of stem.a[0]; for
// odd n the parameter may stay empty (only even powers of it occur).
template <class S>
void append_sqrt_options(std::vector<AutParams<S>>& cands, AutParams<S> stem, int n) {
  if (n % 2 == 1) {
    cands.push_back(std::move(stem));
    return;
  }
  for (const S& s : root_candidates(stem.a[0], 2)) {
    if (scalar_zero(s)) continue;
    auto p = stem;
    p.sqrt_a1 = s;
    cands.push_back(std::move(p));
  }
}

template <class S>
CandList<S> candidates_mu12(const WitnessCtx<S>& c) {
  CandList<S> out;
  const int n = c.n, m = c.m;
  const S xn = c.x(n - 1);
  const bool xn_zero = is_exact_zero(xn);
  auto spow = [](const AutParams<S>& p, int e) -> S {
    return p.sqrt_a1 ? scalar_pow(*p.sqrt_a1, e) : scalar_pow(p.a[0], e / 2);
  };
  if (m == 1) {
    const S a1 = c.r(0) / c.x(0);
    if (scalar_zero(a1)) {
      out.err = "row 1 leaves no usable value for a_1";
      return out;
    }
    auto stem = base_params<S>(Family::Mu12, n);
    stem.a[0] = a1;
    std::vector<AutParams<S>> stems;
    append_sqrt_options(stems, stem, n);
    if (stems.empty()) {
      out.err = "a_1 admits no usable square root";
      return out;
    }
    for (auto& p : stems) {
      for (int row = 2; row <= n - 3; ++row) forward_step(p.a, c, row, n - 1, S(0));
      p.a[n - 1] = (c.r(n - 1) - spow(p, n - 1) * xn) / c.x(0);
      forward_step(p.a, c, n - 2, n - 1, -p.a[n - 1] * spow(p, n - 3) * xn);
      p.b_nm1 = S(0);
      forward_step(p.a, c, n - 1, n - 1, p.a[n - 1] * p.a[n - 1] * c.x(1));
      out.cands.push_back(std::move(p));
    }
  } else if (m <= n - 3) {
    if (!xn_zero) {
      // Rows m and n bind s jointly: s^{2m} x_m = r_m and s^{n-1} x_n = r_n.
      // Any common solution is among the roots of the second equation.
      const S target = c.r(m - 1) / c.x(m - 1);
      for (const S& s : nonzero_roots(c.r(n - 1) / xn, n - 1)) {
        if (!scalar_eq(scalar_pow(s, 2 * m), target)) continue;
        auto p = base_params<S>(Family::Mu12, n);
        p.sqrt_a1 = s;
        p.a[0] = s * s;
        p.b_nm1 = S(0);
        for (int row = m + 1; row <= n - 1; ++row) forward_step(p.a, c, row, n - 1, S(0));
        out.cands.push_back(std::move(p));
      }
      if (out.cands.empty()) out.err = "rows " + std::to_string(m) + " and " +
                                       std::to_string(n) + " admit no common root";
    } else {
      std::vector<AutParams<S>> stems;
      for (const S& a1 : leading_choices(c)) {
        auto stem = base_params<S>(Family::Mu12, n);
        stem.a[0] = a1;
        append_sqrt_options(stems, std::move(stem), n);
      }
      if (stems.empty()) {
        out.err = "no usable exact root for a_1";
        return out;
      }
      for (auto& p : stems) {
        p.b_nm1 = S(0);
        for (int row = m + 1; row <= n - 1; ++row) forward_step(p.a, c, row, n - 1, S(0));
        out.cands.push_back(std::move(p));
      }
    }
  } else if (m == n - 2) {
    if (!xn_zero) {
      for (const S& s : nonzero_roots(c.r(n - 1) / xn, n - 1)) {
        auto p = base_params<S>(Family::Mu12, n);
        p.sqrt_a1 = s;
        p.a[0] = s * s;
        // row n-2: a_1^{n-2} x_{n-2} - a_n s^{n-3} x_n = r_{n-2}
        p.a[n - 1] =
            (scalar_pow(p.a[0], n - 2) * c.x(n - 3) - c.r(n - 3)) / (spow(p, n - 3) * xn);
        p.b_nm1 = S(0);
        forward_step(p.a, c, n - 1, n - 1, p.a[n - 1] * p.a[n - 1] * c.x(1));
        out.cands.push_back(std::move(p));
      }
      if (out.cands.empty()) out.err = "r_n/x_n admits no usable root";
    } else {
      std::vector<AutParams<S>> stems;
      for (const S& a1 : leading_choices(c)) {
        auto stem = base_params<S>(Family::Mu12, n);
        stem.a[0] = a1;
        append_sqrt_options(stems, std::move(stem), n);
      }
      if (stems.empty()) {
        out.err = "no usable exact root for a_1";
        return out;
      }
      for (auto& p : stems) {
        p.b_nm1 = S(0);
        forward_step(p.a, c, n - 1, n - 1, S(0));
        out.cands.push_back(std::move(p));
      }
    }
  } else if (m == n - 1) {
    if (xn_zero) {
      std::vector<AutParams<S>> stems;
      for (const S& a1 : nonzero_roots(c.r(n - 2) / c.x(n - 2), n - 1)) {
        auto stem = base_params<S>(Family::Mu12, n);
        stem.a[0] = a1;
        append_sqrt_options(stems, std::move(stem), n);
      }
      if (stems.empty()) {
        out.err = "no usable exact root for a_1";
        return out;
      }
      for (auto& p : stems) {
        p.b_nm1 = S(0);
        out.cands.push_back(std::move(p));
      }
    } else {
      for (const S& s : nonzero_roots(c.r(n - 1) / xn, n - 1)) {
        auto p = base_params<S>(Family::Mu12, n);
        p.sqrt_a1 = s;
        p.a[0] = s * s;
        p.a[n - 1] = -c.r(n - 3) / (spow(p, n - 3) * xn);
        p.b_nm1 = (c.r(n - 2) - scalar_pow(p.a[0], n - 1) * c.x(n - 2)) / xn;
        out.cands.push_back(std::move(p));
      }
      if (out.cands.empty()) out.err = "r_n/x_n admits no usable root";
    }
  } else {  // m == n
    for (const S& s : nonzero_roots(c.r(n - 1) / xn, n - 1)) {
      auto p = base_params<S>(Family::Mu12, n);
      p.sqrt_a1 = s;
      p.a[0] = s * s;
      p.a[n - 1] = -c.r(n - 3) / (spow(p, n - 3) * xn);
      p.b_nm1 = c.r(n - 2) / xn;
      out.cands.push_back(std::move(p));
    }
    if (out.cands.empty()) out.err = "r_n/x_n admits no usable root";
  }
  return out;
}

template <class S>
CandList<S> candidates_mu13(const WitnessCtx<S>& c) {
  CandList<S> out;
  const int n = c.n, m = c.m;
  const S xn = c.x(n - 1);
  const bool xn_zero = is_exact_zero(xn);
  if (m <= n - 2) {
    std::vector<S> a1s = leading_choices(c);
    if (m >= 2 && !xn_zero) {
      // Row n binds a_1 as well: a_1^{n-2} x_n = r_n.
      const S target = c.r(n - 1) / xn;
      std::vector<S> kept;
      for (const S& a1 : a1s)
        if (scalar_eq(scalar_pow(a1, n - 2), target)) kept.push_back(a1);
      a1s = std::move(kept);
      if (a1s.empty()) {
        out.err = "rows " + std::to_string(m) + " and " + std::to_string(n) +
                  " admit no common value for a_1";
        return out;
      }
    }
    if (a1s.empty()) {
      out.err = "row " + std::to_string(m) + " leaves no usable value for a_1";
      return out;
    }
    for (const S& a1 : a1s) {
      auto p = base_params<S>(Family::Mu13, n);
      p.a[0] = a1;
      for (int row = m + 1; row <= n - 2; ++row) forward_step(p.a, c, row, n - 1, S(0));
      if (m == 1) p.a[n - 1] = (c.r(n - 1) - scalar_pow(a1, n - 2) * xn) / c.x(0);
      p.b_nm1 = S(0);
      forward_step(p.a, c, n - 1, n - 1, p.a[0] * p.a[n - 1] * c.x(1));
      out.cands.push_back(std::move(p));
    }
  } else if (m == n - 1) {
    if (xn_zero) {
      for (const S& a1 : nonzero_roots(c.r(n - 2) / c.x(n - 2), n - 1)) {
        auto p = base_params<S>(Family::Mu13, n);
        p.a[0] = a1;
        p.b_nm1 = S(0);
        out.cands.push_back(std::move(p));
      }
    } else {
      for (const S& a1 : nonzero_roots(c.r(n - 1) / xn, n - 2)) {
        auto p = base_params<S>(Family::Mu13, n);
        p.a[0] = a1;
        p.b_nm1 = (c.r(n - 2) - scalar_pow(a1, n - 1) * c.x(n - 2)) / xn;
        out.cands.push_back(std::move(p));
      }
    }
    if (out.cands.empty()) out.err = "no usable root for a_1";
  } else {  // m == n
    for (const S& a1 : nonzero_roots(c.r(n - 1) / xn, n - 2)) {
      auto p = base_params<S>(Family::Mu13, n);
      p.a[0] = a1;
      p.b_nm1 = c.r(n - 2) / xn;
      out.cands.push_back(std::move(p));
    }
    if (out.cands.empty()) out.err = "no usable root for a_1";
  }
  return out;
}

template <class S>
CandList<S> candidates_mu14(const WitnessCtx<S>& c) {
  CandList<S> out;
  const int n = c.n, m = c.m;
  const S xn = c.x(n - 1);
  const bool xn_zero = is_exact_zero(xn);
  auto p = base_params<S>(Family::Mu14, n);
  p.a[0] = S(1);
  p.b_nm1 = S(0);
  if (m == 1) {
    if (!scalar_eq(c.r(0) / c.x(0), S(1))) {
      out.err = "row 1 forces a_1 different from 1";
      return out;
    }
    for (int row = 2; row <= n - 3; ++row) forward_step(p.a, c, row, n - 1, S(0));
    p.a[n - 1] = (c.r(n - 1) - xn) / c.x(0);
    forward_step(p.a, c, n - 2, n - 1, -p.a[n - 1] * xn);
    forward_step(p.a, c, n - 1, n - 1, (p.a[n - 1] + p.a[n - 1] * p.a[n - 1]) * c.x(1));
  } else if (m <= n - 3) {
    for (int row = m + 1; row <= n - 1; ++row) forward_step(p.a, c, row, n - 1, S(0));
  } else if (m == n - 2) {
    if (!xn_zero) p.a[n - 1] = (c.x(n - 3) - c.r(n - 3)) / xn;
    forward_step(p.a, c, n - 1, n - 1, (p.a[n - 1] + p.a[n - 1] * p.a[n - 1]) * c.x(1));
  } else if (m == n - 1) {
    if (!xn_zero) {
      p.a[n - 1] = -c.r(n - 3) / xn;
      p.b_nm1 = (c.r(n - 2) - c.x(n - 2)) / xn;
    }
  } else {  // m == n
    p.a[n - 1] = -c.r(n - 3) / xn;
    p.b_nm1 = c.r(n - 2) / xn;
  }
  out.cands.push_back(std::move(p));
  return out;
}

template <class S>
struct TypedOutcome {
  std::optional<AutParams<S>> params;
  double residual = 0.0;
  std::string error;
};

template <class S>
TypedOutcome<S> solve_typed(const WitnessCtx<S>& c) {
  CandList<S> cl;
  switch (c.f) {
    case Family::Mu0:
      cl = candidates_mu0(c);
      break;
    case Family::Mu11:
      cl = candidates_mu11(c);
      break;
    case Family::Mu12:
      cl = candidates_mu12(c);
      break;
    case Family::Mu13:
      cl = candidates_mu13(c);
      break;
    case Family::Mu14:
      cl = candidates_mu14(c);
      break;
  }
  std::string last_err = cl.err.empty() ? "no candidate parameters" : cl.err;
  for (auto& p : cl.cands) {
    try {
      validate(p);
    } catch (const std::invalid_argument& e) {
      last_err = e.what();
      continue;
    }
    const Matrix<S> mtx = build_automorphism(p);
    const Vector<S> mx = mat_vec(mtx, c.x);
    if constexpr (ScalarMode<S>::exact) {
      if (!entries_eq(mx, c.r)) {
        for (int i = 0; i < c.n; ++i)
          if (mx(i) != c.r(i)) {
            last_err = "constructed map misses A x at row " + std::to_string(i + 1);
            break;
          }
        continue;
      }
      return {std::move(p), 0.0, ""};
    } else {
      const double res = scaled_residual(mx, c.r);
      if (res > kTol) {
        last_err = "residual " + std::to_string(res) + " exceeds tolerance";
        continue;
      }
      return {std::move(p), res, ""};
    }
  }
  return {std::nullopt, 0.0, last_err};
}

int first_nonzero_index(const RVector& x) {
  for (int i = 0; i < x.size(); ++i)
    if (!is_exact_zero(x(i))) return i + 1;
  return 0;
}

}  // namespace

WitnessOutcome solve_witness(const Algebra& alg, const RMatrix& a, const RVector& x,
                             SolveMode mode) {
  WitnessOutcome out;
  if (a.rows() != alg.n || a.cols() != alg.n || x.size() != alg.n) {
    out.error = "dimension mismatch";
    return out;
  }
  if (!alg.family) {
    out.error = "witness solving requires one of the named families";
    return out;
  }
  const Family f = *alg.family;
  out.branch = first_nonzero_index(x);
  if (out.branch == 0) {
    out.ok = true;
    out.exact = true;
    out.params_exact = identity_params(f, alg.n);
    return out;
  }
  auto run_exact = [&]() {
    WitnessCtx<Rational> c{f, alg.n, a, x, mat_vec(a, x), out.branch};
    auto res = solve_typed(c);
    if (res.params) {
      out.ok = true;
      out.exact = true;
      out.residual = 0.0;
      out.params_exact = std::move(res.params);
      out.error.clear();
      return true;
    }
    out.error = res.error;
    return false;
  };
  auto run_approx = [&]() {
    const CMatrix ac = to_cplx(a);
    const CVector xc = to_cplx(x);
    WitnessCtx<Cplx> c{f, alg.n, ac, xc, mat_vec(ac, xc), out.branch};
    auto res = solve_typed(c);
    if (res.params) {
      out.ok = true;
      out.exact = false;
      out.residual = res.residual;
      out.params_approx = std::move(res.params);
      out.error.clear();
      return true;
    }
    out.error = res.error;
    return false;
  };
  switch (mode) {
    case SolveMode::Exact:
      run_exact();
      break;
    case SolveMode::Approx:
      run_approx();
      break;
    case SolveMode::Auto:
      if (!run_exact()) {
        const std::string exact_err = out.error;
        if (!run_approx()) out.error = "exact: " + exact_err + "; approx: " + out.error;
      }
      break;
  }
  return out;
}

RVector random_branch_vector(int n, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  RVector x = RVector::Zero(n);
  int lead = 0;
  while (lead == 0) lead = num(rng);
  x(m - 1) = rat(lead, den(rng));
  for (int i = m + 1; i <= n; ++i)
    if (coin(rng)) x(i - 1) = rat(num(rng), den(rng));
  // Half the time make sure the e_n component is live; it is what couples the
  // branch to the last column.
  if (m < n && coin(rng) && is_exact_zero(x(n - 1))) {
    int v = 0;
    while (v == 0) v = num(rng);
    x(n - 1) = rat(v, den(rng));
  }
  return x;
}

LocalCheck is_local_automorphism(const Algebra& alg, const RMatrix& a, int samples,
                                 unsigned long seed, ShapeVariant variant, SolveMode mode,
                                 bool record) {
  LocalCheck out;
  if (!alg.family) {
    out.detail = "local check requires one of the named families";
    return out;
  }
  const int n = alg.n;
  out.shape = matches_local_shape(*alg.family, n, a, variant);
  if (!out.shape.ok) {
    out.detail = "shape: " + out.shape.detail;
    return out;
  }
  std::mt19937_64 rng(seed);
  for (int k = 0; k < samples; ++k) {
    RVector x;
    if (k < n) {
      x = basis_vector<Rational>(n, k);
    } else {
      x = random_branch_vector(n, 1 + (k - n) % n, rng);
    }
    const auto w = solve_witness(alg, a, x, mode);
    if (record) out.witnesses.push_back({x, w});
    ++out.samples_checked;
    if (!w.ok) {
      out.detail = "no witness at a sampled point (branch " + std::to_string(w.branch) +
                   "): " + w.error;
      out.failed_x = x;
      return out;
    }
  }
  out.ok = true;
  return out;
}

RMatrix counterexample(Family f, int n) {
  if (f == Family::Mu0 ? n < 2 : n < 4)
    throw std::invalid_argument("dimension below the family minimum");
  RMatrix a = RMatrix::Identity(n, n);
  if (f == Family::Mu0 || f == Family::Mu11) {
    a(1, 1) = 2;  // breaks b_22 = a_1^2 while staying lower triangular
  } else {
    a(1, 0) = 1;  // unit diagonal survives every link; column 2 is not a square
  }
  return a;
}

RMatrix random_shape_matrix(Family f, int n, ShapeVariant variant, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  auto small = [&]() { return rat(num(rng), den(rng)); };
  auto small_nonzero = [&]() {
    int v = 0;
    while (v == 0) v = num(rng);
    return rat(v, den(rng));
  };
  const bool linked = variant == ShapeVariant::LinkedDiagonal;
  RMatrix a = RMatrix::Zero(n, n);
  const int lower_rows = f == Family::Mu0 ? n : n - 1;
  for (int i = 2; i <= lower_rows; ++i)
    for (int j = 1; j < i; ++j) a(i - 1, j - 1) = small();
  if (f != Family::Mu0) {
    a(n - 1, 0) = small();
    a(n - 2, n - 1) = small();
  }
  // Diagonals: the binding branches read a_1 off an m-th root of the (m,m)
  // entry, so seed them as exact powers.
  switch (f) {
    case Family::Mu0:
      for (int m = 1; m <= n; ++m) a(m - 1, m - 1) = scalar_pow(small_nonzero(), m);
      break;
    case Family::Mu11:
      for (int m = 1; m <= n - 1; ++m) a(m - 1, m - 1) = scalar_pow(small_nonzero(), m);
      a(n - 1, n - 1) = small_nonzero();
      break;
    case Family::Mu12:
      if (linked) {
        const Rational w = small_nonzero();
        const Rational u = small_nonzero();
        a(0, 0) = w * w;
        for (int m = 2; m <= n - 1; ++m) a(m - 1, m - 1) = scalar_pow(u, 2 * m);
        a(n - 1, n - 1) = scalar_pow(u, n - 1);
        a(n - 3, n - 1) = small();
      } else {
        for (int m = 1; m <= n; ++m) a(m - 1, m - 1) = small_nonzero();
      }
      break;
    case Family::Mu13:
      if (linked) {
        const Rational u = small_nonzero();
        a(0, 0) = small_nonzero();
        for (int m = 2; m <= n - 1; ++m) a(m - 1, m - 1) = scalar_pow(u, m);
        a(n - 1, n - 1) = scalar_pow(u, n - 2);
      } else {
        for (int m = 1; m <= n; ++m) a(m - 1, m - 1) = small_nonzero();
      }
      break;
    case Family::Mu14:
      if (linked) {
        for (int m = 1; m <= n; ++m) a(m - 1, m - 1) = 1;
        a(n - 3, n - 1) = small();
      } else {
        for (int m = 1; m <= n - 1; ++m) a(m - 1, m - 1) = small_nonzero();
        a(n - 1, n - 1) = 1;
      }
      break;
  }
  return a;
}

SurveyReport shape_survey(Family f, int n, ShapeVariant variant, int samples, unsigned long seed,
                          SolveMode mode) {
  SurveyReport rep;
  rep.family = f;
  rep.n = n;
  rep.variant = variant;
  std::mt19937_64 rng(seed);
  const Algebra alg = make_algebra(f, n);
  for (int t = 0; t < samples; ++t) {
    const auto m = build_automorphism(random_automorphism(f, n, rng));
    ++rep.necessity_total;
    const auto sv = matches_local_shape(f, n, m, variant);
    if (!sv.ok) {
      ++rep.necessity_failures;
      if (rep.first_necessity_failure.empty()) rep.first_necessity_failure = sv.detail;
    }
  }
  for (int t = 0; t < samples; ++t) {
    const auto a = random_shape_matrix(f, n, variant, rng);
    ++rep.sufficiency_total;
    const auto lc = is_local_automorphism(alg, a, 3 * n, rng(), variant, mode);
    if (!lc.ok) {
      ++rep.sufficiency_failures;
      if (rep.first_sufficiency_failure.empty()) rep.first_sufficiency_failure = lc.detail;
    }
  }
  return rep;
}

}  // namespace filiaut
