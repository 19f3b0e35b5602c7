#include "filiaut/algebra.hpp"

namespace filiaut {

std::optional<Family> parse_family(const std::string& s) {
  if (s == "mu0") return Family::Mu0;
  if (s == "mu11") return Family::Mu11;
  if (s == "mu12") return Family::Mu12;
  if (s == "mu13") return Family::Mu13;
  if (s == "mu14") return Family::Mu14;
  return std::nullopt;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Mu0: return "mu0";
    case Family::Mu11: return "mu11";
    case Family::Mu12: return "mu12";
    case Family::Mu13: return "mu13";
    case Family::Mu14: return "mu14";
  }
  return "";
}

namespace {

void rebuild_terms(Algebra& alg) {
  alg.terms.clear();
  for (int i = 0; i < alg.n; ++i)
    for (int j = 0; j < alg.n; ++j) {
      const RVector& p = alg.product(i, j);
      for (int k = 0; k < alg.n; ++k)
        if (p(k) != 0) alg.terms.push_back(Term{i, j, k, p(k)});
    }
}

}  // namespace

Algebra make_algebra(Family f, int n) {
  if (f == Family::Mu0 && n < 2)
    throw std::invalid_argument("null-filiform algebra requires n >= 2");
  if (f != Family::Mu0 && n < 4)
    throw std::invalid_argument("filiform algebras require n >= 4");
  Algebra alg;
  alg.n = n;
  alg.family = f;
  alg.products.assign(n * n, RVector(RVector::Zero(n)));
  const int cap = f == Family::Mu0 ? n : n - 1;  // e_i e_j = e_{i+j} while i+j <= cap
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i + j <= cap) alg.products[(i - 1) * n + (j - 1)](i + j - 1) = 1;
  if (f == Family::Mu12 || f == Family::Mu14)
    alg.products[(n - 1) * n + (n - 1)](n - 2) = 1;  // e_n e_n = e_{n-1}
  if (f == Family::Mu13 || f == Family::Mu14)
    alg.products[0 * n + (n - 1)](n - 2) = 1;  // e_1 e_n = e_{n-1}
  rebuild_terms(alg);
  return alg;
}

Algebra custom_algebra(int n, const std::vector<Term>& terms) {
  if (n < 1) throw std::invalid_argument("algebra dimension must be positive");
  Algebra alg;
  alg.n = n;
  alg.products.assign(n * n, RVector(RVector::Zero(n)));
  for (const Term& t : terms) {
    if (t.i < 0 || t.i >= n || t.j < 0 || t.j >= n || t.k < 0 || t.k >= n)
      throw std::invalid_argument("structure constant index out of range");
    alg.products[t.i * n + t.j](t.k) += t.c;
  }
  rebuild_terms(alg);
  return alg;
}

std::optional<TripleViolation> associativity_violation(const Algebra& alg) {
  const int n = alg.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const RVector& ij = alg.product(i, j);
      for (int k = 0; k < n; ++k) {
        const RVector lhs = multiply(alg, ij, basis_vector<Rational>(n, k));
        const RVector rhs = multiply(alg, basis_vector<Rational>(n, i), alg.product(j, k));
        if (!entries_eq(lhs, rhs)) return TripleViolation{i + 1, j + 1, k + 1};
      }
    }
  return std::nullopt;
}

PowerProfile power_profile(const Algebra& alg) {
  const int n = alg.n;
  PowerProfile out;
  std::vector<RMatrix> bases;  // bases[k] = RREF row basis of A^{k+1}
  bases.push_back(RMatrix::Identity(n, n));
  out.dims.push_back(n);
  while (static_cast<int>(out.dims.size()) <= n) {
    if (out.dims.back() == 0) break;
    const int level = static_cast<int>(bases.size());  // computing A^{level+1}
    std::vector<RVector> rows;
    for (int k = 0; k < level; ++k) {
      const RMatrix& lhs = bases[k];
      const RMatrix& rhs = bases[level - 1 - k];
      for (Eigen::Index r = 0; r < lhs.rows(); ++r)
        for (Eigen::Index s = 0; s < rhs.rows(); ++s)
          rows.push_back(multiply<Rational>(alg, lhs.row(r).transpose(), rhs.row(s).transpose()));
    }
    RMatrix stacked = RMatrix::Zero(std::max<size_t>(rows.size(), 1), n);
    for (size_t r = 0; r < rows.size(); ++r) stacked.row(r) = rows[r].transpose();
    const int rank = rref_in_place(stacked);
    bases.push_back(stacked.topRows(rank));
    out.dims.push_back(rank);
  }
  if (out.dims.back() == 0) out.nilindex = static_cast<int>(out.dims.size());
  return out;
}

ProfileClass classify_profile(const Algebra& alg) {
  const PowerProfile p = power_profile(alg);
  const int n = alg.n;
  if (p.nilindex) {
    bool nullf = static_cast<int>(p.dims.size()) == n + 1;
    for (int i = 1; nullf && i <= n + 1; ++i) nullf = p.dims[i - 1] == n + 1 - i;
    if (nullf) return ProfileClass::NullFiliform;
    bool fil = static_cast<int>(p.dims.size()) == n && p.dims[0] == n && n >= 2;
    for (int i = 2; fil && i <= n; ++i) fil = p.dims[i - 1] == n - i;
    if (fil) return ProfileClass::Filiform;
  }
  return ProfileClass::Neither;
}

std::string to_string(ProfileClass c) {
  switch (c) {
    case ProfileClass::NullFiliform: return "null-filiform";
    case ProfileClass::Filiform: return "filiform";
    case ProfileClass::Neither: return "neither";
  }
  return "";
}

}  // namespace filiaut
