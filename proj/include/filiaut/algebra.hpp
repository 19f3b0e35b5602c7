#pragma once

#include <optional>
#include <string>
#include <vector>

#include "filiaut/linalg.hpp"
#include "filiaut/scalar.hpp"

namespace filiaut {

/// The five algebra families: Mu0 is the null-filiform algebra (n >= 2), the
/// others are the four filiform algebras (n >= 4).
enum class Family { Mu0, Mu11, Mu12, Mu13, Mu14 };

std::optional<Family> parse_family(const std::string& s);
std::string to_string(Family f);
inline bool is_filiform(Family f) { return f != Family::Mu0; }

/// One nonzero structure constant: e_i e_j contains c * e_k (0-based indices).
struct Term {
  int i, j, k;
  Rational c;
};

/// An n-dimensional algebra given by its structure constants on the basis
/// e_1..e_n, stored both densely (product lookup) and as a sparse term list
/// (fast bilinear products).
struct Algebra {
  int n = 0;
  std::optional<Family> family;
  std::vector<RVector> products;  // products[i*n+j] = coordinates of e_{i+1} e_{j+1}
  std::vector<Term> terms;

  const RVector& product(int i, int j) const { return products[i * n + j]; }
};

Algebra make_algebra(Family f, int n);
Algebra custom_algebra(int n, const std::vector<Term>& terms);

template <class S>
Vector<S> basis_vector(int n, int k) {
  Vector<S> v = Vector<S>::Zero(n);
  v(k) = S(1);
  return v;
}

/// Bilinear product of coordinate vectors.
template <class S>
Vector<S> multiply(const Algebra& alg, const Vector<S>& x, const Vector<S>& y) {
  if (x.size() != alg.n || y.size() != alg.n)
    throw std::invalid_argument("multiply: dimension mismatch");
  Vector<S> out = Vector<S>::Zero(alg.n);
  for (const Term& t : alg.terms) out(t.k) += ScalarMode<S>::from(t.c) * x(t.i) * y(t.j);
  return out;
}

/// First basis triple (1-based) with (e_i e_j) e_k != e_i (e_j e_k), if any.
struct TripleViolation {
  int i, j, k;
};
std::optional<TripleViolation> associativity_violation(const Algebra& alg);
inline bool is_associative(const Algebra& alg) { return !associativity_violation(alg); }

/// Dimensions of the descending power chain A^1, A^2, ... where
/// A^{i+1} = sum_k A^k A^{i-k+1}.  The chain is cut at the first zero
/// (nilindex = its 1-based position) or after n+1 levels (non-nilpotent,
/// nilindex empty).
struct PowerProfile {
  std::vector<int> dims;
  std::optional<int> nilindex;
};
PowerProfile power_profile(const Algebra& alg);

enum class ProfileClass { NullFiliform, Filiform, Neither };
ProfileClass classify_profile(const Algebra& alg);
std::string to_string(ProfileClass c);

}  // namespace filiaut
