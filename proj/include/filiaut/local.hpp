#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "filiaut/algebra.hpp"
#include "filiaut/automorphism.hpp"
#include "filiaut/linalg.hpp"

namespace filiaut {

/// Two candidate necessary-and-sufficient shapes for local automorphisms.
/// GenericDiagonal leaves the diagonal entries of the last columns unlinked;
/// LinkedDiagonal adds the power-compatibility relations between the diagonal
/// and the (n,n) entry (and frees the (n-2,n) slot where an automorphism can
/// populate it).  LinkedDiagonal is the variant the witness solver certifies.
enum class ShapeVariant { GenericDiagonal, LinkedDiagonal };

std::string to_string(ShapeVariant v);
ShapeVariant parse_shape_variant(const std::string& s);

struct ShapeVerdict {
  bool ok = false;
  std::string detail;  // first violated condition

  explicit operator bool() const { return ok; }
};

template <class S>
ShapeVerdict matches_local_shape(Family f, int n, const Matrix<S>& m, ShapeVariant variant);

enum class SolveMode { Exact, Approx, Auto };

std::string to_string(SolveMode m);

/// Result of solving M x = A x for automorphism parameters M.  `branch` is the
/// index of the first nonzero coordinate of x (0 when x = 0).  Exactly one of
/// params_exact / params_approx is set on success; `exact` says which.
struct WitnessOutcome {
  bool ok = false;
  int branch = 0;
  bool exact = false;
  double residual = 0.0;
  std::optional<AutParams<Rational>> params_exact;
  std::optional<AutParams<Cplx>> params_approx;
  std::string error;

  explicit operator bool() const { return ok; }
};

WitnessOutcome solve_witness(const Algebra& alg, const RMatrix& a, const RVector& x,
                             SolveMode mode = SolveMode::Auto);

struct SampledWitness {
  RVector x;
  WitnessOutcome outcome;
};

struct LocalCheck {
  bool ok = false;
  std::string detail;
  int samples_checked = 0;
  ShapeVerdict shape;
  std::optional<RVector> failed_x;
  std::vector<SampledWitness> witnesses;  // populated when record = true

  explicit operator bool() const { return ok; }
};

/// Shape check plus witness solving on a branch-covering sample of vectors:
/// the unit vectors, then random vectors cycling the first-nonzero index with
/// and without an e_n component.
LocalCheck is_local_automorphism(const Algebra& alg, const RMatrix& a, int samples,
                                 unsigned long seed,
                                 ShapeVariant variant = ShapeVariant::LinkedDiagonal,
                                 SolveMode mode = SolveMode::Auto, bool record = false);

/// A matrix that admits a witness at every point but is not an automorphism.
RMatrix counterexample(Family f, int n);

/// Random matrix conforming to the shape, built so every binding diagonal
/// entry has the exact root the witness solver needs.
RMatrix random_shape_matrix(Family f, int n, ShapeVariant variant, std::mt19937_64& rng);

/// Random vector whose first nonzero coordinate sits at position m (1-based),
/// with an e_n component roughly half the time.
RVector random_branch_vector(int n, int m, std::mt19937_64& rng);

/// Empirical two-sided audit of a shape variant: necessity (sampled
/// automorphisms conform) and sufficiency (sampled conforming matrices pass
/// the witness check).
struct SurveyReport {
  Family family = Family::Mu0;
  int n = 0;
  ShapeVariant variant = ShapeVariant::LinkedDiagonal;
  int necessity_total = 0;
  int necessity_failures = 0;
  int sufficiency_total = 0;
  int sufficiency_failures = 0;
  std::string first_necessity_failure;
  std::string first_sufficiency_failure;

  bool necessity_ok() const { return necessity_failures == 0; }
  bool sufficiency_ok() const { return sufficiency_failures == 0; }
  bool certified() const { return necessity_ok() && sufficiency_ok(); }
};

SurveyReport shape_survey(Family f, int n, ShapeVariant variant, int samples, unsigned long seed,
                          SolveMode mode = SolveMode::Auto);

}  // namespace filiaut
