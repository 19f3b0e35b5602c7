#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "filiaut/algebra.hpp"
#include "filiaut/automorphism.hpp"

namespace filiaut {

// A finite table of evaluations of a map on Q^n, the raw material the
// two-point checks work from.
struct PointMap {
  struct Sample {
    RVector x;
    RVector fx;
  };

  Family family = Family::Mu0;
  int n = 0;
  std::vector<Sample> samples;
};

struct GlobalRecovery {
  std::optional<AutParams<Rational>> params;
  std::string error;

  explicit operator bool() const { return params.has_value(); }
};

// Reads automorphism parameters off the sampled images of e_1 and e_n.  The
// null-filiform family needs only the image of e_1; the filiform families
// additionally consume the image of e_n and cross-check it against the
// coefficients already pinned down.
GlobalRecovery recover_global(const PointMap& pm);

struct TwoLocalVerdict {
  bool ok = false;
  std::string detail;
  int samples_checked = 0;

  explicit operator bool() const { return ok; }
};

// Confirms the parameterized map reproduces every sampled image exactly.
TwoLocalVerdict verify_2local(const Algebra& alg, const AutParams<Rational>& params,
                              const PointMap& pm);

// One pair check: does the candidate matrix agree with the prescribed images
// at both points while being an automorphism?
TwoLocalVerdict pair_witness_check(const Algebra& alg, const RMatrix& m, const RVector& x,
                                   const RVector& y, const RVector& fx, const RVector& fy);

// Evaluates the parameterized map on e_1, e_n and `count` random points.
PointMap sample_point_map(const Algebra& alg, const AutParams<Rational>& params, int count,
                          std::mt19937_64& rng);

}  // namespace filiaut
