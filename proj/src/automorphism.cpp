#include "filiaut/automorphism.hpp"

namespace filiaut {
namespace {

// Small values keep exact arithmetic cheap across the composition sums.
Rational draw_small(std::mt19937_64& rng) {
  static const int nums[] = {0, 0, 1, -1, 1, -1, 2, -2, 3, 1, -1, 0};
  std::uniform_int_distribution<int> pick(0, 11);
  std::uniform_int_distribution<int> den(1, 2);
  return rat(nums[pick(rng)], den(rng));
}

Rational draw_nonzero(std::mt19937_64& rng) {
  static const int nums[] = {1, -1, 2, -2, 1, -1, 3};
  std::uniform_int_distribution<int> pick(0, 6);
  std::uniform_int_distribution<int> den(1, 2);
  return rat(nums[pick(rng)], den(rng));
}

}  // namespace

AutParams<Rational> identity_params(Family f, int n) {
  AutParams<Rational> p;
  p.family = f;
  p.n = n;
  p.a.assign(n, Rational(0));
  p.a[0] = 1;
  if (f == Family::Mu11) p.b_n = 1;
  if (f == Family::Mu12 && n % 2 == 0) p.sqrt_a1 = 1;
  return p;
}

AutParams<Rational> random_automorphism(Family f, int n, std::mt19937_64& rng) {
  AutParams<Rational> p;
  p.family = f;
  p.n = n;
  p.a.resize(n);
  for (int i = 1; i < n; ++i) p.a[i] = draw_small(rng);
  switch (f) {
    case Family::Mu0:
      p.a[0] = draw_nonzero(rng);
      break;
    case Family::Mu11:
      p.a[0] = draw_nonzero(rng);
      p.b_nm1 = draw_small(rng);
      p.b_n = draw_nonzero(rng);
      break;
    case Family::Mu12: {
      // Draw the root first so a_1 is always an exact square; the branch is
      // only a visible parameter for even n.
      const Rational s = draw_nonzero(rng);
      p.a[0] = s * s;
      if (n % 2 == 0) p.sqrt_a1 = s;
      p.b_nm1 = draw_small(rng);
      break;
    }
    case Family::Mu13:
      p.a[0] = draw_nonzero(rng);
      p.b_nm1 = draw_small(rng);
      break;
    case Family::Mu14:
      p.a[0] = 1;
      p.b_nm1 = draw_small(rng);
      break;
  }
  validate(p);
  return p;
}

AutParams<Rational> random_automorphism(Family f, int n, unsigned long seed) {
  std::mt19937_64 rng(seed);
  return random_automorphism(f, n, rng);
}

}  // namespace filiaut
