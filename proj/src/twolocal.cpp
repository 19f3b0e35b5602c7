#include "filiaut/twolocal.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "filiaut/linalg.hpp"

namespace filiaut {

namespace {

const RVector* find_image(const PointMap& pm, int k) {
  const RVector e = basis_vector<Rational>(pm.n, k);
  for (const auto& s : pm.samples)
    if (s.x.size() == pm.n && entries_eq(s.x, e)) return &s.fx;
  return nullptr;
}

GlobalRecovery fail(std::string msg) {
  GlobalRecovery r;
  r.error = std::move(msg);
  return r;
}

std::string coord_error(int coord) {
  return "image of e_n is outside the parameterized family: coordinate " +
         std::to_string(coord) + " must vanish";
}

}  // namespace

GlobalRecovery recover_global(const PointMap& pm) {
  const int n = pm.n;
  if (n < (pm.family == Family::Mu0 ? 2 : 4))
    return fail("dimension too small for " + to_string(pm.family));

  const RVector* img1 = find_image(pm, 0);
  if (img1 == nullptr) return fail("point map does not contain e_1");

  AutParams<Rational> p;
  p.family = pm.family;
  p.n = n;
  p.a.resize(n);
  for (int i = 0; i < n; ++i) p.a[i] = (*img1)(i);
  const Rational a1 = p.a[0];
  if (is_exact_zero(a1)) return fail("image of e_1 has vanishing leading coordinate");
  if (pm.family == Family::Mu14 && a1 != 1)
    return fail("image of e_1 must have leading coordinate 1");

  if (pm.family != Family::Mu0) {
    const RVector* imgn = find_image(pm, n - 1);
    if (imgn == nullptr) return fail("point map does not contain e_n");
    const RVector& v = *imgn;
    const Rational an = p.a[n - 1];

    switch (pm.family) {
      case Family::Mu11:
        for (int k = 0; k + 2 < n; ++k)
          if (!is_exact_zero(v(k))) return fail(coord_error(k + 1));
        if (is_exact_zero(v(n - 1)))
          return fail("image of e_n has vanishing last coordinate");
        p.b_nm1 = v(n - 2);
        p.b_n = v(n - 1);
        break;
      case Family::Mu12: {
        for (int k = 0; k + 3 < n; ++k)
          if (!is_exact_zero(v(k))) return fail(coord_error(k + 1));
        p.b_nm1 = v(n - 2);
        const Rational c = v(n - 1);
        Rational s_nm3;
        if (n % 2 == 0) {
          // The last coordinate is s^{n-1} for a square root s of a_1, so
          // s is recoverable as c / a_1^{(n-2)/2} and the square condition
          // amounts to c^2 = a_1^{n-1}.
          if (c * c != scalar_pow(a1, n - 1))
            return fail("last coordinate of the image of e_n is not compatible with a_1");
          p.sqrt_a1 = c / scalar_pow(a1, (n - 2) / 2);
          s_nm3 = scalar_pow(*p.sqrt_a1, n - 3);
        } else {
          if (c != scalar_pow(a1, (n - 1) / 2))
            return fail("last coordinate of the image of e_n is not compatible with a_1");
          s_nm3 = scalar_pow(a1, (n - 3) / 2);
        }
        if (v(n - 3) != -an * s_nm3)
          return fail("coordinate n-2 of the image of e_n disagrees with a_n");
        break;
      }
      case Family::Mu13:
        for (int k = 0; k + 2 < n; ++k)
          if (!is_exact_zero(v(k))) return fail(coord_error(k + 1));
        p.b_nm1 = v(n - 2);
        if (v(n - 1) != scalar_pow(a1, n - 2))
          return fail("last coordinate of the image of e_n is not compatible with a_1");
        break;
      case Family::Mu14:
        for (int k = 0; k + 3 < n; ++k)
          if (!is_exact_zero(v(k))) return fail(coord_error(k + 1));
        if (v(n - 3) != -an)
          return fail("coordinate n-2 of the image of e_n disagrees with a_n");
        p.b_nm1 = v(n - 2);
        if (v(n - 1) != 1)
          return fail("last coordinate of the image of e_n must equal 1");
        break;
      default:
        break;
    }
  }

  try {
    validate(p);
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  }
  GlobalRecovery r;
  r.params = std::move(p);
  return r;
}

TwoLocalVerdict verify_2local(const Algebra& alg, const AutParams<Rational>& params,
                              const PointMap& pm) {
  TwoLocalVerdict v;
  if (alg.n != pm.n) {
    v.detail = "algebra and point map dimensions disagree";
    return v;
  }
  RMatrix m;
  try {
    validate(params);
    m = build_automorphism(params);
  } catch (const std::invalid_argument& e) {
    v.detail = e.what();
    return v;
  }
  const auto aut = is_automorphism(alg, m);
  if (!aut.ok) {
    v.detail = "recovered map is not an automorphism: " + aut.detail;
    return v;
  }
  for (std::size_t k = 0; k < pm.samples.size(); ++k) {
    const auto& s = pm.samples[k];
    if (s.x.size() != pm.n || s.fx.size() != pm.n) {
      v.detail = "sample " + std::to_string(k + 1) + " has the wrong dimension";
      v.samples_checked = static_cast<int>(k);
      return v;
    }
    if (!entries_eq(RVector(m * s.x), s.fx)) {
      v.detail = "sample " + std::to_string(k + 1) + " disagrees with the global map";
      v.samples_checked = static_cast<int>(k);
      return v;
    }
  }
  v.ok = true;
  v.samples_checked = static_cast<int>(pm.samples.size());
  return v;
}

TwoLocalVerdict pair_witness_check(const Algebra& alg, const RMatrix& m, const RVector& x,
                                   const RVector& y, const RVector& fx, const RVector& fy) {
  TwoLocalVerdict v;
  const auto aut = is_automorphism(alg, m);
  if (!aut.ok) {
    v.detail = "candidate is not an automorphism: " + aut.detail;
    return v;
  }
  if (!entries_eq(RVector(m * x), fx)) {
    v.detail = "candidate misses the first point";
    return v;
  }
  if (!entries_eq(RVector(m * y), fy)) {
    v.detail = "candidate misses the second point";
    v.samples_checked = 1;
    return v;
  }
  v.ok = true;
  v.samples_checked = 2;
  return v;
}

PointMap sample_point_map(const Algebra& alg, const AutParams<Rational>& params, int count,
                          std::mt19937_64& rng) {
  if (!alg.family.has_value() || *alg.family != params.family || alg.n != params.n)
    throw std::invalid_argument("algebra and parameters disagree");
  validate(params);
  const RMatrix m = build_automorphism(params);
  const int n = alg.n;

  PointMap pm;
  pm.family = params.family;
  pm.n = n;
  auto push = [&](const RVector& x) { pm.samples.push_back({x, RVector(m * x)}); };
  push(basis_vector<Rational>(n, 0));
  push(basis_vector<Rational>(n, n - 1));
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int t = 0; t < count; ++t) {
    RVector x(n);
    for (int i = 0; i < n; ++i) x(i) = entry(rng);
    push(x);
  }
  return pm;
}

}  // namespace filiaut
