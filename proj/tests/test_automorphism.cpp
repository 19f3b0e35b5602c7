#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "filiaut/automorphism.hpp"

using namespace filiaut;

namespace {

std::vector<Rational> rvec(std::initializer_list<long> entries) {
  return std::vector<Rational>(entries.begin(), entries.end());
}

// Independent oracle: literally enumerates the ordered tuples.
Rational comp_oracle(const std::vector<Rational>& a, int i, int j) {
  if (i < 1 || j < i) return 0;
  Rational total = 0;
  std::function<void(int, int, Rational)> rec = [&](int pos, int remaining, Rational prod) {
    if (pos == i - 1) {
      if (remaining >= 1 && remaining <= static_cast<int>(a.size())) total += prod * a[remaining - 1];
      return;
    }
    for (int v = 1; remaining - v >= i - 1 - pos && v <= static_cast<int>(a.size()); ++v)
      rec(pos + 1, remaining - v, prod * a[v - 1]);
  };
  rec(0, j, 1);
  return total;
}

const Family kAll[] = {Family::Mu0, Family::Mu11, Family::Mu12, Family::Mu13, Family::Mu14};

}  // namespace

TEST_CASE("composition sums match hand examples") {
  CHECK(composition_sum(rvec({1, 1, 0}), 2, 3) == Rational(2));
  CHECK(composition_sum(rvec({2, 3, 5}), 2, 4) == Rational(29));
  CHECK(composition_sum(rvec({2, 3, 5}), 1, 2) == Rational(3));
  CHECK(composition_sum(rvec({2, 3, 5}), 2, 1) == Rational(0));
  const auto a = rvec({3, 1, 4, 1, 5});
  for (int i = 1; i <= 5; ++i) {
    Rational pw = 1;
    for (int k = 0; k < i; ++k) pw *= a[0];
    CHECK(composition_sum(a, i, i) == pw);
  }
}

TEST_CASE("composition sums match tuple enumeration") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> a;
    for (int i = 0; i < 8; ++i) a.push_back(rat(num(rng), den(rng)));
    for (int i = 1; i <= 8; ++i)
      for (int j = i; j <= 8; ++j) CHECK(composition_sum(a, i, j) == comp_oracle(a, i, j));
  }
}

TEST_CASE("identity parameters build identity matrices") {
  for (Family f : kAll) {
    const int n = f == Family::Mu0 ? 3 : 5;
    const auto m = build_automorphism(identity_params(f, n));
    CHECK(entries_eq(m, RMatrix(RMatrix::Identity(n, n))));
  }
}

TEST_CASE("null-filiform matrix entries are composition sums") {
  AutParams<Rational> p;
  p.family = Family::Mu0;
  p.n = 3;
  p.a = rvec({1, 1, 0});
  const auto m = build_automorphism(p);
  RMatrix want(3, 3);
  want << 1, 0, 0, 1, 1, 0, 0, 2, 1;
  CHECK(entries_eq(m, want));
}

TEST_CASE("mu11 last column carries the two free parameters") {
  auto p = identity_params(Family::Mu11, 5);
  p.b_nm1 = 7;
  p.b_n = 2;
  const auto m = build_automorphism(p);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 4; ++j) CHECK(m(i, j) == Rational(i == j ? 1 : 0));
  CHECK(m(0, 4) == 0);
  CHECK(m(1, 4) == 0);
  CHECK(m(2, 4) == 0);
  CHECK(m(3, 4) == 7);
  CHECK(m(4, 4) == 2);
}

TEST_CASE("mu12 worked example with every special entry live") {
  AutParams<Rational> p;
  p.family = Family::Mu12;
  p.n = 5;
  p.a = rvec({4, 1, 0, 0, 1});
  p.sqrt_a1 = 2;
  p.b_nm1 = 3;
  const auto m = build_automorphism(p);
  RMatrix want(5, 5);
  want << 4, 0, 0, 0, 0,  //
      1, 16, 0, 0, 0,     //
      0, 8, 64, 0, -4,    //
      0, 2, 48, 256, 3,   //
      1, 0, 0, 0, 16;
  CHECK(entries_eq(m, want));
  CHECK(is_automorphism(make_algebra(Family::Mu12, 5), m).ok);

  // For odd n only even powers of s occur, so both branches coincide.
  p.sqrt_a1 = -2;
  CHECK(entries_eq(build_automorphism(p), m));
}

TEST_CASE("mu12 even dimension distinguishes the two root branches") {
  AutParams<Rational> p;
  p.family = Family::Mu12;
  p.n = 6;
  p.a = rvec({4, 1, 0, 0, 0, 1});
  p.sqrt_a1 = 2;
  p.b_nm1 = 3;
  const auto alg = make_algebra(Family::Mu12, 6);
  const auto m = build_automorphism(p);
  CHECK(m(3, 5) == -8);  // -a_6 s^3
  CHECK(m(5, 5) == 32);  // s^5
  CHECK(is_automorphism(alg, m).ok);

  p.sqrt_a1 = -2;
  const auto m2 = build_automorphism(p);
  CHECK(m2(3, 5) == 8);
  CHECK(m2(5, 5) == -32);
  CHECK(is_automorphism(alg, m2).ok);
  CHECK_FALSE(entries_eq(m2, m));
}

TEST_CASE("mu12 odd dimension works without a recorded root") {
  AutParams<Rational> p;
  p.family = Family::Mu12;
  p.n = 5;
  p.a = rvec({4, 1, 0, 0, 1});
  p.b_nm1 = 3;
  const auto m = build_automorphism(p);
  CHECK(m(2, 4) == -4);   // -a_5 * a_1^{(n-3)/2}
  CHECK(m(4, 4) == 16);   // a_1^{(n-1)/2}
  CHECK(is_automorphism(make_algebra(Family::Mu12, 5), m).ok);
}

TEST_CASE("mu13 and mu14 special entries") {
  AutParams<Rational> p;
  p.family = Family::Mu13;
  p.n = 5;
  p.a = rvec({2, 0, 0, 0, 3});
  p.b_nm1 = 5;
  auto m = build_automorphism(p);
  CHECK(m(3, 1) == 6);   // a_1 a_n joins column 2 at row n-1
  CHECK(m(3, 4) == 5);
  CHECK(m(4, 4) == 8);   // a_1^{n-2}
  CHECK(m(2, 4) == 0);
  CHECK(is_automorphism(make_algebra(Family::Mu13, 5), m).ok);

  p.family = Family::Mu14;
  p.a = rvec({1, 0, 0, 0, 3});
  m = build_automorphism(p);
  CHECK(m(3, 1) == 12);  // a_1 a_n + a_n^2
  CHECK(m(2, 4) == -3);
  CHECK(m(3, 4) == 5);
  CHECK(m(4, 4) == 1);
  CHECK(is_automorphism(make_algebra(Family::Mu14, 5), m).ok);
}

TEST_CASE("parameter validation rejects each broken invariant") {
  auto p = identity_params(Family::Mu0, 3);
  p.a[0] = 0;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);

  p = identity_params(Family::Mu0, 3);
  p.b_n = 1;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);

  p = identity_params(Family::Mu11, 5);
  p.b_n.reset();
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  p.b_n = 0;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);

  p = identity_params(Family::Mu12, 6);
  p.sqrt_a1.reset();  // even n needs the root
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  p.sqrt_a1 = 3;  // 9 != a_1
  CHECK_THROWS_AS(validate(p), std::invalid_argument);

  p = identity_params(Family::Mu14, 5);
  p.a[0] = 2;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);

  p = identity_params(Family::Mu11, 5);
  p.a.pop_back();
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
}

TEST_CASE("multiplicativity checker flags the first bad pair") {
  const auto alg = make_algebra(Family::Mu0, 3);
  RMatrix m(3, 3);
  m << 1, 0, 0, 0, 2, 0, 0, 0, 1;
  const auto verdict = is_automorphism(alg, m);
  CHECK_FALSE(verdict.ok);
  REQUIRE(verdict.bad_pair.has_value());
  CHECK(*verdict.bad_pair == std::make_pair(1, 1));

  CHECK_FALSE(is_automorphism(alg, RMatrix(RMatrix::Zero(3, 3))).ok);
  CHECK(is_automorphism(alg, RMatrix(RMatrix::Zero(3, 3))).detail == "singular matrix");
}

TEST_CASE("random parameters always build honest automorphisms") {
  std::mt19937_64 rng(11);
  for (Family f : kAll) {
    const int lo = f == Family::Mu0 ? 2 : 4;
    for (int n = lo; n <= 6; ++n) {
      const auto alg = make_algebra(f, n);
      for (int trial = 0; trial < 10; ++trial) {
        const auto p = random_automorphism(f, n, rng);
        const auto m = build_automorphism(p);
        const auto verdict = is_automorphism(alg, m);
        CHECK_MESSAGE(verdict.ok, to_string(f), " n=", n, ": ", verdict.detail);

        const auto mc = build_automorphism(to_cplx(p));
        CHECK(is_automorphism(alg, mc).ok);
      }
    }
  }
}

TEST_CASE("recover inverts build on the nose") {
  std::mt19937_64 rng(13);
  for (Family f : kAll) {
    const int lo = f == Family::Mu0 ? 2 : 4;
    for (int n = lo; n <= 7; ++n)
      for (int trial = 0; trial < 25; ++trial) {
        const auto p = random_automorphism(f, n, rng);
        const auto rec = recover_params(f, n, build_automorphism(p));
        REQUIRE_MESSAGE(rec.params.has_value(), rec.error);
        CHECK(params_eq(*rec.params, p));
      }
  }
}

TEST_CASE("recover rejects matrices outside the family") {
  auto m = build_automorphism(identity_params(Family::Mu0, 4));
  m(0, 1) = 1;  // upper entry breaks the shape
  const auto rec = recover_params<Rational>(Family::Mu0, 4, m);
  CHECK_FALSE(rec.params.has_value());
  CHECK(rec.error.find("(1,2)") != std::string::npos);

  RMatrix z = RMatrix::Identity(4, 4);
  z(0, 0) = 0;
  CHECK_FALSE(recover_params<Rational>(Family::Mu0, 4, z).params.has_value());
}

TEST_CASE("composition stays inside every parameterized group") {
  std::mt19937_64 rng(17);
  for (Family f : kAll) {
    const int lo = f == Family::Mu0 ? 2 : 4;
    for (int n = lo; n <= 6; ++n) {
      const auto alg = make_algebra(f, n);
      for (int trial = 0; trial < 10; ++trial) {
        const auto m1 = build_automorphism(random_automorphism(f, n, rng));
        const auto m2 = build_automorphism(random_automorphism(f, n, rng));
        const auto prod = compose(m1, m2);
        CHECK(is_automorphism(alg, prod).ok);
        const auto rec = recover_params(f, n, prod);
        CHECK_MESSAGE(rec.params.has_value(), to_string(f), " n=", n, ": ", rec.error);
      }
    }
  }
}

TEST_CASE("inverse matrices are recognized as automorphisms") {
  std::mt19937_64 rng(23);
  for (Family f : kAll) {
    const int n = f == Family::Mu0 ? 5 : 5;
    const auto alg = make_algebra(f, n);
    const auto m = build_automorphism(random_automorphism(f, n, rng));
    const auto inv = inverse(m);
    CHECK(is_automorphism(alg, inv).ok);
    CHECK(recover_params(f, n, inv).params.has_value());
  }
}

TEST_CASE("mu11 tolerates a vanishing b_nm1 but never a vanishing b_n") {
  auto p = identity_params(Family::Mu11, 5);
  p.b_nm1 = 0;
  p.b_n = 3;
  const auto m = build_automorphism(p);
  CHECK(is_automorphism(make_algebra(Family::Mu11, 5), m).ok);
  CHECK(m(3, 4) == 0);

  RMatrix bad = m;
  bad(4, 4) = 0;
  CHECK_FALSE(is_automorphism(make_algebra(Family::Mu11, 5), bad).ok);
}

TEST_CASE("seeded generation is reproducible") {
  for (Family f : kAll) {
    const int n = f == Family::Mu0 ? 3 : 6;
    const auto p1 = random_automorphism(f, n, 42UL);
    const auto p2 = random_automorphism(f, n, 42UL);
    CHECK(params_eq(p1, p2));
    if (f == Family::Mu12) {
      REQUIRE(p1.sqrt_a1.has_value());
      CHECK(*p1.sqrt_a1 * *p1.sqrt_a1 == p1.a[0]);
    }
  }
}
