#include "filiaut/scalar.hpp"

#include <cmath>
#include <numbers>

namespace filiaut {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    mpz_class num(slash == std::string::npos ? s : s.substr(0, slash));
    mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Cplx to_cplx(const Rational& q) { return Cplx(q.get_d(), 0.0); }

std::optional<Rational> exact_nth_root(const Rational& value, int k) {
  if (k < 1) throw std::invalid_argument("root order must be positive");
  if (k == 1) return value;
  if (sgn(value) == 0) return Rational(0);
  if (sgn(value) < 0 && k % 2 == 0) return std::nullopt;
  mpz_class num = abs(value.get_num());
  mpz_class den = value.get_den();
  mpz_class rnum, rden;
  const bool num_ok = mpz_root(rnum.get_mpz_t(), num.get_mpz_t(), k) != 0;
  const bool den_ok = mpz_root(rden.get_mpz_t(), den.get_mpz_t(), k) != 0;
  if (!num_ok || !den_ok) return std::nullopt;
  if (sgn(value) < 0) rnum = -rnum;
  Rational r(rnum, rden);
  r.canonicalize();
  return r;
}

std::vector<Cplx> cplx_nth_roots(const Cplx& value, int k) {
  if (k < 1) throw std::invalid_argument("root order must be positive");
  std::vector<Cplx> out;
  out.reserve(k);
  if (value == Cplx(0.0, 0.0)) {
    out.assign(k, Cplx(0.0, 0.0));
    return out;
  }
  const double mag = std::pow(std::abs(value), 1.0 / k);
  const double base = std::arg(value);
  for (int j = 0; j < k; ++j) {
    const double theta = (base + 2.0 * std::numbers::pi * j) / k;
    out.emplace_back(mag * std::cos(theta), mag * std::sin(theta));
  }
  return out;
}

RootSet nth_roots(const Rational& value, int k) {
  return RootSet{exact_nth_root(value, k), cplx_nth_roots(to_cplx(value), k)};
}

std::vector<Rational> root_candidates(const Rational& value, int k) {
  std::vector<Rational> out;
  const auto r = exact_nth_root(value, k);
  if (!r) return out;
  out.push_back(*r);
  if (k % 2 == 0 && sgn(*r) != 0) out.push_back(-*r);
  return out;
}

std::vector<Cplx> root_candidates(const Cplx& value, int k) {
  return cplx_nth_roots(value, k);
}

}  // namespace filiaut
