#include "apg/arith.hpp"

#include <limits>

namespace apg {

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer gcd(const Integer& x, const Integer& y) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

Integer lcm(const Integer& x, const Integer& y) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return l;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  Rational r = x;
  r.canonicalize();
  return r.get_str();
}

bool fits_int64(const Integer& x) {
  static const Integer lo{std::to_string(std::numeric_limits<long long>::min())};
  static const Integer hi{std::to_string(std::numeric_limits<long long>::max())};
  return x >= lo && x <= hi;
}

}  // namespace apg
