#include "padic/rational.hpp"

#include <string>

namespace padic {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

void require_prime(long p) {
  if (!is_prime(p)) throw Error("CONFIG", "p = " + std::to_string(p) + " is not prime");
}

long val_p(const Integer& x, long p) {
  if (p < 2) throw Error("CONFIG", "valuation needs p >= 2");
  if (x == 0) return kInfinity;
  Integer rest;
  Integer prime(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

long val_p(const Rational& x, long p) {
  if (p < 2) throw Error("CONFIG", "valuation needs p >= 2");
  if (x == 0) return kInfinity;
  return val_p(Integer(x.get_num()), p) - val_p(Integer(x.get_den()), p);
}

long val_p(std::int64_t x, long p) {
  if (p < 2) throw Error("CONFIG", "valuation needs p >= 2");
  if (x == 0) return kInfinity;
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

Integer ipow(long base, unsigned long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

Rational rpow(long base, long exp) {
  if (exp >= 0) return Rational(ipow(base, static_cast<unsigned long>(exp)));
  return Rational(Integer(1), ipow(base, static_cast<unsigned long>(-exp)));
}

std::int64_t ipow64(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

bool has_p_power_denominator(const Rational& x, long p) {
  Integer den = x.get_den();
  Integer rest;
  Integer prime(p);
  mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t());
  return rest == 1;
}

Rational frac_p(const Rational& x, long p) {
  long v = val_p(x, p);
  if (v >= 0) return Rational(0);
  Integer pk = ipow(p, static_cast<unsigned long>(-v));
  // x = n / (p^k m); the p-part of x·p^k is n·m^{-1} mod p^k.
  Integer den = x.get_den();
  Integer m = den / pk;
  Integer minv;
  mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), pk.get_mpz_t());
  Integer r = (Integer(x.get_num()) * minv) % pk;
  if (r < 0) r += pk;
  Rational out(r, pk);
  out.canonicalize();
  return out;
}

std::int64_t inv_mod(std::int64_t u, std::int64_t m) {
  std::int64_t old_r = mod(u, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw Error("ARITH", "inv_mod of a non-unit");
  return mod(old_s, m);
}

std::int64_t reduce_mod(const Rational& x, std::int64_t m) {
  Integer mm(static_cast<long>(m));
  Integer den = x.get_den();
  Integer dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mm.get_mpz_t()) == 0)
    throw Error("ARITH", "reduce_mod: denominator not invertible");
  Integer r = (Integer(x.get_num()) * dinv) % mm;
  if (r < 0) r += mm;
  return r.get_si();
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view s) {
  std::string str(s);
  Rational r;
  if (r.set_str(str, 10) != 0) throw Error("PARSE", "not a rational: '" + str + "'");
  if (r.get_den() == 0) throw Error("PARSE", "zero denominator: '" + str + "'");
  r.canonicalize();
  return r;
}

}  // namespace padic
