#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace arrlog {

// Exact scalar used everywhere. mpq_class keeps values canonical
// (denominator > 0, gcd(|num|, den) = 1) as long as construction goes
// through the helpers below.
using Rational = mpq_class;
using Vec = std::vector<Rational>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: unparsable files, violated operation preconditions.
struct ValidationError : Error {
  using Error::Error;
};

struct ParseError : ValidationError {
  ParseError(const std::string& msg, int line)
      : ValidationError("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

// A mathematical tripwire fired: something the theory guarantees failed.
struct ConsistencyError : Error {
  using Error::Error;
};

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "3", "-3", "3/7", "-3/7".
inline Rational rat_from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw ValidationError("invalid rational literal: '" + s + "'");
  if (q.get_den() == 0)
    throw ValidationError("rational with zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational pow_rational(const Rational& q, unsigned long e) {
  if (e == 0) return Rational(1);
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  return r;  // num/den coprime => powers coprime, already canonical
}

}  // namespace arrlog
