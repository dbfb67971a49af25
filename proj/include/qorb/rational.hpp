#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

#include "qorb/error.hpp"

namespace qorb {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator) as long as canonicalize() runs after raw constructions.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw Error(ErrorKind::InvalidInput, "cannot parse rational: " + s);
  if (r.get_den() == 0)
    throw Error(ErrorKind::DivisionByZero, "rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Small random rationals for property tests; numerators in [-max, max],
// denominators in [1, den_max].
inline Rat random_rat(std::mt19937_64& rng, long max = 9, long den_max = 1) {
  std::uniform_int_distribution<long> num(-max, max);
  std::uniform_int_distribution<long> den(1, den_max);
  return rat(num(rng), den(rng));
}

}  // namespace qorb
