#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace vcactus {

// Exact rational, always normalized (mpq_class keeps lowest terms as long as
// every value is produced by arithmetic or passes through canonicalize()).
using Rat = mpq_class;
using BigInt = mpz_class;

using RatVec = std::vector<Rat>;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rat& r);

// Floor of an exact rational.
BigInt floor_of(const Rat& r);

std::string to_string(const Rat& r);

}  // namespace vcactus
