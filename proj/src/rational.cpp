#include "vcactus/rational.hpp"

namespace vcactus {

bool is_integer(const Rat& r) { return r.get_den() == 1; }

BigInt floor_of(const Rat& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace vcactus
