#pragma once

#include <cstdint>
#include <vector>

#include "slocc/arith/fp.hpp"
#include "slocc/arith/matrix.hpp"
#include "slocc/arith/rational.hpp"

namespace slocc {

/// Primes used for reductions unless the caller overrides them.
inline const std::vector<std::uint32_t>& default_primes() {
  static const std::vector<std::uint32_t> primes{5, 7, 11, 13, 17, 19, 23, 29, 31};
  return primes;
}

/// num * den^{-1} mod p; throws BadReduction when p divides the denominator.
inline Fp reduce_mod_p(const Rational& x, std::uint32_t p) {
  const Integer pz(p);
  if (x.get_den() % pz == 0) throw BadReduction(p, "denominator " + x.get_den().get_str() + " divisible by p");
  const Integer num = x.get_num() % pz;  // sign follows the dividend
  const Integer den = x.get_den() % pz;
  return Fp(num.get_si(), p) / Fp(den.get_si(), p);
}

inline Matrix<Fp> reduce_mod_p(const Matrix<Rational>& m, std::uint32_t p) {
  Matrix<Fp> out(m.rows(), m.cols(), Fp::zero(p));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = reduce_mod_p(m(i, j), p);
  return out;
}

/// p does not divide the numerator or the denominator of x.
inline bool is_unit_mod(const Rational& x, std::uint32_t p) {
  const Integer pz(p);
  return !is_zero(x) && x.get_num() % pz != 0 && x.get_den() % pz != 0;
}

}  // namespace slocc
