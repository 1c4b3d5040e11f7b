#pragma once

#include <array>
#include <vector>

#include "slocc/invariants/curves.hpp"
#include "slocc/states/tensor.hpp"

namespace slocc {

/// Homogeneous polynomial in (s, u): coefficient k multiplies s^{deg-k} u^k.
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}
  /// alpha s + beta u
  static BinaryForm linear(const Rational& alpha, const Rational& beta) { return BinaryForm({alpha, beta}); }

  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) { return combine(a, b, 1); }
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return combine(a, b, -1); }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return BinaryForm(std::move(out));
  }
  friend BinaryForm operator*(long k, const BinaryForm& a) {
    BinaryForm out = a;
    for (auto& x : out.c_) x *= k;
    return out;
  }

 private:
  static BinaryForm combine(const BinaryForm& a, const BinaryForm& b, int sign) {
    if (a.c_.empty()) return sign > 0 ? b : -1L * b;
    if (b.c_.empty()) return a;
    if (a.c_.size() != b.c_.size()) throw std::invalid_argument("adding binary forms of different degree");
    BinaryForm out = a;
    for (std::size_t k = 0; k < b.c_.size(); ++k) out.c_[k] += sign * b.c_[k];
    return out;
  }
  std::vector<Rational> c_;
};

/// Cayley's 2x2x2 hyperdeterminant; a[4i + 2j + k] = a_{ijk}. Written over
/// any commutative ring with +, - and *.
template <class R>
R cayley_formula(const std::array<R, 8>& a) {
  auto at = [&](int i, int j, int k) -> const R& { return a[4 * i + 2 * j + k]; };
  const R squares = at(0, 0, 0) * at(0, 0, 0) * at(1, 1, 1) * at(1, 1, 1) +
                    at(0, 0, 1) * at(0, 0, 1) * at(1, 1, 0) * at(1, 1, 0) +
                    at(0, 1, 0) * at(0, 1, 0) * at(1, 0, 1) * at(1, 0, 1) +
                    at(1, 0, 0) * at(1, 0, 0) * at(0, 1, 1) * at(0, 1, 1);
  const R pairs = at(0, 0, 0) * at(0, 0, 1) * at(1, 1, 0) * at(1, 1, 1) +
                  at(0, 0, 0) * at(0, 1, 0) * at(1, 0, 1) * at(1, 1, 1) +
                  at(0, 0, 0) * at(1, 0, 0) * at(0, 1, 1) * at(1, 1, 1) +
                  at(0, 0, 1) * at(0, 1, 0) * at(1, 0, 1) * at(1, 1, 0) +
                  at(0, 0, 1) * at(1, 0, 0) * at(0, 1, 1) * at(1, 1, 0) +
                  at(0, 1, 0) * at(1, 0, 0) * at(0, 1, 1) * at(1, 0, 1);
  const R quads = at(0, 0, 0) * at(0, 1, 1) * at(1, 0, 1) * at(1, 1, 0) +
                  at(0, 0, 1) * at(0, 1, 0) * at(1, 0, 0) * at(1, 1, 1);
  const R two_pairs = pairs + pairs;
  const R two_quads = quads + quads;
  return squares - two_pairs + two_quads + two_quads;
}

inline Rational cayley_hyperdet(const Tensor& t) {
  if (t.n() != 3 || t.d() != 2) throw WrongFormat("Cayley hyperdeterminant needs format 2x2x2");
  std::array<Rational, 8> a;
  for (std::size_t f = 0; f < 8; ++f) a[f] = t[f];
  return cayley_formula(a);
}

/// Cayley hyperdeterminant of the pencil s * t[..., 0] + u * t[..., 1].
inline BinaryQuartic schlaefli_pencil_quartic(const Tensor& t) {
  if (t.n() != 4 || t.d() != 2) throw WrongFormat("Schlaefli hyperdeterminant needs format 2x2x2x2");
  std::array<BinaryForm, 8> pencil;
  for (std::size_t f = 0; f < 8; ++f) pencil[f] = BinaryForm::linear(t[2 * f], t[2 * f + 1]);
  const auto q = cayley_formula(pencil).coeffs();
  if (q.empty()) return {};
  return {q[0], q[1], q[2], q[3], q[4]};
}

/// 2x2x2x2 hyperdeterminant as (4 I^3 - J^2) / 27 of the pencil quartic.
inline Rational schlaefli_hyperdet(const Tensor& t) {
  return quartic_discriminant(quartic_invariants(schlaefli_pencil_quartic(t))) / 27;
}

}  // namespace slocc
