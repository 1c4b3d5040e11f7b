#pragma once

#include <string>
#include <vector>

#include "slocc/geometry/multiform.hpp"
#include "slocc/states/state_io.hpp"
#include "slocc/states/tensor.hpp"

namespace slocc {

namespace detail {
/// Reads a coefficient vector indexed row-major by (i_1, ..., i_m) as the
/// multilinear form sum c[i] x^{(1)}_{i_1} ... x^{(m)}_{i_m}.
template <class T>
MultiForm<T> multilinear_form(std::span<const T> coeffs, std::size_t groups, std::size_t d, T zero) {
  MultiForm<T> f(std::vector<std::size_t>(groups, d), std::vector<unsigned>(groups, 1), zero);
  typename MultiForm<T>::Exponent e(groups * d, 0);
  for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
    if (is_zero(coeffs[flat])) continue;
    std::fill(e.begin(), e.end(), 0);
    std::size_t rest = flat;
    for (std::size_t g = groups; g-- > 0;) {
      e[g * d + rest % d] = 1;
      rest /= d;
    }
    f.add_term(e, coeffs[flat]);
  }
  return f;
}
}  // namespace detail

/// Y_eta inside P^{d-1} x ... x P^{d-1} ((n-1) factors), cut out by the
/// multilinear forms spanning V_eta.
struct VarietyModel {
  std::size_t n = 0;
  std::size_t d = 0;
  Subspace<Rational> relations;  // V_eta in RREF
  std::vector<MultiForm<Rational>> forms;
  Tensor source;
  std::string source_hash;

  std::size_t groups() const noexcept { return n - 1; }
};

/// Builds the defining forms of Y_eta; throws RankDeficient unless dim V_eta == d.
inline VarietyModel equations_of_Y(const Tensor& t) {
  VarietyModel m;
  m.n = t.n();
  m.d = t.d();
  m.relations = v_eta(t);
  if (m.relations.dim() != t.d()) throw RankDeficient(m.relations.dim());
  for (std::size_t k = 0; k < m.relations.dim(); ++k)
    m.forms.push_back(detail::multilinear_form<Rational>(m.relations.basis().row(k), m.groups(), m.d, Rational(0)));
  m.source = t;
  m.source_hash = state_hash(t);
  return m;
}

/// Y_eta over F_p: multilinear forms stored as coefficient vectors of length
/// d^{n-1}. Forms need not be independent (degenerate test models are allowed).
class FpModel {
 public:
  FpModel(std::size_t n, std::size_t d, std::uint32_t p, std::vector<std::vector<Fp>> forms)
      : n_(n), d_(d), p_(p), forms_(std::move(forms)) {
    if (!is_prime(p) || p == 2 || p >= (1u << 31)) throw std::invalid_argument("modulus must be an odd prime < 2^31");
    const std::size_t width = int_pow(d, n - 1);
    for (const auto& f : forms_)
      if (f.size() != width) throw std::invalid_argument("form width must be d^{n-1}");
  }

  /// Reduces the source tensor and recomputes V_eta over F_p. Throws
  /// BadReduction if a coefficient denominator vanishes mod p or if the
  /// flattening loses rank mod p.
  static FpModel reduce(const Tensor& t, std::uint32_t p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("modulus must be an odd prime");
    const FpTensor tp = reduce_mod_p(t, p);
    const auto space = v_eta(tp);
    if (space.dim() != t.d()) throw BadReduction(p, "dim V_eta drops to " + std::to_string(space.dim()));
    std::vector<std::vector<Fp>> forms;
    for (std::size_t k = 0; k < space.dim(); ++k) {
      const auto r = space.basis().row(k);
      forms.emplace_back(r.begin(), r.end());
    }
    return FpModel(t.n(), t.d(), p, std::move(forms));
  }
  static FpModel reduce(const VarietyModel& m, std::uint32_t p) { return reduce(m.source, p); }

  std::size_t n() const noexcept { return n_; }
  std::size_t d() const noexcept { return d_; }
  std::size_t groups() const noexcept { return n_ - 1; }
  std::uint32_t prime() const noexcept { return p_; }
  const std::vector<std::vector<Fp>>& forms() const noexcept { return forms_; }

  /// Forms as rows of a matrix (the relation space V_eta mod p when built by reduce).
  Matrix<Fp> form_matrix() const {
    Matrix<Fp> m(0, int_pow(d_, n_ - 1), Fp::zero(p_));
    for (const auto& f : forms_) m.append_row(f);
    return m;
  }

 private:
  std::size_t n_;
  std::size_t d_;
  std::uint32_t p_;
  std::vector<std::vector<Fp>> forms_;
};

}  // namespace slocc
