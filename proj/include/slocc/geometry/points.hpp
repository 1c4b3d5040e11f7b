#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

#include "slocc/geometry/variety.hpp"

namespace slocc {

/// F_p-point of a product of projective spaces; in each factor the first
/// nonzero coordinate is 1.
struct ProjPoint {
  std::uint32_t p = 0;
  std::vector<std::vector<std::uint32_t>> coords;

  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

  std::vector<std::vector<Fp>> as_fp() const {
    std::vector<std::vector<Fp>> out;
    for (const auto& c : coords) {
      auto& v = out.emplace_back();
      for (auto x : c) v.emplace_back(x, p);
    }
    return out;
  }
};

/// All normalized representatives of P^{d-1}(F_p), in lexicographic order of
/// (position of the leading 1, remaining coordinates).
inline std::vector<std::vector<std::uint32_t>> projective_space_points(std::size_t d, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t lead = 0; lead < d; ++lead) {
    std::vector<std::uint32_t> v(d, 0);
    v[lead] = 1;
    const std::size_t free = d - lead - 1;
    const std::size_t count = int_pow(p, free);
    for (std::size_t c = 0; c < count; ++c) {
      std::size_t rest = c;
      for (std::size_t i = d; i-- > lead + 1;) {
        v[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      out.push_back(v);
    }
  }
  return out;
}

/// Evaluation budget for enumerate_points: number of fixed-prefix tuples.
inline constexpr std::size_t kEnumerationBudget = 4'000'000;

namespace detail {
/// Coefficients of each form as a linear form in the last variable group, with
/// the earlier groups fixed to `prefix`.
inline Matrix<Fp> last_group_system(const FpModel& m, const std::vector<const std::vector<std::uint32_t>*>& prefix) {
  const std::size_t d = m.d();
  const std::uint32_t p = m.prime();
  const std::size_t fixed = prefix.size();
  const std::size_t outer = int_pow(d, fixed);
  Matrix<Fp> sys(m.forms().size(), d, Fp::zero(p));
  for (std::size_t k = 0; k < m.forms().size(); ++k) {
    const auto& f = m.forms()[k];
    for (std::size_t o = 0; o < outer; ++o) {
      std::uint64_t w = 1;
      std::size_t rest = o;
      for (std::size_t g = fixed; g-- > 0 && w;) {
        w = w * (*prefix[g])[rest % d] % p;
        rest /= d;
      }
      if (!w) continue;
      const Fp wf(static_cast<std::int64_t>(w), p);
      for (std::size_t j = 0; j < d; ++j) sys(k, j) += wf * f[o * d + j];
    }
  }
  return sys;
}
}  // namespace detail

/// Every F_p-point of the model, sorted and duplicate-free. The last variable
/// group is solved linearly for each choice of the others, which is exact
/// because the forms are multilinear.
inline std::vector<ProjPoint> enumerate_points(const FpModel& m) {
  const std::size_t d = m.d();
  const std::uint32_t p = m.prime();
  const std::size_t fixed = m.groups() - 1;
  const auto pd = projective_space_points(d, p);
  const std::size_t tuples = int_pow(pd.size(), fixed);
  if (tuples > kEnumerationBudget) throw std::length_error("point enumeration exceeds budget");

  std::vector<ProjPoint> out;
  std::vector<const std::vector<std::uint32_t>*> prefix(fixed);
  for (std::size_t t = 0; t < tuples; ++t) {
    std::size_t rest = t;
    for (std::size_t g = fixed; g-- > 0;) {
      prefix[g] = &pd[rest % pd.size()];
      rest /= pd.size();
    }
    const auto sys = m.forms().empty() ? Matrix<Fp>(0, d, Fp::zero(p)) : detail::last_group_system(m, prefix);
    const auto ker = kernel(sys);
    if (ker.dim() == 0) continue;
    // The kernel basis is in RREF, so c * basis is already normalized when c is.
    for (const auto& c : projective_space_points(ker.dim(), p)) {
      ProjPoint pt{p, {}};
      for (auto* v : prefix) pt.coords.push_back(*v);
      std::vector<std::uint32_t> last(d, 0);
      for (std::size_t j = 0; j < d; ++j) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < c.size(); ++i) s += std::uint64_t{c[i]} * ker.basis()(i, j).value() % p;
        last[j] = static_cast<std::uint32_t>(s % p);
      }
      pt.coords.push_back(std::move(last));
      out.push_back(std::move(pt));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ProjPoint> enumerate_points(const VarietyModel& m, std::uint32_t p) {
  return enumerate_points(FpModel::reduce(m, p));
}

namespace detail {
inline Fp eval_form(const FpModel& m, const std::vector<Fp>& f, const ProjPoint& pt) {
  const std::size_t d = m.d();
  Fp acc = Fp::zero(m.prime());
  for (std::size_t flat = 0; flat < f.size(); ++flat) {
    if (is_zero(f[flat])) continue;
    Fp term = f[flat];
    std::size_t rest = flat;
    for (std::size_t g = m.groups(); g-- > 0;) {
      term *= Fp(pt.coords[g][rest % d], m.prime());
      rest /= d;
    }
    acc += term;
  }
  return acc;
}
}  // namespace detail

inline bool lies_on(const FpModel& m, const ProjPoint& pt) {
  for (const auto& f : m.forms())
    if (!is_zero(detail::eval_form(m, f, pt))) return false;
  return true;
}

/// Jacobian of the forms (rows) against all (n-1)d homogeneous coordinates.
inline Matrix<Fp> jacobian_at(const FpModel& m, const ProjPoint& pt) {
  const std::size_t d = m.d();
  const std::size_t groups = m.groups();
  const std::uint32_t p = m.prime();
  Matrix<Fp> jac(m.forms().size(), groups * d, Fp::zero(p));
  std::vector<std::size_t> idx(groups);
  for (std::size_t k = 0; k < m.forms().size(); ++k) {
    const auto& f = m.forms()[k];
    for (std::size_t flat = 0; flat < f.size(); ++flat) {
      if (is_zero(f[flat])) continue;
      std::size_t rest = flat;
      for (std::size_t g = groups; g-- > 0;) {
        idx[g] = rest % d;
        rest /= d;
      }
      for (std::size_t g = 0; g < groups; ++g) {
        Fp term = f[flat];
        for (std::size_t h = 0; h < groups && !is_zero(term); ++h)
          if (h != g) term *= Fp(pt.coords[h][idx[h]], p);
        jac(k, g * d + idx[g]) += term;
      }
    }
  }
  return jac;
}

/// Rank over F_p of the Jacobian at a point of the model; the model is smooth
/// at pt iff the rank equals the number of independent forms.
inline std::size_t jacobian_rank_at(const FpModel& m, const ProjPoint& pt) {
  if (pt.p != m.prime() || pt.coords.size() != m.groups()) throw std::invalid_argument("point does not match model");
  if (!lies_on(m, pt)) throw NotOnVariety("a defining form is nonzero at the point");
  return rank(jacobian_at(m, pt));
}

inline std::size_t jacobian_rank_at(const VarietyModel& m, const ProjPoint& pt) {
  return jacobian_rank_at(FpModel::reduce(m, pt.p), pt);
}

}  // namespace slocc
