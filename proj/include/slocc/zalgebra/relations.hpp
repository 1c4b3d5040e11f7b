#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <optional>
#include <vector>

#include "slocc/geometry/points.hpp"

namespace slocc {

/// Kernel of the evaluation of slot monomials on the points of Y_eta(F_p).
struct RelationSpace {
  std::uint32_t p = 0;
  std::size_t d = 0;
  std::vector<std::size_t> slot_pattern;  // variable group feeding each slot
  Subspace<Fp> basis;                     // in F_p^{d^arity}, RREF

  std::size_t arity() const noexcept { return slot_pattern.size(); }
  std::size_t dim() const noexcept { return basis.dim(); }
};

/// Rows: points; columns: products x^{(s_1)}_{i_1} ... x^{(s_k)}_{i_k}, indexed
/// row-major by (i_1, ..., i_k).
inline Matrix<Fp> slot_evaluation_matrix(const std::vector<ProjPoint>& points, std::span<const std::size_t> pattern,
                                         std::size_t d, std::uint32_t p) {
  const std::size_t width = int_pow(d, pattern.size());
  Matrix<Fp> m(points.size(), width, Fp::zero(p));
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t col = 0; col < width; ++col) {
      std::uint64_t v = 1;
      std::size_t rest = col;
      for (std::size_t s = pattern.size(); s-- > 0 && v;) {
        v = v * points[r].coords[pattern[s]][rest % d] % p;
        rest /= d;
      }
      m(r, col) = Fp(static_cast<std::int64_t>(v), p);
    }
  return m;
}

namespace detail {
inline bool covers_all_groups(std::span<const std::size_t> pattern, std::size_t groups) {
  if (pattern.size() != groups) return false;
  std::vector<std::size_t> s(pattern.begin(), pattern.end());
  std::sort(s.begin(), s.end());
  for (std::size_t g = 0; g < groups; ++g)
    if (s[g] != g) return false;
  return true;
}
}  // namespace detail

/// Relations among slot monomials that hold on every F_p-point of the model.
/// The evaluation matrix must reach the generic rank d^k - expected_kernel;
/// otherwise the points under-determine the kernel and InsufficientPoints is
/// thrown. expected_kernel defaults to the number of forms when the pattern
/// uses every variable group once, and to 0 otherwise.
inline RelationSpace relations_from_points(const FpModel& model, std::vector<std::size_t> slot_pattern,
                                           std::optional<std::size_t> expected_kernel = std::nullopt) {
  for (auto g : slot_pattern)
    if (g >= model.groups()) throw std::invalid_argument("slot pattern names a missing variable group");
  const std::size_t expected = expected_kernel.value_or(
      detail::covers_all_groups(slot_pattern, model.groups()) ? model.forms().size() : 0);
  const auto points = enumerate_points(model);
  const auto eval = slot_evaluation_matrix(points, slot_pattern, model.d(), model.prime());
  const std::size_t width = eval.cols();
  const std::size_t target = width - std::min(expected, width);
  const auto r = rank(eval);
  if (r < target) throw InsufficientPoints(r, target);
  return {model.prime(), model.d(), std::move(slot_pattern), kernel(eval)};
}

inline RelationSpace relations_from_points(const Tensor& t, std::uint32_t p, std::vector<std::size_t> slot_pattern) {
  return relations_from_points(FpModel::reduce(t, p), std::move(slot_pattern));
}

inline std::vector<std::size_t> natural_pattern(std::size_t groups) {
  std::vector<std::size_t> out(groups);
  for (std::size_t g = 0; g < groups; ++g) out[g] = g;
  return out;
}

/// Recovers V_eta mod p from the points of Y_eta(F_p) alone and compares it
/// with the reduction of the state's own V_eta.
inline bool roundtrip_check(const Tensor& t, std::uint32_t p) {
  const auto dim = v_eta(t).dim();
  if (dim != t.d()) throw RankDeficient(dim);
  const FpModel model = FpModel::reduce(t, p);
  const auto recovered = relations_from_points(model, natural_pattern(model.groups()));
  return recovered.basis == Subspace<Fp>::row_span(reduce_mod_p(flatten_last(t).transpose(), p));
}

}  // namespace slocc
