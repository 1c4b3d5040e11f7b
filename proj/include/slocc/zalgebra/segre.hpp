#pragma once

#include <set>

#include "slocc/zalgebra/relations.hpp"

namespace slocc {

struct MuSurjectivity {
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::size_t projected_points = 0;

  bool surjective() const noexcept { return kernel_dim == 0; }
};

/// Multiplication map H^0(L) (x) H^0(L') -> H^0(L (x) L') for the line
/// bundles pulled back from two of the three projective factors of a 4-qubit
/// model, probed by evaluating the four products x_i y_j at the F_p-points of
/// the projected curve. Full rank 4 means surjective; a kernel means the
/// projection factors through a (1,1) curve, as it does when L = L'.
inline MuSurjectivity mu_surjectivity(const Tensor& t, std::array<std::size_t, 2> axis_pair, std::uint32_t p) {
  if (t.n() != 4 || t.d() != 2) throw UnsupportedFormat("mu_surjectivity needs (n,d) = (4,2)");
  if (axis_pair[0] == axis_pair[1] || axis_pair[0] > 2 || axis_pair[1] > 2)
    throw std::invalid_argument("axis_pair must name two distinct axes among 0, 1, 2");
  const FpModel model = FpModel::reduce(t, p);
  std::set<ProjPoint> projected;
  for (const auto& pt : enumerate_points(model))
    projected.insert(ProjPoint{p, {pt.coords[axis_pair[0]], pt.coords[axis_pair[1]]}});
  const std::vector<ProjPoint> pts(projected.begin(), projected.end());
  if (pts.size() < 4) throw InsufficientPoints(pts.size(), 4);
  const std::array<std::size_t, 2> pattern{0, 1};
  MuSurjectivity out;
  out.projected_points = pts.size();
  out.rank = rank(slot_evaluation_matrix(pts, pattern, 2, p));
  out.kernel_dim = 4 - out.rank;
  return out;
}

}  // namespace slocc
