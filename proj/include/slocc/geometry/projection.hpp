#pragma once

#include <algorithm>
#include <vector>

#include "slocc/geometry/variety.hpp"

namespace slocc {

/// Image of Y_eta after forgetting one projective factor. The forms are linear
/// in the eliminated group, so a point of the kept factors lifts iff the
/// matrix N[k][j] = d form_k / d x^{(eliminated)}_j is singular there; the
/// image is cut out by det N.
///
/// (3,3): kept_axes = {a}, a in {0,1}; returns a ternary cubic in group a.
/// (4,2): kept_axes = {a,b}, a < b in {0,1,2}; returns a (2,2) form.
inline MultiForm<Rational> det_linear_matrix(const VarietyModel& model, std::vector<std::size_t> kept_axes) {
  const bool plane_cubic = model.n == 3 && model.d == 3;
  const bool biquadratic = model.n == 4 && model.d == 2;
  if (!plane_cubic && !biquadratic)
    throw UnsupportedFormat("determinantal projection needs (n,d) = (3,3) or (4,2)");
  std::sort(kept_axes.begin(), kept_axes.end());
  const std::size_t want = plane_cubic ? 1 : 2;
  if (kept_axes.size() != want || std::adjacent_find(kept_axes.begin(), kept_axes.end()) != kept_axes.end() ||
      kept_axes.back() >= model.groups())
    throw std::invalid_argument("kept_axes must name " + std::to_string(want) + " distinct variable groups");

  std::size_t eliminated = 0;
  while (std::find(kept_axes.begin(), kept_axes.end(), eliminated) != kept_axes.end()) ++eliminated;

  const std::size_t d = model.d;
  std::vector<std::vector<MultiForm<Rational>>> n_matrix(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j) n_matrix[k].push_back(model.forms[k].derivative(eliminated, j));
  return det_by_permutations(n_matrix).restrict_to(kept_axes);
}

}  // namespace slocc
