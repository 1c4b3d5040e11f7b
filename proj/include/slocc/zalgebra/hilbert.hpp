#pragma once

#include <nlohmann/json.hpp>

#include <vector>

#include "slocc/zalgebra/relations.hpp"

namespace slocc {

struct HilbertProfile {
  enum class Kind { Quadratic, Cubic };

  Kind kind = Kind::Quadratic;
  std::uint32_t p = 0;
  std::vector<std::size_t> dims;      // computed dim A_{i,i+k}, k = 0..k_max
  std::vector<std::size_t> expected;  // from the minimal resolution

  bool matches() const { return dims == expected; }
};

/// Coefficients of 1 / r(t) where r is the alternating rank polynomial of the
/// minimal resolution of S_i.
inline std::vector<long long> hilbert_from_resolution(const std::vector<long long>& r, std::size_t k_max) {
  std::vector<long long> h(k_max + 1, 0);
  for (std::size_t k = 0; k <= k_max; ++k) {
    long long acc = k == 0 ? 1 : 0;
    for (std::size_t i = 1; i < r.size() && i <= k; ++i) acc -= r[i] * h[k - i];
    h[k] = acc;
  }
  return h;
}

/// (k+1)(k+2)/2, the quadratic resolution 0 -> P(3) -> P(2)^3 -> P(1)^3 -> P(0).
inline std::vector<std::size_t> expected_quadratic(std::size_t k_max) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= k_max; ++k) out.push_back((k + 1) * (k + 2) / 2);
  return out;
}

/// h_k = 2h_{k-1} - 2h_{k-3} + h_{k-4}, h_0 = 1, from 0 -> P(4) -> P(3)^2 -> P(1)^2 -> P(0).
inline std::vector<std::size_t> expected_cubic(std::size_t k_max) {
  std::vector<long long> h;
  auto at = [&](long long i) { return i < 0 ? 0LL : h[static_cast<std::size_t>(i)]; };
  for (std::size_t k = 0; k <= k_max; ++k) {
    const auto kk = static_cast<long long>(k);
    h.push_back(k == 0 ? 1 : 2 * at(kk - 1) - 2 * at(kk - 3) + at(kk - 4));
  }
  return {h.begin(), h.end()};
}

/// Relation space for each position of the cyclic Z-algebra: position j
/// multiplies factors j, j+1, ..., j+n-2 (mod n) and its relations are
/// recovered from the points of the model whose distinguished factor is
/// j+n-1 (mod n).
inline std::vector<RelationSpace> cyclic_relation_spaces(const Tensor& t, std::uint32_t p) {
  std::vector<RelationSpace> out;
  for (std::size_t j = 0; j < t.n(); ++j) {
    const FpModel model = FpModel::reduce(rotate_factors(t, j), p);
    out.push_back(relations_from_points(model, natural_pattern(model.groups())));
  }
  return out;
}

/// dim of the degree-k piece of T(W) / (relations), where the relation at
/// position j is rels[j mod rels.size()] placed in slots j .. j+arity-1.
inline std::vector<std::size_t> quotient_dims(const std::vector<RelationSpace>& rels, std::size_t d,
                                              std::size_t k_max) {
  const std::size_t arity = rels.front().arity();
  const std::uint32_t p = rels.front().p;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= k_max; ++k) {
    const std::size_t width = int_pow(d, k);
    if (k < arity) {
      out.push_back(width);
      continue;
    }
    Matrix<Fp> span(0, width, Fp::zero(p));
    std::vector<Fp> row(width, Fp::zero(p));
    for (std::size_t j = 0; j + arity <= k; ++j) {
      const auto& basis = rels[j % rels.size()].basis.basis();
      const std::size_t left = int_pow(d, j);
      const std::size_t right = int_pow(d, k - arity - j);
      const std::size_t block = int_pow(d, arity);
      for (std::size_t r = 0; r < basis.rows(); ++r)
        for (std::size_t l = 0; l < left; ++l)
          for (std::size_t rt = 0; rt < right; ++rt) {
            std::fill(row.begin(), row.end(), Fp::zero(p));
            for (std::size_t idx = 0; idx < block; ++idx) row[(l * block + idx) * right + rt] = basis(r, idx);
            span.append_row(row);
          }
    }
    out.push_back(width - rank(span));
  }
  return out;
}

/// Hilbert function of the quadratic Z-algebra built from a 3-qutrit state.
inline HilbertProfile quadratic_hilbert(const Tensor& t, std::uint32_t p, std::size_t k_max) {
  if (t.n() != 3 || t.d() != 3) throw UnsupportedFormat("quadratic Hilbert function needs (n,d) = (3,3)");
  return {HilbertProfile::Kind::Quadratic, p, quotient_dims(cyclic_relation_spaces(t, p), 3, k_max),
          expected_quadratic(k_max)};
}

/// Hilbert function of the cubic Z-algebra built from a 4-qubit state.
inline HilbertProfile cubic_hilbert(const Tensor& t, std::uint32_t p, std::size_t k_max) {
  if (t.n() != 4 || t.d() != 2) throw UnsupportedFormat("cubic Hilbert function needs (n,d) = (4,2)");
  return {HilbertProfile::Kind::Cubic, p, quotient_dims(cyclic_relation_spaces(t, p), 2, k_max),
          expected_cubic(k_max)};
}

inline nlohmann::ordered_json to_json(const HilbertProfile& h) {
  nlohmann::ordered_json j;
  j["kind"] = h.kind == HilbertProfile::Kind::Quadratic ? "Quadratic" : "Cubic";
  j["p"] = h.p;
  j["computed"] = h.dims;
  j["expected"] = h.expected;
  j["matches"] = h.matches();
  return j;
}

}  // namespace slocc
