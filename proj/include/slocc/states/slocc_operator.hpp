#pragma once

#include <vector>

#include "slocc/states/tensor.hpp"

namespace slocc {

/// Local invertible operators A(1) x ... x A(n), one per tensor factor.
class SloccOperator {
 public:
  explicit SloccOperator(std::vector<Matrix<Rational>> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("SLOCC operator needs at least one factor");
    const std::size_t d = factors_.front().rows();
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const auto& a = factors_[i];
      if (a.rows() != d || a.cols() != d) throw std::invalid_argument("SLOCC factors must all be d x d");
      if (is_zero(determinant(a)))
        throw SingularOperator("factor " + std::to_string(i) + " has zero determinant");
    }
  }

  static SloccOperator identity(std::size_t n, std::size_t d) {
    return SloccOperator(std::vector<Matrix<Rational>>(n, Matrix<Rational>::identity(d)));
  }

  /// Factors drawn with random_invertible from consecutive seeds.
  static SloccOperator random(std::size_t n, std::size_t d, std::int64_t bound, std::uint64_t seed) {
    std::vector<Matrix<Rational>> fs;
    for (std::size_t i = 0; i < n; ++i) fs.push_back(random_invertible(d, bound, seed * 1000003ULL + i));
    return SloccOperator(std::move(fs));
  }

  std::size_t size() const noexcept { return factors_.size(); }
  const Matrix<Rational>& factor(std::size_t i) const { return factors_.at(i); }
  const std::vector<Matrix<Rational>>& factors() const noexcept { return factors_; }

  /// (g * h) . t == g . (h . t)
  friend SloccOperator operator*(const SloccOperator& g, const SloccOperator& h) {
    if (g.size() != h.size()) throw std::invalid_argument("SLOCC composition: arity mismatch");
    std::vector<Matrix<Rational>> fs;
    for (std::size_t i = 0; i < g.size(); ++i) fs.push_back(g.factors_[i] * h.factors_[i]);
    return SloccOperator(std::move(fs));
  }

 private:
  std::vector<Matrix<Rational>> factors_;
};

inline Tensor apply_slocc(const Tensor& t, const SloccOperator& g) {
  if (g.size() != t.n()) throw std::invalid_argument("SLOCC operator arity differs from tensor arity");
  if (g.factor(0).rows() != t.d()) throw std::invalid_argument("SLOCC operator dimension differs from d");
  Tensor out = t;
  for (std::size_t a = 0; a < t.n(); ++a) out = apply_on_factor(out, a, g.factor(a));
  return out;
}

}  // namespace slocc
