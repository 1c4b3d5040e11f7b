#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "slocc/arith/matrix.hpp"
#include "slocc/arith/reduce.hpp"

namespace slocc {

/// Multihomogeneous polynomial in several groups of variables. Exponents are
/// stored flattened, group after group; every term has degree multidegree[g]
/// in group g.
template <class T>
class MultiForm {
 public:
  using Exponent = std::vector<std::uint8_t>;

  MultiForm() = default;
  MultiForm(std::vector<std::size_t> group_dims, std::vector<unsigned> multidegree, T zero = T{})
      : dims_(std::move(group_dims)), degree_(std::move(multidegree)), zero_(zero_like(zero)) {
    if (dims_.size() != degree_.size()) throw std::invalid_argument("one degree per variable group");
    offsets_.resize(dims_.size());
    std::exclusive_scan(dims_.begin(), dims_.end(), offsets_.begin(), std::size_t{0});
  }

  /// The single variable x^{(group)}_index.
  static MultiForm variable(const std::vector<std::size_t>& group_dims, std::size_t group, std::size_t index,
                            T zero = T{}) {
    std::vector<unsigned> deg(group_dims.size(), 0);
    deg.at(group) = 1;
    MultiForm f(group_dims, deg, zero);
    Exponent e(f.num_vars(), 0);
    e[f.offsets_[group] + index] = 1;
    f.add_term(e, one_like(f.zero_));
    return f;
  }

  const std::vector<std::size_t>& group_dims() const noexcept { return dims_; }
  const std::vector<unsigned>& multidegree() const noexcept { return degree_; }
  const std::map<Exponent, T>& terms() const noexcept { return terms_; }
  const T& zero() const noexcept { return zero_; }
  std::size_t num_vars() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }
  std::size_t offset(std::size_t group) const { return offsets_.at(group); }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponent& e, const T& c) {
    check_exponent(e);
    if (slocc::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (slocc::is_zero(it->second)) terms_.erase(it);
    }
  }

  T coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_ : it->second;
  }

  /// d/dx^{(group)}_index; the degree in that group drops by one.
  MultiForm derivative(std::size_t group, std::size_t index) const {
    if (degree_.at(group) == 0) throw std::invalid_argument("derivative of a group-constant form");
    auto deg = degree_;
    --deg[group];
    MultiForm out(dims_, deg, zero_);
    const std::size_t v = offsets_[group] + index;
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      Exponent f = e;
      --f[v];
      T k = zero_;
      for (unsigned r = 0; r < e[v]; ++r) k += c;
      out.add_term(f, k);
    }
    return out;
  }

  /// Drops variable groups of degree zero (which carry no variables in any term).
  MultiForm restrict_to(const std::vector<std::size_t>& kept) const {
    std::vector<std::size_t> dims;
    std::vector<unsigned> deg;
    for (auto g : kept) {
      dims.push_back(dims_.at(g));
      deg.push_back(degree_.at(g));
    }
    for (std::size_t g = 0; g < dims_.size(); ++g)
      if (std::find(kept.begin(), kept.end(), g) == kept.end() && degree_[g] != 0)
        throw std::invalid_argument("cannot drop a group of positive degree");
    MultiForm out(dims, deg, zero_);
    for (const auto& [e, c] : terms_) {
      Exponent f;
      for (auto g : kept) f.insert(f.end(), e.begin() + offsets_[g], e.begin() + offsets_[g] + dims_[g]);
      out.add_term(f, c);
    }
    return out;
  }

  T evaluate(const std::vector<std::vector<T>>& point) const {
    if (point.size() != dims_.size()) throw std::invalid_argument("point arity mismatch");
    T acc = zero_;
    for (const auto& [e, c] : terms_) {
      T term = c;
      for (std::size_t g = 0; g < dims_.size(); ++g)
        for (std::size_t i = 0; i < dims_[g]; ++i)
          for (unsigned k = 0; k < e[offsets_[g] + i]; ++k) term *= point[g][i];
      acc += term;
    }
    return acc;
  }

  friend MultiForm operator+(const MultiForm& a, const MultiForm& b) {
    a.check_same_space(b, true);
    MultiForm out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend MultiForm operator-(const MultiForm& a, const MultiForm& b) {
    a.check_same_space(b, true);
    MultiForm out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
  }
  friend MultiForm operator*(const MultiForm& a, const MultiForm& b) {
    a.check_same_space(b, false);
    auto deg = a.degree_;
    for (std::size_t g = 0; g < deg.size(); ++g) deg[g] += b.degree_[g];
    MultiForm out(a.dims_, deg, a.zero_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea.size());
        for (std::size_t v = 0; v < e.size(); ++v) e[v] = static_cast<std::uint8_t>(ea[v] + eb[v]);
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend MultiForm operator*(const T& s, const MultiForm& a) {
    MultiForm out(a.dims_, a.degree_, a.zero_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
    return out;
  }

  friend bool operator==(const MultiForm& a, const MultiForm& b) {
    return a.dims_ == b.dims_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Human-readable rendering; group g uses the letter names[g].
  std::string to_string(const std::string& names = "xyzuvw") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      os << (first ? "" : " + ") << "(" << it->second << ")";
      first = false;
      for (std::size_t g = 0; g < dims_.size(); ++g)
        for (std::size_t i = 0; i < dims_[g]; ++i) {
          const unsigned k = it->first[offsets_[g] + i];
          if (k == 0) continue;
          os << "*" << names.at(g % names.size()) << i;
          if (k > 1) os << "^" << k;
        }
    }
    return os.str();
  }

 private:
  void check_exponent(const Exponent& e) const {
    if (e.size() != num_vars()) throw std::invalid_argument("exponent length mismatch");
    for (std::size_t g = 0; g < dims_.size(); ++g) {
      unsigned s = 0;
      for (std::size_t i = 0; i < dims_[g]; ++i) s += e[offsets_[g] + i];
      if (s != degree_[g]) throw std::invalid_argument("term is not of the stated multidegree");
    }
  }
  void check_same_space(const MultiForm& o, bool same_degree) const {
    if (dims_ != o.dims_) throw std::invalid_argument("forms live in different variable groups");
    if (same_degree && degree_ != o.degree_) throw std::invalid_argument("forms have different multidegrees");
  }

  std::vector<std::size_t> dims_;
  std::vector<unsigned> degree_;
  std::vector<std::size_t> offsets_;
  T zero_{};
  std::map<Exponent, T> terms_;
};

/// Determinant of a square matrix of forms by permutation expansion (no
/// division, so it stays exact over polynomial entries).
template <class T>
MultiForm<T> det_by_permutations(const std::vector<std::vector<MultiForm<T>>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty form matrix");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiForm<T> acc;
  bool have = false;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    MultiForm<T> term = m[0][perm[0]];
    for (std::size_t i = 1; i < n; ++i) term = term * m[i][perm[i]];
    if (inversions % 2) term = (zero_like(term.zero()) - one_like(term.zero())) * term;
    acc = have ? acc + term : term;
    have = true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

inline MultiForm<Fp> reduce_mod_p(const MultiForm<Rational>& f, std::uint32_t p) {
  std::vector<unsigned> deg = f.multidegree();
  MultiForm<Fp> out(f.group_dims(), deg, Fp::zero(p));
  for (const auto& [e, c] : f.terms()) out.add_term(e, reduce_mod_p(c, p));
  return out;
}

}  // namespace slocc
