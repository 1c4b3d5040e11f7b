#pragma once

#include <nlohmann/json.hpp>

#include <array>
#include <optional>
#include <string>

#include "slocc/geometry/multiform.hpp"
#include "slocc/invariants/aronhold_tables.hpp"

namespace slocc {

/// j-invariant of a genus-one curve, or the marker for a singular curve.
class JInvariant {
 public:
  static JInvariant singular() { return JInvariant(); }
  static JInvariant of(Rational j) { return JInvariant(std::move(j)); }

  bool is_singular() const noexcept { return !value_; }
  const Rational& value() const { return value_.value(); }

  friend bool operator==(const JInvariant& a, const JInvariant& b) { return a.value_ == b.value_; }

  /// ["num", "den"] or "singular".
  nlohmann::ordered_json to_json() const {
    if (!value_) return "singular";
    return nlohmann::ordered_json::array({value_->get_num().get_str(), value_->get_den().get_str()});
  }

 private:
  JInvariant() = default;
  explicit JInvariant(Rational j) : value_(std::move(j)) {}
  std::optional<Rational> value_;
};

/// Coefficients of x0^3, x0^2x1, x0^2x2, x0x1^2, x0x1x2, x0x2^2, x1^3, x1^2x2,
/// x1x2^2, x2^3 in that order.
struct TernaryCubic {
  static constexpr std::array<std::array<std::uint8_t, 3>, 10> kExponents{{
      {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1}, {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}}};

  std::array<Rational, 10> c{};

  static TernaryCubic from_form(const MultiForm<Rational>& f) {
    if (f.group_dims() != std::vector<std::size_t>{3} || f.multidegree() != std::vector<unsigned>{3})
      throw WrongDegree("expected a ternary cubic (one group of 3 variables, degree 3)");
    TernaryCubic out;
    for (std::size_t i = 0; i < 10; ++i)
      out.c[i] = f.coefficient({kExponents[i][0], kExponents[i][1], kExponents[i][2]});
    return out;
  }

  MultiForm<Rational> to_form() const {
    MultiForm<Rational> f({3}, {3});
    for (std::size_t i = 0; i < 10; ++i) f.add_term({kExponents[i][0], kExponents[i][1], kExponents[i][2]}, c[i]);
    return f;
  }
};

/// a s^4 + b s^3 t + c s^2 t^2 + d s t^3 + e t^4
struct BinaryQuartic {
  Rational a, b, c, d, e;
};

struct QuarticInvariants {
  Rational I, J;
};

struct CubicInvariants {
  Rational S, T;
};

/// Scale relating S^3 / (64 S^3 - T^2) to j.
inline const Rational& plane_cubic_j_scale() {
  static const Rational k(110592);
  return k;
}

namespace detail {
template <std::size_t N>
Rational eval_invariant(const std::array<InvariantTerm, N>& table, const std::array<Rational, 10>& c) {
  std::array<std::array<Rational, 7>, 10> powers;
  for (std::size_t i = 0; i < 10; ++i) {
    powers[i][0] = 1;
    for (std::size_t k = 1; k < 7; ++k) powers[i][k] = powers[i][k - 1] * c[i];
  }
  Rational acc = 0;
  for (const auto& term : table) {
    Rational m = static_cast<long>(term.coefficient);
    for (std::size_t i = 0; i < 10 && !is_zero(m); ++i)
      if (term.exponents[i]) m *= powers[i][term.exponents[i]];
    acc += m;
  }
  return acc;
}
}  // namespace detail

/// Degree-4 and degree-6 invariants; S(f o A) = det(A)^4 S(f), T(f o A) = det(A)^6 T(f).
inline CubicInvariants aronhold_invariants(const TernaryCubic& f) {
  return {detail::eval_invariant(kAronholdS, f.c), detail::eval_invariant(kAronholdT, f.c)};
}

inline Rational cubic_discriminant(const CubicInvariants& st) { return 64 * st.S * st.S * st.S - st.T * st.T; }

inline JInvariant j_plane_cubic(const TernaryCubic& f) {
  const auto st = aronhold_invariants(f);
  const Rational disc = cubic_discriminant(st);
  if (is_zero(disc)) return JInvariant::singular();
  return JInvariant::of(plane_cubic_j_scale() * st.S * st.S * st.S / disc);
}

inline QuarticInvariants quartic_invariants(const BinaryQuartic& g) {
  const auto& [a, b, c, d, e] = g;
  Rational I = 12 * a * e - 3 * b * d + c * c;
  Rational J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * b * b * e - 2 * c * c * c;
  return {I, J};
}

inline Rational quartic_discriminant(const QuarticInvariants& ij) { return 4 * ij.I * ij.I * ij.I - ij.J * ij.J; }

inline JInvariant j_binary_quartic(const BinaryQuartic& g) {
  const auto ij = quartic_invariants(g);
  const Rational disc = quartic_discriminant(ij);
  if (is_zero(disc)) return JInvariant::singular();
  return JInvariant::of(6912 * ij.I * ij.I * ij.I / disc);
}

/// Writes a (2,2) form as A(x) y0^2 + B(x) y0 y1 + C(x) y1^2 and returns the
/// discriminant B^2 - 4AC as a binary quartic in (x0, x1). Its roots are the
/// branch points of the projection to the first factor.
inline BinaryQuartic biquadratic_branch_quartic(const MultiForm<Rational>& m) {
  if (m.group_dims() != std::vector<std::size_t>{2, 2} || m.multidegree() != std::vector<unsigned>{2, 2})
    throw WrongDegree("expected a form of bidegree (2,2) in two pairs of variables");
  // q[k][i]: coefficient of x0^{2-i} x1^i in the y0^{2-k} y1^k part.
  std::array<std::array<Rational, 3>, 3> q;
  for (std::uint8_t k = 0; k < 3; ++k)
    for (std::uint8_t i = 0; i < 3; ++i)
      q[k][i] = m.coefficient({static_cast<std::uint8_t>(2 - i), i, static_cast<std::uint8_t>(2 - k), k});
  std::array<Rational, 5> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i + j] += q[1][i] * q[1][j] - 4 * q[0][i] * q[2][j];
  return {out[0], out[1], out[2], out[3], out[4]};
}

inline JInvariant j_biquadratic(const MultiForm<Rational>& m) { return j_binary_quartic(biquadratic_branch_quartic(m)); }

/// Classical invariants of one projected curve.
struct CurveInvariants {
  enum class Kind { PlaneCubic, Biquadratic };

  Kind kind = Kind::PlaneCubic;
  Rational first;   // S (cubic) or I (quartic)
  Rational second;  // T (cubic) or J (quartic)
  Rational discriminant;
  JInvariant j = JInvariant::singular();

  static CurveInvariants of_cubic(const TernaryCubic& f) {
    CurveInvariants ci;
    ci.kind = Kind::PlaneCubic;
    const auto st = aronhold_invariants(f);
    ci.first = st.S;
    ci.second = st.T;
    ci.discriminant = cubic_discriminant(st);
    ci.j = j_plane_cubic(f);
    return ci;
  }

  static CurveInvariants of_biquadratic(const MultiForm<Rational>& m) {
    CurveInvariants ci;
    ci.kind = Kind::Biquadratic;
    const auto q = biquadratic_branch_quartic(m);
    const auto ij = quartic_invariants(q);
    ci.first = ij.I;
    ci.second = ij.J;
    ci.discriminant = quartic_discriminant(ij);
    ci.j = j_binary_quartic(q);
    return ci;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    const bool cubic = kind == Kind::PlaneCubic;
    j["kind"] = cubic ? "PlaneCubic" : "Biquadratic";
    j[cubic ? "S" : "I"] = to_string(first);
    j[cubic ? "T" : "J"] = to_string(second);
    j["discriminant"] = to_string(discriminant);
    j["j"] = this->j.to_json();
    return j;
  }
};

}  // namespace slocc
