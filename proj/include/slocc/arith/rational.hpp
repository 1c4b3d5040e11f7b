#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "slocc/errors.hpp"

namespace slocc {

/// Exact rational backed by GMP. Values produced by the library are always
/// canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational inverse(const Rational& x) { return Rational(1) / x; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

namespace detail {
inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}
}  // namespace detail

/// Parses "num" or "num/den" (optional leading sign on num, no decimals).
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw SchemaError("malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (sgn(d) == 0) throw SchemaError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// "num" when the denominator is 1, else "num/den".
inline std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace slocc
