#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace slocc {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

/// Element of the prime field F_p, p an odd prime below 2^31. The modulus
/// travels with the value; mixing moduli is a logic error.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t v, std::uint32_t p) : p_(p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  static Fp zero(std::uint32_t p) { return Fp(0, p); }
  static Fp one(std::uint32_t p) { return Fp(1, p); }

  std::uint32_t value() const noexcept { return v_; }
  std::uint32_t prime() const noexcept { return p_; }

  Fp& operator+=(const Fp& o) {
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + p_ - o.v_);
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const { return Fp(0, p_) - *this; }

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend auto operator<=>(const Fp& a, const Fp& b) { return a.v_ <=> b.v_; }

  Fp pow(std::uint64_t e) const {
    Fp base = *this, acc = one(p_);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(p_ - 2);
  }

  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

 private:
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline Fp inverse(const Fp& x) { return x.inverse(); }
inline Fp zero_like(const Fp& x) { return Fp::zero(x.prime()); }
inline Fp one_like(const Fp& x) { return Fp::one(x.prime()); }

}  // namespace slocc
