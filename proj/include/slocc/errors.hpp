#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slocc {

/// Base of every recoverable failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A denominator (or a rank) does not survive reduction modulo p.
class BadReduction : public Error {
 public:
  BadReduction(unsigned long p, const std::string& what)
      : Error("bad reduction mod " + std::to_string(p) + ": " + what), prime_(p) {}
  unsigned long prime() const noexcept { return prime_; }

 private:
  unsigned long prime_;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class DuplicateIndex : public Error {
 public:
  using Error::Error;
};

class SingularOperator : public Error {
 public:
  using Error::Error;
};

/// dim V_eta differs from the local dimension d.
class RankDeficient : public Error {
 public:
  explicit RankDeficient(std::size_t dim)
      : Error("rank deficient: dim V_eta = " + std::to_string(dim)), dim_(dim) {}
  std::size_t dim() const noexcept { return dim_; }

 private:
  std::size_t dim_;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

class WrongFormat : public Error {
 public:
  using Error::Error;
};

class WrongDegree : public Error {
 public:
  using Error::Error;
};

class NotOnVariety : public Error {
 public:
  using Error::Error;
};

class AllPrimesBad : public Error {
 public:
  using Error::Error;
};

class InsufficientPoints : public Error {
 public:
  InsufficientPoints(std::size_t rank, std::size_t target)
      : Error("insufficient points: evaluation rank " + std::to_string(rank) +
              " below generic target " + std::to_string(target)),
        rank_(rank),
        target_(target) {}
  std::size_t rank() const noexcept { return rank_; }
  std::size_t target() const noexcept { return target_; }

 private:
  std::size_t rank_;
  std::size_t target_;
};

class FormatMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace slocc
