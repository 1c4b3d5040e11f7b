#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "slocc/geometry/points.hpp"

namespace slocc {

struct SingularWitness {
  ProjPoint point;
  std::size_t jacobian_rank = 0;
};

/// Outcome of sweeping Y_eta(F_p) for one prime.
struct PrimeSweep {
  enum class Status { Checked, BadReduction, Skipped };

  std::uint32_t p = 0;
  Status status = Status::Skipped;
  std::size_t point_count = 0;
  std::optional<SingularWitness> witness;
  std::string note;
};

struct SmoothnessReport {
  enum class Verdict { SingularFound, NoSingularPointFound };

  std::vector<PrimeSweep> sweeps;  // ascending prime order
  Verdict verdict = Verdict::NoSingularPointFound;

  std::vector<std::uint32_t> primes_used() const {
    std::vector<std::uint32_t> out;
    for (const auto& s : sweeps)
      if (s.status == PrimeSweep::Status::Checked) out.push_back(s.p);
    return out;
  }
  std::vector<SingularWitness> witnesses() const {
    std::vector<SingularWitness> out;
    for (const auto& s : sweeps)
      if (s.witness) out.push_back(*s.witness);
    return out;
  }
};

/// Enumerates Y_eta(F_p) and stops at the first point where the Jacobian
/// drops rank.
inline PrimeSweep sweep_prime(const Tensor& t, std::uint32_t p) {
  PrimeSweep s;
  s.p = p;
  std::optional<FpModel> model;
  try {
    model.emplace(FpModel::reduce(t, p));
  } catch (const BadReduction& e) {
    s.status = PrimeSweep::Status::BadReduction;
    s.note = e.what();
    return s;
  }
  std::vector<ProjPoint> pts;
  try {
    pts = enumerate_points(*model);
  } catch (const std::length_error& e) {
    s.status = PrimeSweep::Status::Skipped;
    s.note = e.what();
    return s;
  }
  s.status = PrimeSweep::Status::Checked;
  s.point_count = pts.size();
  for (const auto& pt : pts) {
    const std::size_t r = rank(jacobian_at(*model, pt));
    if (r < t.d()) {
      s.witness = SingularWitness{pt, r};
      break;
    }
  }
  return s;
}

namespace detail {
inline std::vector<std::uint32_t> sorted_unique(std::vector<std::uint32_t> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (auto p : primes)
    if (!is_prime(p) || p == 2) throw std::invalid_argument("primes must be odd primes: " + std::to_string(p));
  return primes;
}
}  // namespace detail

/// Finite-field evidence for smoothness of Y_eta. SingularFound is reported
/// as soon as any usable prime yields a rank drop; NoSingularPointFound is
/// evidence only.
inline SmoothnessReport smoothness_witness(const Tensor& t, std::vector<std::uint32_t> primes) {
  const auto dim = v_eta(t).dim();
  if (dim != t.d()) throw RankDeficient(dim);
  SmoothnessReport report;
  for (auto p : detail::sorted_unique(std::move(primes))) report.sweeps.push_back(sweep_prime(t, p));
  if (report.primes_used().empty()) throw AllPrimesBad("no prime of good reduction among those given");
  report.verdict = report.witnesses().empty() ? SmoothnessReport::Verdict::NoSingularPointFound
                                              : SmoothnessReport::Verdict::SingularFound;
  return report;
}

/// dim H^0(O_Y(1)) = d^{n-1} - d, the target dimension of the multiplication map.
inline std::size_t h0_check(std::size_t n, std::size_t d) {
  if (n < 2 || d < 2) throw std::invalid_argument("h0_check needs n, d >= 2");
  return int_pow(d, n - 1) - d;
}

inline nlohmann::ordered_json to_json(const ProjPoint& pt) { return pt.coords; }

inline const char* to_string(PrimeSweep::Status s) {
  switch (s) {
    case PrimeSweep::Status::Checked: return "checked";
    case PrimeSweep::Status::BadReduction: return "bad_reduction";
    case PrimeSweep::Status::Skipped: return "skipped";
  }
  return "?";
}

inline nlohmann::ordered_json to_json(const PrimeSweep& s) {
  nlohmann::ordered_json j;
  j["p"] = s.p;
  j["status"] = to_string(s.status);
  j["point_count"] = s.status == PrimeSweep::Status::Checked ? nlohmann::ordered_json(s.point_count) : nlohmann::ordered_json(nullptr);
  if (s.witness) {
    j["witness"] = {{"point", to_json(s.witness->point)}, {"jacobian_rank", s.witness->jacobian_rank}};
  } else {
    j["witness"] = nullptr;
  }
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

inline nlohmann::ordered_json to_json(const SmoothnessReport& r) {
  nlohmann::ordered_json j;
  j["verdict"] = r.verdict == SmoothnessReport::Verdict::SingularFound ? "SingularFound" : "NoSingularPointFound";
  j["primes_used"] = r.primes_used();
  auto sweeps = nlohmann::ordered_json::array();
  for (const auto& s : r.sweeps) sweeps.push_back(to_json(s));
  j["sweeps"] = std::move(sweeps);
  return j;
}

}  // namespace slocc
