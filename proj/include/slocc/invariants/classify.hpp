#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "slocc/geometry/projection.hpp"
#include "slocc/geometry/smoothness.hpp"
#include "slocc/invariants/hyperdet.hpp"

namespace slocc {

/// dim R - dim G' = d^n - (n d^2 - n + 1).
inline long long moduli_dimension(long long n, long long d) {
  if (n < 2 || d < 2) throw std::invalid_argument("moduli_dimension needs n, d >= 2");
  long long dn = 1;
  for (long long i = 0; i < n; ++i) dn *= d;
  return dn - n * d * d + n - 1;
}

/// One determinantal projection of Y_eta and its curve invariants.
struct Projection {
  std::vector<std::size_t> kept_axes;
  CurveInvariants invariants;
};

enum class Status { RankDeficient, SingularModel, SmoothGeneric };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::RankDeficient: return "RankDeficient";
    case Status::SingularModel: return "SingularModel";
    case Status::SmoothGeneric: return "SmoothGeneric";
  }
  return "?";
}

struct Verdict {
  std::size_t n = 0;
  std::size_t d = 0;
  Status status = Status::RankDeficient;
  std::size_t dim_v_eta = 0;
  std::vector<Projection> projections;  // by axis index
  std::optional<JInvariant> j;          // common j of the projections
  std::optional<Rational> hyperdeterminant;
  std::optional<bool> semistable_hint;
  std::vector<PrimeSweep> sweeps;  // ascending prime order
  /// The exact discriminants say smooth but a prime of good reduction produced
  /// a singular point (or vice versa never happens: absence of a witness is
  /// not evidence of smoothness).
  bool fp_evidence_conflict = false;
  std::vector<std::string> notes;

  /// Status decided by exact discriminants rather than finite-field sampling.
  bool exact() const noexcept { return status == Status::RankDeficient || !projections.empty(); }

  std::vector<std::uint32_t> primes_used() const {
    std::vector<std::uint32_t> out;
    for (const auto& s : sweeps)
      if (s.status == PrimeSweep::Status::Checked) out.push_back(s.p);
    return out;
  }
  std::optional<SingularWitness> witness() const {
    for (const auto& s : sweeps)
      if (s.witness) return s.witness;
    return std::nullopt;
  }
};

namespace detail {
inline std::vector<Projection> curve_projections(const VarietyModel& model) {
  std::vector<Projection> out;
  if (model.n == 3 && model.d == 3) {
    for (std::size_t a = 0; a < 2; ++a)
      out.push_back({{a}, CurveInvariants::of_cubic(TernaryCubic::from_form(det_linear_matrix(model, {a})))});
  } else if (model.n == 4 && model.d == 2) {
    for (std::vector<std::size_t> axes : {std::vector<std::size_t>{0, 1}, {0, 2}, {1, 2}})
      out.push_back({axes, CurveInvariants::of_biquadratic(det_linear_matrix(model, axes))});
  }
  return out;
}
}  // namespace detail

/// Places the state in the verdict lattice RankDeficient / SingularModel /
/// SmoothGeneric.
///
/// (3,3) and (4,2) are decided exactly by the discriminants of the projected
/// curves; finite-field sweeps then run only at primes where every
/// discriminant is a unit, and a singular point found there is flagged as a
/// conflict. Other formats are decided by the sweeps alone: SingularModel
/// requires a singular point at every prime that could be checked.
inline Verdict classify(const Tensor& t, std::vector<std::uint32_t> primes = default_primes()) {
  Verdict v;
  v.n = t.n();
  v.d = t.d();
  primes = detail::sorted_unique(std::move(primes));

  if (t.n() == 3 && t.d() == 2) v.hyperdeterminant = cayley_hyperdet(t);
  if (t.n() == 4 && t.d() == 2) v.hyperdeterminant = schlaefli_hyperdet(t);
  if (v.hyperdeterminant) v.semistable_hint = !is_zero(*v.hyperdeterminant);

  v.dim_v_eta = v_eta(t).dim();
  if (v.dim_v_eta != t.d()) {
    v.status = Status::RankDeficient;
    return v;
  }

  const VarietyModel model = equations_of_Y(t);
  v.projections = detail::curve_projections(model);
  const bool exact = !v.projections.empty();
  bool exact_singular = false;
  for (const auto& pr : v.projections) exact_singular = exact_singular || pr.invariants.j.is_singular();

  if (exact && !exact_singular) {
    for (const auto& pr : v.projections)
      if (!(pr.invariants.j == v.projections.front().invariants.j))
        throw std::logic_error("projections of one smooth model disagree on j");
    v.j = v.projections.front().invariants.j;
  } else if (exact) {
    v.j = JInvariant::singular();
  }

  for (auto p : primes) {
    if (exact && !exact_singular) {
      bool good = true;
      for (const auto& pr : v.projections) good = good && is_unit_mod(pr.invariants.discriminant, p);
      if (!good) {
        PrimeSweep s;
        s.p = p;
        s.status = PrimeSweep::Status::BadReduction;
        s.note = "projected curve has bad reduction";
        v.sweeps.push_back(std::move(s));
        continue;
      }
    }
    v.sweeps.push_back(sweep_prime(t, p));
  }

  const auto used = v.primes_used();
  std::size_t singular_primes = 0;
  for (const auto& s : v.sweeps) singular_primes += s.witness ? 1 : 0;

  if (exact) {
    v.status = exact_singular ? Status::SingularModel : Status::SmoothGeneric;
    v.fp_evidence_conflict = !exact_singular && singular_primes > 0;
    if (exact_singular && singular_primes == 0) v.notes.push_back("no F_p-rational singular point among primes used");
  } else {
    if (used.empty()) v.notes.push_back("no prime could be checked; status rests on no evidence");
    v.status = !used.empty() && singular_primes == used.size() ? Status::SingularModel : Status::SmoothGeneric;
    if (singular_primes > 0 && singular_primes < used.size())
      v.notes.push_back("singular points at some primes only; treated as bad reduction");
  }
  return v;
}

struct Comparison {
  enum class Outcome { DistinctCertified, ConsistentUnknown, BothDegenerate };

  Outcome outcome = Outcome::ConsistentUnknown;
  std::string details;
  Verdict a;
  Verdict b;
};

inline const char* to_string(Comparison::Outcome o) {
  switch (o) {
    case Comparison::Outcome::DistinctCertified: return "DistinctCertified";
    case Comparison::Outcome::ConsistentUnknown: return "ConsistentUnknown";
    case Comparison::Outcome::BothDegenerate: return "BothDegenerate";
  }
  return "?";
}

/// Necessary conditions for SLOCC equivalence. Never certifies equivalence:
/// equal j leaves the line-bundle data unchecked.
inline Comparison slocc_compare(const Tensor& a, const Tensor& b,
                                const std::vector<std::uint32_t>& primes = default_primes()) {
  if (a.n() != b.n() || a.d() != b.d()) throw FormatMismatch("states have different (n, d)");
  Comparison c;
  c.a = classify(a, primes);
  c.b = classify(b, primes);
  const bool both_exact = c.a.exact() && c.b.exact();
  if (c.a.status != c.b.status) {
    if (both_exact) {
      c.outcome = Comparison::Outcome::DistinctCertified;
      c.details = std::string("statuses differ: ") + to_string(c.a.status) + " vs " + to_string(c.b.status);
    } else {
      c.outcome = Comparison::Outcome::ConsistentUnknown;
      c.details = "statuses differ but rest on finite-field sampling only";
    }
  } else if (c.a.status == Status::SmoothGeneric) {
    if (c.a.j && c.b.j && !(*c.a.j == *c.b.j)) {
      c.outcome = Comparison::Outcome::DistinctCertified;
      c.details = "j-invariants differ";
    } else {
      c.outcome = Comparison::Outcome::ConsistentUnknown;
      c.details = c.a.j ? "equal j-invariants; line-bundle data not compared" : "no exact invariant separates the states";
    }
  } else {
    c.outcome = Comparison::Outcome::BothDegenerate;
    c.details = std::string("both ") + to_string(c.a.status);
  }
  return c;
}

inline nlohmann::ordered_json to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["status"] = to_string(v.status);
  j["j"] = v.j ? v.j->to_json() : nlohmann::ordered_json(nullptr);
  auto projections = nlohmann::ordered_json::array();
  for (const auto& p : v.projections) {
    nlohmann::ordered_json e;
    e["kept_axes"] = p.kept_axes;
    const auto inv = p.invariants.to_json();
    for (auto it = inv.begin(); it != inv.end(); ++it) e[it.key()] = it.value();
    projections.push_back(std::move(e));
  }
  j["projections"] = std::move(projections);
  j["hyperdeterminant"] = v.hyperdeterminant ? nlohmann::ordered_json(to_string(*v.hyperdeterminant)) : nlohmann::ordered_json(nullptr);
  j["semistable_hint"] = v.semistable_hint ? nlohmann::ordered_json(*v.semistable_hint) : nlohmann::ordered_json(nullptr);
  j["primes_used"] = v.primes_used();
  j["format"] = {v.n, v.d};
  j["dim_v_eta"] = v.dim_v_eta;
  auto sweeps = nlohmann::ordered_json::array();
  for (const auto& s : v.sweeps) sweeps.push_back(to_json(s));
  j["sweeps"] = std::move(sweeps);
  j["fp_evidence_conflict"] = v.fp_evidence_conflict;
  j["notes"] = v.notes;
  return j;
}

inline nlohmann::ordered_json to_json(const Comparison& c) {
  nlohmann::ordered_json j;
  j["outcome"] = to_string(c.outcome);
  j["details"] = c.details;
  j["a"] = to_json(c.a);
  j["b"] = to_json(c.b);
  return j;
}

}  // namespace slocc
