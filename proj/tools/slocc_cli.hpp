#pragma once

// Command-line front end. Kept in a header so tests can drive run() in-process.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "slocc/slocc.hpp"

namespace slocc::cli {

enum ExitCode : int { kOk = 0, kDegenerate = 1, kUsage = 2 };

/// Usage and IO failures; mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::uint32_t> primes = default_primes();
  std::size_t k_max = 0;  // 0: format default
  std::uint64_t seed = 1;
  long long bound = 5;
  std::size_t n = 0;
  std::size_t d = 0;
  std::string out_path;
  bool strict = false;
  bool pretty = false;
  std::vector<std::string> files;
};

inline std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("--primes expects a comma-separated list of integers");
    const auto v = std::stoull(tok);
    if (v > 0xffffffffULL || v == 2 || !is_prime(v)) throw UsageError("--primes: " + tok + " is not an odd prime");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (out.empty()) throw UsageError("--primes must not be empty");
  return out;
}

struct LoadedState {
  Tensor tensor;
  std::string hash;
};

inline LoadedState load_state(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Tensor t = parse_state(buf.str());
  std::string h = state_hash(t);
  return {std::move(t), std::move(h)};
}

inline nlohmann::ordered_json envelope(const std::string& verb, const std::string& input_hash) {
  nlohmann::ordered_json doc;
  doc["command"] = verb;
  doc["tool_version"] = kVersion;
  doc["input_hash"] = input_hash;
  return doc;
}

inline void merge(nlohmann::ordered_json& doc, const nlohmann::ordered_json& body) {
  for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
}

inline nlohmann::ordered_json format_json(const Tensor& t) { return {t.n(), t.d()}; }

/// Per-prime runs that may legitimately fail at small or bad primes.
template <class F>
nlohmann::ordered_json per_prime(const std::vector<std::uint32_t>& primes, F&& body) {
  nlohmann::ordered_json runs = nlohmann::ordered_json::array();
  for (auto p : detail::sorted_unique(primes)) {
    nlohmann::ordered_json entry;
    entry["p"] = p;
    try {
      merge(entry, body(p));
      entry["status"] = "ok";
    } catch (const BadReduction& e) {
      entry["status"] = "bad_reduction";
      entry["note"] = e.what();
    } catch (const InsufficientPoints& e) {
      entry["status"] = "insufficient_points";
      entry["note"] = e.what();
    }
    runs.push_back(std::move(entry));
  }
  return runs;
}

struct Outcome {
  nlohmann::ordered_json report;
  bool degenerate = false;
};

/// Pipelines that need dim V_eta = d report a rank-deficient input as a verdict.
inline std::optional<Outcome> rank_deficient(const std::string& verb, const LoadedState& s) {
  const auto dim = v_eta(s.tensor).dim();
  if (dim == s.tensor.d()) return std::nullopt;
  auto doc = envelope(verb, s.hash);
  doc["status"] = to_string(Status::RankDeficient);
  doc["dim_v_eta"] = dim;
  doc["format"] = format_json(s.tensor);
  return Outcome{doc, true};
}

inline Outcome cmd_classify(const Options& o) {
  const auto s = load_state(o.files.at(0));
  const Verdict v = classify(s.tensor, o.primes);
  auto doc = envelope("classify", s.hash);
  merge(doc, to_json(v));
  return {doc, v.status != Status::SmoothGeneric};
}

inline Outcome cmd_jinv(const Options& o) {
  const auto s = load_state(o.files.at(0));
  if (!((s.tensor.n() == 3 && s.tensor.d() == 3) || (s.tensor.n() == 4 && s.tensor.d() == 2)))
    throw UnsupportedFormat("jinv supports formats (3,3) and (4,2)");
  const Verdict v = classify(s.tensor, {});
  auto doc = envelope("jinv", s.hash);
  doc["status"] = to_string(v.status);
  doc["j"] = v.j ? v.j->to_json() : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json projections = nlohmann::ordered_json::array();
  for (const auto& pr : v.projections) {
    nlohmann::ordered_json e;
    e["kept_axes"] = pr.kept_axes;
    e["j"] = pr.invariants.j.to_json();
    projections.push_back(std::move(e));
  }
  doc["projections"] = std::move(projections);
  doc["format"] = format_json(s.tensor);
  return {doc, v.status != Status::SmoothGeneric};
}

inline Outcome cmd_equiv(const Options& o) {
  if (o.files.size() != 2) throw UsageError("equiv needs exactly two state files");
  const auto a = load_state(o.files[0]);
  const auto b = load_state(o.files[1]);
  const Comparison c = slocc_compare(a.tensor, b.tensor, o.primes);
  auto doc = envelope("equiv", fnv1a_hex(a.hash + ":" + b.hash));
  merge(doc, to_json(c));
  return {doc, c.outcome == Comparison::Outcome::BothDegenerate};
}

inline Outcome cmd_hyperdet(const Options& o) {
  const auto s = load_state(o.files.at(0));
  Rational h;
  const char* kind = nullptr;
  if (s.tensor.n() == 3 && s.tensor.d() == 2) {
    h = cayley_hyperdet(s.tensor);
    kind = "Cayley";
  } else if (s.tensor.n() == 4 && s.tensor.d() == 2) {
    h = schlaefli_hyperdet(s.tensor);
    kind = "Schlaefli";
  } else {
    throw WrongFormat("hyperdet supports formats (3,2) and (4,2)");
  }
  auto doc = envelope("hyperdet", s.hash);
  doc["kind"] = kind;
  doc["hyperdeterminant"] = to_string(h);
  doc["semistable_hint"] = !is_zero(h);
  doc["format"] = format_json(s.tensor);
  return {doc, is_zero(h)};
}

inline Outcome cmd_smoothness(const Options& o) {
  const auto s = load_state(o.files.at(0));
  if (auto r = rank_deficient("smoothness", s)) return *r;
  const SmoothnessReport r = smoothness_witness(s.tensor, o.primes);
  auto doc = envelope("smoothness", s.hash);
  merge(doc, to_json(r));
  return {doc, r.verdict == SmoothnessReport::Verdict::SingularFound};
}

inline Outcome cmd_hilbert(const Options& o) {
  const auto s = load_state(o.files.at(0));
  if (auto r = rank_deficient("hilbert", s)) return *r;
  const bool quadratic = s.tensor.n() == 3 && s.tensor.d() == 3;
  if (!quadratic && !(s.tensor.n() == 4 && s.tensor.d() == 2))
    throw UnsupportedFormat("hilbert supports formats (3,3) and (4,2)");
  const std::size_t k_max = o.k_max ? o.k_max : (quadratic ? 4 : 5);
  // Primes where a projected curve degenerates are skipped, as in classify.
  std::set<std::uint32_t> bad;
  for (const auto& sw : classify(s.tensor, o.primes).sweeps)
    if (sw.status == PrimeSweep::Status::BadReduction) bad.insert(sw.p);
  bool mismatch = false;
  auto runs = per_prime(o.primes, [&](std::uint32_t p) {
    if (bad.count(p)) throw BadReduction(p, "projected curve has bad reduction");
    const auto h = quadratic ? quadratic_hilbert(s.tensor, p, k_max) : cubic_hilbert(s.tensor, p, k_max);
    mismatch = mismatch || !h.matches();
    return to_json(h);
  });
  auto doc = envelope("hilbert", s.hash);
  doc["k_max"] = k_max;
  doc["runs"] = std::move(runs);
  return {doc, mismatch};
}

inline Outcome cmd_roundtrip(const Options& o) {
  const auto s = load_state(o.files.at(0));
  if (auto r = rank_deficient("roundtrip", s)) return *r;
  bool failed = false;
  auto runs = per_prime(o.primes, [&](std::uint32_t p) {
    const bool ok = roundtrip_check(s.tensor, p);
    failed = failed || !ok;
    return nlohmann::ordered_json{{"recovered", ok}};
  });
  auto doc = envelope("roundtrip", s.hash);
  doc["runs"] = std::move(runs);
  return {doc, failed};
}

inline void require_format(const Options& o, const char* verb) {
  if (o.n < 2 || o.d < 2) throw UsageError(std::string(verb) + " needs --n and --d, both >= 2");
}

/// Returns the canonical state file itself rather than a report.
inline std::string cmd_sample(const Options& o) {
  require_format(o, "sample");
  if (o.bound < 1) throw UsageError("--bound must be >= 1");
  return serialize_state(random_state(o.n, o.d, o.bound, o.seed));
}

inline Outcome cmd_moduli_dim(const Options& o) {
  require_format(o, "moduli-dim");
  auto doc = envelope("moduli-dim", fnv1a_hex("n=" + std::to_string(o.n) + ";d=" + std::to_string(o.d)));
  doc["dimension"] = moduli_dimension(static_cast<long long>(o.n), static_cast<long long>(o.d));
  doc["h0"] = h0_check(o.n, o.d);
  return {doc, false};
}

/// Plain key/value table; the status-like fields are coloured unless NO_COLOR is set.
inline std::string pretty_table(const nlohmann::ordered_json& doc) {
  const char* no_color = std::getenv("NO_COLOR");
  const bool color = no_color == nullptr || *no_color == '\0';
  std::size_t width = 0;
  for (auto it = doc.begin(); it != doc.end(); ++it) width = std::max(width, it.key().size());
  std::ostringstream os;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    std::string value = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
    if (color && (it.key() == "status" || it.key() == "verdict" || it.key() == "outcome"))
      value = "\x1b[1m" + value + "\x1b[0m";
    os << it.key() << std::string(width - it.key().size() + 2, ' ') << value << '\n';
  }
  return os.str();
}

inline void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write " + o.out_path);
  f << text;
  if (!f) throw UsageError("write failed: " + o.out_path);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SLOCC classes of multi-qudit states via their Calabi-Yau models", "slocc"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kVersion);

  Options o;
  std::string primes_text;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--primes", primes_text, "comma-separated odd primes");
    sub->add_option("--out", o.out_path, "write the report to this file");
    sub->add_flag("--strict", o.strict, "exit 1 on degenerate verdicts");
    sub->add_flag("--pretty", o.pretty, "text table instead of JSON");
  };
  const auto add_file = [&](CLI::App* sub, std::size_t count) {
    sub->add_option("files", o.files, "state file(s)")->required()->expected(static_cast<int>(count));
  };

  auto* classify_cmd = app.add_subcommand("classify", "verdict, j-invariant and finite-field evidence");
  auto* jinv_cmd = app.add_subcommand("jinv", "j-invariant of the determinantal projections");
  auto* equiv_cmd = app.add_subcommand("equiv", "compare two states");
  auto* hyper_cmd = app.add_subcommand("hyperdet", "Cayley or Schlaefli hyperdeterminant");
  auto* smooth_cmd = app.add_subcommand("smoothness", "finite-field singular-point search");
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function of the associated algebra");
  auto* round_cmd = app.add_subcommand("roundtrip", "recover V_eta from points of Y_eta");
  auto* sample_cmd = app.add_subcommand("sample", "write a random canonical state file");
  auto* moduli_cmd = app.add_subcommand("moduli-dim", "expected moduli dimension for a format");

  for (auto* sub : {classify_cmd, jinv_cmd, hyper_cmd, smooth_cmd, hilbert_cmd, round_cmd}) {
    add_common(sub);
    add_file(sub, 1);
  }
  add_common(equiv_cmd);
  add_file(equiv_cmd, 2);
  hilbert_cmd->add_option("--k-max", o.k_max, "largest degree")->check(CLI::Range(1, 12));
  for (auto* sub : {sample_cmd, moduli_cmd}) {
    sub->add_option("--n", o.n, "number of parties")->required();
    sub->add_option("--d", o.d, "local dimension")->required();
    sub->add_option("--out", o.out_path, "write the output to this file");
    sub->add_flag("--pretty", o.pretty, "text table instead of JSON");
    sub->add_flag("--strict", o.strict, "accepted for uniformity");
  }
  sample_cmd->add_option("--seed", o.seed, "RNG seed");
  sample_cmd->add_option("--bound", o.bound, "coefficients are drawn from [-bound, bound]");

  std::vector<const char*> argv{"slocc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!primes_text.empty()) o.primes = parse_primes(primes_text);
    if (sample_cmd->parsed()) {
      emit(o, cmd_sample(o), out);
      return kOk;
    }
    Outcome r;
    if (classify_cmd->parsed()) r = cmd_classify(o);
    else if (jinv_cmd->parsed()) r = cmd_jinv(o);
    else if (equiv_cmd->parsed()) r = cmd_equiv(o);
    else if (hyper_cmd->parsed()) r = cmd_hyperdet(o);
    else if (smooth_cmd->parsed()) r = cmd_smoothness(o);
    else if (hilbert_cmd->parsed()) r = cmd_hilbert(o);
    else if (round_cmd->parsed()) r = cmd_roundtrip(o);
    else r = cmd_moduli_dim(o);
    emit(o, o.pretty ? pretty_table(r.report) : r.report.dump(2) + "\n", out);
    return o.strict && r.degenerate ? kDegenerate : kOk;
  } catch (const UsageError& e) {
    err << "slocc: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    err << "slocc: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace slocc::cli
