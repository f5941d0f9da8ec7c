#pragma once

#include "charid/char_identity.hpp"
#include "charid/super_glmn.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace charid {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// gl(n) when `super` is false (rank stored in m), gl(m|n) otherwise.
struct Algebra {
  std::size_t m = 1;
  std::size_t n = 0;
  bool super = false;

  std::size_t rank() const noexcept { return m; }
  std::string to_string() const;  // "gl(3)", "gl(2|1)"
  friend bool operator==(const Algebra&, const Algebra&) = default;
};

/// Accepts "gl3", "gl(3)", "gl2|1", "gl(2|1)".
Algebra parse_algebra(std::string_view text);

enum class Command { Rep, Verify, Roots, Classify, Compose };

const char* to_string(Command c);
Command parse_command(std::string_view text);

/// Negative-control knobs. All off by default.
struct Perturbation {
  double root_shift = 0.0;   // added to the first characteristic root (and alpha_{1,n+1})
  bool flip_sign = false;    // pi(a_{1n}) -> -pi(a_{1n}) before any check
  bool drop_parity = false;  // ungraded brackets and unsigned super matrices
  bool active() const noexcept { return root_shift != 0.0 || flip_sign || drop_parity; }
  friend bool operator==(const Perturbation&, const Perturbation&) = default;
};

struct JobSpec {
  Command command = Command::Verify;
  Algebra algebra;
  std::vector<Rational> even;  // all labels for gl(n)
  std::vector<Rational> odd;   // odd labels for gl(m|n)
  CharKind kind = CharKind::A;
  std::optional<HighestWeight> mu;  // for kind General
  std::string suite;
  std::string output;
  std::string format = "json";
  Tolerance tolerance;
  Perturbation perturbation;
  Rational gamma = 0;  // compose only
  Rational omega = 0;
  bool timing = false;

  /// Weight as typed on the command line: "2,1,0" or "1,0|0".
  std::string weight_text() const;
  HighestWeight highest_weight() const;  // gl(n) only, validated
  SuperWeight super_weight() const;      // gl(m|n) only, dominant per block

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

/// Parses the weight for the given algebra, validating counts and dominance.
void set_weight(JobSpec& spec, std::string_view text);

/// Throws DomainError / InvalidArgument-coded Error on anything that cannot run.
void validate(const JobSpec& spec);

Json to_json(const JobSpec& spec);
JobSpec job_from_json(const Json& j);

struct CheckRecord {
  std::string description;
  bool exact = false;       // exact (rational or integer) comparison; residual unused
  double residual = 0.0;
  double threshold = 0.0;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  Algebra algebra;
  std::string weight;
  Tolerance tolerance;
  std::vector<CheckRecord> checks;
  double duration_seconds = 0.0;

  bool passed() const;
  std::size_t failed() const;
  double max_residual() const;
};

Json to_json(const VerificationReport& report, bool include_timing);

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "identity", "projectors", "invariants", "melcross", "super"};
  return names;
}

/// Runs spec.suite. Throws Error(InvalidArgument) for an unknown suite.
VerificationReport run_suite(const JobSpec& spec);

/// Representation export (basis, dimension, generator triplets).
Json rep_to_json(const GlRep& rep);
/// "generator,row,col,value" lines, 0-based indices.
std::string rep_to_csv(const GlRep& rep);

}  // namespace charid
