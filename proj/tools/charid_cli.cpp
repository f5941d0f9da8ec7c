// Command-line front end. Talks to the library only through charid.h.
#include "charid/charid.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(charid_status s) {
  switch (s) {
    case CHARID_ERR_INVALID_ARGUMENT:
    case CHARID_ERR_DOMAIN:
    case CHARID_ERR_DIMENSION: return kExitUsage;
    default: return kExitFail;
  }
}

void check(charid_status s) {
  if (s != CHARID_OK) throw Failure{exit_code_for(s), charid_last_error()};
}

struct StringDeleter {
  void operator()(char* p) const { charid_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct JobDeleter {
  void operator()(charid_job* j) const { charid_job_destroy(j); }
};
using OwnedJob = std::unique_ptr<charid_job, JobDeleter>;

struct ReportDeleter {
  void operator()(charid_report* r) const { charid_report_destroy(r); }
};

struct Options {
  std::string algebra;
  std::string weight;
  std::optional<double> tolerance;
  std::string output;
  std::string format = "json";
  bool timing = false;
  std::string suite;
  std::string kind = "A";
  std::string mu;
  double perturb_root = 0.0;
  bool flip_sign = false;
  bool drop_parity = false;
  std::string gamma = "0";
  std::string omega = "0";
};

double default_tolerance() {
  const char* env = std::getenv("CHARID_TOLERANCE");
  if (!env || !*env) return 1e-9;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v >= 0.0))
    throw Failure{kExitUsage, std::string("CHARID_TOLERANCE is not a non-negative number: ") + env};
  return v;
}

OwnedJob make_job(const Options& o) {
  charid_job* raw = nullptr;
  check(charid_job_create(o.algebra.c_str(), o.weight.c_str(), &raw));
  OwnedJob job(raw);
  const double tol = o.tolerance ? *o.tolerance : default_tolerance();
  check(charid_job_set_tolerance(job.get(), tol, tol));
  check(charid_job_set_kind(job.get(), o.kind.c_str()));
  if (!o.mu.empty()) check(charid_job_set_mu(job.get(), o.mu.c_str()));
  check(charid_job_set_perturbation(job.get(), o.perturb_root, o.flip_sign ? 1 : 0, o.drop_parity ? 1 : 0));
  check(charid_job_set_timing(job.get(), o.timing ? 1 : 0));
  return job;
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw Failure{kExitUsage, "cannot open " + o.output + " for writing"};
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
}

int cmd_rep(const Options& o) {
  OwnedJob job = make_job(o);
  char* raw = nullptr;
  check(o.format == "csv" ? charid_rep_to_csv(job.get(), &raw) : charid_rep_to_json(job.get(), &raw));
  OwnedString s(raw);
  emit(o, s.get());
  return kExitPass;
}

int cmd_verify(const Options& o) {
  OwnedJob job = make_job(o);
  charid_report* raw = nullptr;
  check(charid_verify(job.get(), o.suite.c_str(), &raw));
  std::unique_ptr<charid_report, ReportDeleter> report(raw);
  char* json = nullptr;
  check(charid_report_to_json(report.get(), &json));
  OwnedString s(json);
  emit(o, s.get());
  const bool ok = charid_report_passed(report.get()) != 0;
  if (!o.output.empty()) std::cout << (ok ? "PASS " : "FAIL ") << o.suite << '\n';
  return ok ? kExitPass : kExitFail;
}

int cmd_text(const Options& o, charid_status (*fn)(const charid_job*, char**)) {
  OwnedJob job = make_job(o);
  char* raw = nullptr;
  check(fn(job.get(), &raw));
  OwnedString s(raw);
  emit(o, s.get());
  return kExitPass;
}

int cmd_compose(const Options& o) {
  OwnedJob job = make_job(o);
  char* raw = nullptr;
  check(charid_compose(job.get(), o.gamma.c_str(), o.omega.c_str(), &raw));
  OwnedString s(raw);
  emit(o, s.get());
  return kExitPass;
}

void common(CLI::App* sub, Options& o) {
  sub->add_option("--algebra,-a", o.algebra, "gl3, gl(3), gl2|1 or gl(2|1)")->required();
  sub->add_option("--weight,-w", o.weight, "comma list; super weights may use a|b, e.g. 1,0|0")->required();
  sub->add_option("--tolerance,-t", o.tolerance, "absolute and relative zero threshold (default 1e-9 or $CHARID_TOLERANCE)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--output,-o", o.output, "write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"charid: characteristic identities for gl(n) and gl(m|n)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(charid_version()));
  Options o;

  auto* rep = app.add_subcommand("rep", "build a gl(n) irrep on the Gelfand-Tsetlin basis and export it");
  common(rep, o);
  rep->add_option("--format,-f", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite; exit 0 pass, 1 fail");
  common(verify, o);
  verify->add_option("--suite,-s", o.suite, "relations, identity, projectors, invariants, melcross or super")->required();
  verify->add_option("--kind,-k", o.kind, "A, Abar or General (General needs --mu)");
  verify->add_option("--mu", o.mu, "auxiliary gl(n) weight for kind General");
  verify->add_flag("--timing", o.timing, "include wall-clock duration in the report");
  verify->add_option("--perturb-root", o.perturb_root, "negative control: shift the first root by this amount");
  verify->add_flag("--flip-sign", o.flip_sign, "negative control: negate pi(a_1n)");
  verify->add_flag("--drop-parity", o.drop_parity, "negative control: ignore gradings in the super suite");

  auto* roots = app.add_subcommand("roots", "print exact characteristic roots");
  common(roots, o);
  roots->add_option("--kind,-k", o.kind, "A, Abar or General (General needs --mu)");
  roots->add_option("--mu", o.mu, "auxiliary gl(n) weight for kind General");

  auto* classify = app.add_subcommand("classify", "type 1 star classification of a gl(m|n) weight");
  common(classify, o);

  auto* compose = app.add_subcommand("compose", "Lambda_0 + gamma eps + omega delta for covariant Lambda_0 = --weight");
  common(compose, o);
  compose->add_option("--gamma", o.gamma, "rational gamma");
  compose->add_option("--omega", o.omega, "rational omega");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (rep->parsed()) return cmd_rep(o);
    if (verify->parsed()) return cmd_verify(o);
    if (roots->parsed()) return cmd_text(o, charid_roots);
    if (classify->parsed()) return cmd_text(o, charid_classify);
    return cmd_compose(o);
  } catch (const Failure& f) {
    std::cerr << "charid: " << f.message << '\n';
    return f.exit_code;
  }
}
