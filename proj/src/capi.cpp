#include "charid/charid.h"

#include "charid/error.hpp"
#include "charid/job.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

struct charid_job {
  charid::JobSpec spec;
};

struct charid_report {
  charid::VerificationReport report;
  bool timing = false;
};

namespace {

thread_local std::string g_last_error;

charid_status status_of(charid::ErrorCode c) {
  switch (c) {
    case charid::ErrorCode::InvalidArgument: return CHARID_ERR_INVALID_ARGUMENT;
    case charid::ErrorCode::Domain: return CHARID_ERR_DOMAIN;
    case charid::ErrorCode::Dimension: return CHARID_ERR_DIMENSION;
    case charid::ErrorCode::Degenerate: return CHARID_ERR_DEGENERATE;
    case charid::ErrorCode::Internal: return CHARID_ERR_INTERNAL;
    case charid::ErrorCode::Convention: return CHARID_ERR_CONVENTION;
    case charid::ErrorCode::Numeric: return CHARID_ERR_NUMERIC;
  }
  return CHARID_ERR_INTERNAL;
}

template <class F>
charid_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return CHARID_OK;
  } catch (const charid::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CHARID_ERR_OUT_OF_MEMORY;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return CHARID_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CHARID_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw charid::Error(charid::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Everything except command-specific checks, so one handle can serve several commands.
void check_weight(const charid::JobSpec& s) {
  if (s.algebra.super)
    (void)s.super_weight();
  else
    (void)s.highest_weight();
}

}  // namespace

extern "C" {

const char* charid_version(void) { return "0.1.0"; }

const char* charid_last_error(void) { return g_last_error.c_str(); }

void charid_string_free(char* s) { std::free(s); }

charid_status charid_job_create(const char* algebra, const char* weight, charid_job** out) {
  return guard([&] {
    require(algebra, "algebra");
    require(weight, "weight");
    require(out, "out");
    *out = nullptr;
    charid::JobSpec spec;
    spec.algebra = charid::parse_algebra(algebra);
    charid::set_weight(spec, weight);
    check_weight(spec);
    *out = new charid_job{std::move(spec)};
  });
}

charid_status charid_job_from_json(const char* json, charid_job** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = nullptr;
    charid::JobSpec spec = charid::job_from_json(charid::Json::parse(json));
    check_weight(spec);
    *out = new charid_job{std::move(spec)};
  });
}

void charid_job_destroy(charid_job* job) { delete job; }

charid_status charid_job_to_json(const charid_job* job, char** out) {
  return guard([&] {
    require(job, "job");
    require(out, "out");
    *out = dup(charid::to_json(job->spec).dump(2));
  });
}

charid_status charid_job_set_tolerance(charid_job* job, double abs_eps, double rel_eps) {
  return guard([&] {
    require(job, "job");
    charid::Tolerance t{abs_eps, rel_eps};
    t.validate();
    job->spec.tolerance = t;
  });
}

charid_status charid_job_set_kind(charid_job* job, const char* kind) {
  return guard([&] {
    require(job, "job");
    require(kind, "kind");
    job->spec.kind = charid::parse_char_kind(kind);
  });
}

charid_status charid_job_set_mu(charid_job* job, const char* mu) {
  return guard([&] {
    require(job, "job");
    require(mu, "mu");
    charid::HighestWeight w = charid::parse_highest_weight(mu);
    if (job->spec.algebra.super || w.rank() != job->spec.algebra.rank())
      throw charid::DomainError("mu must be a gl(" + std::to_string(job->spec.algebra.rank()) + ") weight");
    w.require_integral_dominant();
    job->spec.mu = std::move(w);
  });
}

charid_status charid_job_set_perturbation(charid_job* job, double root_shift, int flip_sign, int drop_parity) {
  return guard([&] {
    require(job, "job");
    if (!std::isfinite(root_shift)) throw charid::Error(charid::ErrorCode::InvalidArgument, "root shift must be finite");
    job->spec.perturbation = {root_shift, flip_sign != 0, drop_parity != 0};
  });
}

charid_status charid_job_set_timing(charid_job* job, int timing) {
  return guard([&] {
    require(job, "job");
    job->spec.timing = timing != 0;
  });
}

charid_status charid_rep_dimension(const charid_job* job, uint64_t* out) {
  return guard([&] {
    require(job, "job");
    require(out, "out");
    const charid::BigInt d = charid::dimension(job->spec.highest_weight());
    if (d > std::numeric_limits<uint64_t>::max()) throw charid::DimensionError("dimension exceeds 64 bits");
    *out = d.convert_to<uint64_t>();
  });
}

charid_status charid_rep_to_json(const charid_job* job, char** out) {
  return guard([&] {
    require(job, "job");
    require(out, "out");
    *out = dup(charid::rep_to_json(charid::GlRep(job->spec.highest_weight())).dump(2));
  });
}

charid_status charid_rep_to_csv(const charid_job* job, char** out) {
  return guard([&] {
    require(job, "job");
    require(out, "out");
    *out = dup(charid::rep_to_csv(charid::GlRep(job->spec.highest_weight())));
  });
}

charid_status charid_verify(const charid_job* job, const char* suite, charid_report** out) {
  return guard([&] {
    require(job, "job");
    require(suite, "suite");
    require(out, "out");
    *out = nullptr;
    charid::JobSpec spec = job->spec;
    spec.command = charid::Command::Verify;
    spec.suite = suite;
    auto* r = new charid_report{charid::run_suite(spec), spec.timing};
    *out = r;
  });
}

int charid_report_passed(const charid_report* report) { return report && report->report.passed() ? 1 : 0; }

double charid_report_duration(const charid_report* report) { return report ? report->report.duration_seconds : 0.0; }

charid_status charid_report_to_json(const charid_report* report, char** out) {
  return guard([&] {
    require(report, "report");
    require(out, "out");
    *out = dup(charid::to_json(report->report, report->timing).dump(2));
  });
}

void charid_report_destroy(charid_report* report) { delete report; }

charid_status charid_roots(const charid_job* job, char** out) {
  return guard([&] {
    require(job, "job");
    require(out, "out");
    const auto& s = job->spec;
    std::vector<charid::Rational> roots;
    if (s.algebra.super) {
      roots = charid::super_char_roots(s.super_weight(), s.kind);
    } else if (s.kind == charid::CharKind::General) {
      if (!s.mu) throw charid::DomainError("kind General needs mu");
      roots = charid::general_char_roots(s.highest_weight(), *s.mu).values();
    } else {
      roots = charid::char_roots(s.highest_weight(), s.kind).values();
    }
    *out = dup(charid::join(roots, ", "));
  });
}

charid_status charid_classify(const charid_job* job, char** out) {
  return guard([&] {
    require(job, "job");
    require(out, "out");
    const charid::StarClassification c = charid::classify_type1_star(job->spec.super_weight());
    std::string text = charid::to_string(c.verdict);
    if (c.witness) text += ", witness mu=" + std::to_string(*c.witness);
    *out = dup(text);
  });
}

charid_status charid_compose(const charid_job* job, const char* gamma, const char* omega, char** out) {
  return guard([&] {
    require(job, "job");
    require(gamma, "gamma");
    require(omega, "omega");
    require(out, "out");
    const charid::SuperWeight w = charid::compose_type1_weight(job->spec.super_weight(), charid::parse_rational(gamma),
                                                               charid::parse_rational(omega));
    *out = dup(w.to_string());
  });
}

}  // extern "C"
