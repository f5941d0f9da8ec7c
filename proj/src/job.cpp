#include "charid/job.hpp"

#include "charid/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace charid {

namespace {

std::size_t parse_count(std::string_view s, std::string_view whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error(ErrorCode::InvalidArgument, "cannot parse algebra '" + std::string(whole) + "'");
  std::size_t v = 0;
  for (char c : s) v = v * 10 + static_cast<std::size_t>(c - '0');
  return v;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

Json rationals_to_json(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(parse_rational(x.get<std::string>()));
  return out;
}

const char* generator_kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Diagonal: return "diagonal";
    case GeneratorKind::Raising: return "raising";
    case GeneratorKind::Lowering: return "lowering";
    case GeneratorKind::NonelementaryRaising: return "nonelementary-raising";
    case GeneratorKind::NonelementaryLowering: return "nonelementary-lowering";
  }
  return "?";
}

}  // namespace

std::string Algebra::to_string() const {
  return super ? "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")" : "gl(" + std::to_string(m) + ")";
}

Algebra parse_algebra(std::string_view text) {
  std::string s = trim(text);
  if (s.size() < 3 || (s.compare(0, 2, "gl") != 0 && s.compare(0, 2, "GL") != 0))
    throw Error(ErrorCode::InvalidArgument, "cannot parse algebra '" + s + "' (expected gl3, gl(3), gl2|1 or gl(2|1))");
  std::string body = s.substr(2);
  if (body.front() == '(') {
    if (body.back() != ')') throw Error(ErrorCode::InvalidArgument, "unbalanced parentheses in algebra '" + s + "'");
    body = body.substr(1, body.size() - 2);
  }
  Algebra a;
  if (auto bar = body.find('|'); bar != std::string::npos) {
    a.super = true;
    a.m = parse_count(body.substr(0, bar), s);
    a.n = parse_count(body.substr(bar + 1), s);
    if (a.m == 0 || a.n == 0) throw DomainError("gl(m|n) needs m, n >= 1");
  } else {
    a.m = parse_count(body, s);
    if (a.m == 0) throw DomainError("gl(n) needs n >= 1");
  }
  return a;
}

const char* to_string(Command c) {
  switch (c) {
    case Command::Rep: return "rep";
    case Command::Verify: return "verify";
    case Command::Roots: return "roots";
    case Command::Classify: return "classify";
    case Command::Compose: return "compose";
  }
  return "?";
}

Command parse_command(std::string_view text) {
  for (Command c : {Command::Rep, Command::Verify, Command::Roots, Command::Classify, Command::Compose})
    if (text == to_string(c)) return c;
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + std::string(text) + "'");
}

std::string JobSpec::weight_text() const {
  std::string s = join(even, ",");
  if (algebra.super) s += "|" + join(odd, ",");
  return s;
}

HighestWeight JobSpec::highest_weight() const {
  if (algebra.super) throw DomainError("algebra " + algebra.to_string() + " has no gl(n) highest weight");
  HighestWeight w{even};
  if (w.rank() != algebra.rank())
    throw DomainError("gl(" + std::to_string(algebra.rank()) + ") weight needs " + std::to_string(algebra.rank()) +
                      " labels, got " + std::to_string(w.rank()));
  w.require_integral_dominant();
  return w;
}

SuperWeight JobSpec::super_weight() const {
  if (!algebra.super) throw DomainError("algebra " + algebra.to_string() + " is not a superalgebra");
  SuperWeight w{even, odd};
  if (w.m() != algebra.m || w.n() != algebra.n)
    throw DomainError("weight " + w.to_string() + " does not match " + algebra.to_string());
  if (!w.is_dominant()) throw DomainError("super weight " + w.to_string() + " is not dominant per block");
  return w;
}

void set_weight(JobSpec& spec, std::string_view text) {
  if (spec.algebra.super) {
    SuperWeight w = parse_super_weight(text, spec.algebra.m, spec.algebra.n);
    spec.even = std::move(w.even);
    spec.odd = std::move(w.odd);
  } else {
    if (text.find('|') != std::string_view::npos) throw DomainError("'|' is only valid in gl(m|n) weights");
    spec.even = parse_rational_list(text);
    spec.odd.clear();
  }
}

void validate(const JobSpec& spec) {
  spec.tolerance.validate();
  if (spec.format != "json" && spec.format != "csv")
    throw Error(ErrorCode::InvalidArgument, "format must be json or csv");
  if (spec.command == Command::Compose) {
    if (!spec.algebra.super) throw DomainError("compose needs a gl(m|n) algebra");
    (void)spec.super_weight();
    return;
  }
  if (spec.algebra.super) {
    (void)spec.super_weight();
    if (spec.command == Command::Rep) throw DomainError("rep builds gl(n) irreps only; gl(m|n) has the vector rep via verify --suite super");
    if (spec.kind == CharKind::General) throw DomainError("kind General is defined for gl(n) only");
  } else {
    (void)spec.highest_weight();
    if (spec.command == Command::Classify) throw DomainError("classify needs a gl(m|n) algebra");
    if (spec.kind == CharKind::General) {
      if (!spec.mu) throw DomainError("kind General needs --mu");
      if (spec.mu->rank() != spec.algebra.rank()) throw DomainError("mu must have the same rank as the algebra");
      spec.mu->require_integral_dominant();
    }
  }
  if (spec.command == Command::Verify &&
      std::find(suite_names().begin(), suite_names().end(), spec.suite) == suite_names().end())
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + spec.suite + "'");
}

Json to_json(const JobSpec& spec) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = to_string(spec.command);
  j["algebra"] = spec.algebra.to_string();
  j["weight"] = spec.weight_text();
  j["kind"] = to_string(spec.kind);
  j["mu"] = spec.mu ? Json(rationals_to_json(spec.mu->labels)) : Json(nullptr);
  j["suite"] = spec.suite;
  j["output"] = spec.output;
  j["format"] = spec.format;
  j["tolerance"] = {{"abs", spec.tolerance.abs_eps}, {"rel", spec.tolerance.rel_eps}};
  j["perturbation"] = {{"root_shift", spec.perturbation.root_shift},
                       {"flip_sign", spec.perturbation.flip_sign},
                       {"drop_parity", spec.perturbation.drop_parity}};
  j["gamma"] = to_string(spec.gamma);
  j["omega"] = to_string(spec.omega);
  j["timing"] = spec.timing;
  return j;
}

JobSpec job_from_json(const Json& j) {
  try {
    if (j.at("schema").get<int>() != kSchemaVersion) throw Error(ErrorCode::InvalidArgument, "unsupported schema version");
    JobSpec s;
    s.command = parse_command(j.at("command").get<std::string>());
    s.algebra = parse_algebra(j.at("algebra").get<std::string>());
    set_weight(s, j.at("weight").get<std::string>());
    s.kind = parse_char_kind(j.at("kind").get<std::string>());
    if (!j.at("mu").is_null()) s.mu = HighestWeight{rationals_from_json(j.at("mu"))};
    s.suite = j.at("suite").get<std::string>();
    s.output = j.at("output").get<std::string>();
    s.format = j.at("format").get<std::string>();
    s.tolerance.abs_eps = j.at("tolerance").at("abs").get<double>();
    s.tolerance.rel_eps = j.at("tolerance").at("rel").get<double>();
    s.perturbation.root_shift = j.at("perturbation").at("root_shift").get<double>();
    s.perturbation.flip_sign = j.at("perturbation").at("flip_sign").get<bool>();
    s.perturbation.drop_parity = j.at("perturbation").at("drop_parity").get<bool>();
    s.gamma = parse_rational(j.at("gamma").get<std::string>());
    s.omega = parse_rational(j.at("omega").get<std::string>());
    s.timing = j.at("timing").get<bool>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed job JSON: ") + e.what());
  }
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
}

std::size_t VerificationReport::failed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.passed; }));
}

double VerificationReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks)
    if (!c.exact) m = std::max(m, c.residual);
  return m;
}

Json to_json(const VerificationReport& r, bool include_timing) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["suite"] = r.suite;
  j["algebra"] = r.algebra.to_string();
  j["weight"] = r.weight;
  j["tolerance"] = {{"abs", r.tolerance.abs_eps}, {"rel", r.tolerance.rel_eps}};
  j["passed"] = r.passed();
  j["summary"] = {{"checks", r.checks.size()},
                  {"passed", r.checks.size() - r.failed()},
                  {"failed", r.failed()},
                  {"max_residual", r.max_residual()}};
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["description"] = c.description;
    cj["exact"] = c.exact;
    if (!c.exact) {
      cj["residual"] = c.residual;
      cj["threshold"] = c.threshold;
    }
    cj["passed"] = c.passed;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  if (include_timing) j["duration_seconds"] = r.duration_seconds;
  return j;
}

Json rep_to_json(const GlRep& rep) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["algebra"] = "gl(" + std::to_string(rep.rank()) + ")";
  j["weight"] = rationals_to_json(rep.weight().labels);
  j["dimension"] = rep.dim();
  Json basis = Json::array();
  for (std::size_t s = 0; s < rep.dim(); ++s) {
    const GTPattern& p = rep.basis()[s];
    Json rows = Json::array();
    for (const auto& row : p.rows()) rows.push_back(rationals_to_json(row));
    basis.push_back({{"ordinal", s}, {"pattern", std::move(rows)}, {"weight", rationals_to_json(pattern_weight(p))}});
  }
  j["basis"] = std::move(basis);
  Json gens = Json::array();
  for (std::size_t i = 1; i <= rep.rank(); ++i)
    for (std::size_t k = 1; k <= rep.rank(); ++k) {
      const RepMatrix& g = rep.generator(i, k);
      Json entries = Json::array();
      if (!g.exact.empty() || g.kind == GeneratorKind::Diagonal || g.kind == GeneratorKind::Raising ||
          g.kind == GeneratorKind::Lowering) {
        auto exact = g.exact;
        std::sort(exact.begin(), exact.end(),
                  [](const ExactEntry& a, const ExactEntry& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
        for (const auto& e : exact) entries.push_back(Json::array({e.row, e.col, e.value.to_string()}));
      } else {
        for (std::size_t a = 0; a < g.entries.rows(); ++a)
          for (std::size_t b = 0; b < g.entries.cols(); ++b)
            if (g.entries(a, b) != 0.0) entries.push_back(Json::array({a, b, g.entries(a, b)}));
      }
      gens.push_back({{"name", "a_" + std::to_string(i) + "_" + std::to_string(k)},
                      {"i", i},
                      {"j", k},
                      {"kind", generator_kind_name(g.kind)},
                      {"exact", g.kind == GeneratorKind::Diagonal || g.kind == GeneratorKind::Raising ||
                                    g.kind == GeneratorKind::Lowering},
                      {"entries", std::move(entries)}});
    }
  j["generators"] = std::move(gens);
  return j;
}

std::string rep_to_csv(const GlRep& rep) {
  std::ostringstream os;
  os << "generator,row,col,value\n";
  const Json j = rep_to_json(rep);
  for (const auto& g : j["generators"])
    for (const auto& e : g["entries"]) {
      os << g["name"].get<std::string>() << ',' << e[0].get<std::size_t>() << ',' << e[1].get<std::size_t>() << ',';
      if (e[2].is_string())
        os << e[2].get<std::string>();
      else
        os << e[2].dump();
      os << '\n';
    }
  return os.str();
}

}  // namespace charid
