// Acceptance runner: one PASS/FAIL line per criterion at its pinned threshold.
#include "charid/error.hpp"
#include "charid/job.hpp"
#include "helpers.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace charid;
using testing_helpers::small_weights;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream note;
};

int g_failures = 0;

void criterion(int id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.passed = false;
    o.note << " exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.passed) ++g_failures;
  std::printf("[%s] %2d %s:%s (%.2fs)\n", o.passed ? "PASS" : "FAIL", id, title, o.note.str().c_str(), secs);
  std::fflush(stdout);
}

// Every dominant weight with non-negative integer labels, lambda_1 <= 3, n <= 4, dim <= 500.
std::vector<HighestWeight> sweep() {
  std::vector<HighestWeight> out;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& l : small_weights(n, 3))
      if (dimension(l) <= 500) out.push_back(l);
  return out;
}

std::vector<HighestWeight> sweep_rank(std::size_t n) {
  std::vector<HighestWeight> out;
  for (const auto& l : sweep())
    if (l.rank() == n) out.push_back(l);
  return out;
}

double relations_residual(const GlRep& rep) {
  const std::size_t n = rep.rank();
  double worst = 0.0;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t l = 1; l <= n; ++l) {
          Matrix c = commutator(rep.matrix(i, j), rep.matrix(k, l));
          if (j == k) c -= rep.matrix(i, l);
          if (i == l) c += rep.matrix(k, j);
          worst = std::max(worst, c.max_abs());
        }
  return worst;
}

void check_max(Outcome& o, const char* what, double value, double limit) {
  o.note << ' ' << what << '=' << value << (value < limit ? " < " : " >= ") << limit << ';';
  if (!(value < limit)) o.passed = false;
}

void check_true(Outcome& o, const std::string& what, bool ok) {
  if (!ok) {
    o.passed = false;
    o.note << " FAILED " << what << ';';
  }
}

}  // namespace

int main() {
  const auto weights = sweep();
  std::printf("irrep sweep: %zu weights (n <= 4, 3 >= lambda_1 >= ... >= lambda_n >= 0, dim <= 500)\n", weights.size());

  criterion(1, "defining relations on the sweep", [&](Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const auto& l : weights) worst = std::max(worst, relations_residual(GlRep(l)));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    check_max(o, "max residual", worst, 1e-9);
    check_max(o, "seconds", secs, 60.0);
  });

  criterion(2, "gl(1) and gl(2) identities and Casimir dependencies", [&](Outcome& o) {
    std::vector<HighestWeight> g1;
    for (int k = -4; k <= 5; ++k) g1.push_back(HighestWeight{{k}});
    g1.push_back(HighestWeight{{Rational(7, 2)}});
    double worst = 0.0;
    for (const auto& l : g1) {
      const GlRep rep(l);
      worst = std::max(worst, verify_gl1_identity(rep, Tolerance{}).residual);
      const Rational s1 = casimir_sigma(rep, 1).value;
      check_true(o, "sigma_2 = sigma_1^2 on " + l.to_string(), casimir_sigma(rep, 2).value == s1 * s1);
    }
    std::vector<HighestWeight> g2;
    for (int a = -1; a <= 3; ++a)
      for (int b = -2; b <= a; ++b) g2.push_back(HighestWeight{{a, b}});
    g2.push_back(HighestWeight{{Rational(5, 2), Rational(1, 2)}});
    for (const auto& l : g2) {
      const GlRep rep(l);
      worst = std::max(worst, verify_gl2_identity(rep, Tolerance{}).residual);
      const Rational s1 = casimir_sigma(rep, 1).value, s2 = casimir_sigma(rep, 2).value, s3 = casimir_sigma(rep, 3).value;
      check_true(o, "gl(2) sigma_3 relation on " + l.to_string(),
                 s3 == Rational(3, 2) * s1 * s2 - Rational(1, 2) * s1 * s1 * s1 + s2 - Rational(1, 2) * s1 * s1);
    }
    o.note << " gl(1) irreps=" << g1.size() << ", gl(2) irreps=" << g2.size() << ';';
    check_max(o, "max residual", worst, 1e-10);
  });

  criterion(3, "characteristic identities for A and Abar on the sweep", [&](Outcome& o) {
    double worst = 0.0;
    for (const auto& l : weights) {
      const GlRep rep(l);
      for (CharKind k : {CharKind::A, CharKind::Abar})
        worst = std::max(worst, verify_identity(build_char_matrix(rep, k), char_roots(l, k), Tolerance{}).residual);
    }
    check_max(o, "max residual", worst, 1e-8);
  });

  criterion(4, "projector algebra and ranks on the sweep", [&](Outcome& o) {
    double worst = 0.0;
    std::size_t ranks = 0;
    for (const auto& l : weights) {
      const GlRep rep(l);
      for (CharKind k : {CharKind::A, CharKind::Abar}) {
        const CharMatrix cm = build_char_matrix(rep, k);
        const CharSpectrum s = char_roots(l, k);
        std::vector<Projector> ps;
        for (std::size_t r = 0; r < s.roots.size(); ++r) ps.push_back(build_projector(cm, s, r));
        const ProjectorAlgebra a = projector_algebra(ps);
        worst = std::max({worst, a.idempotency, a.orthogonality, a.completeness});
        for (std::size_t r = 0; r < ps.size(); ++r) {
          const BigInt expect = s.present(r) ? dimension(s.roots[r].constituents.front()) : BigInt(0);
          check_true(o, "rank of projector " + std::to_string(r + 1) + " on " + l.to_string(), BigInt(a.ranks[r]) == expect);
          ++ranks;
        }
      }
    }
    o.note << " ranks checked=" << ranks << ';';
    check_max(o, "max algebra residual", worst, 1e-8);
  });

  criterion(5, "invariant closed forms, gl(2) in gl(3) and gl(3) in gl(4)", [&](Outcome& o) {
    double worst = 0.0;
    std::size_t branches = 0;
    for (std::size_t n : {3u, 4u})
      for (const auto& l : sweep_rank(n)) {
        for (const auto& mu : branch(l)) {
          Rational sum = 0;
          for (std::size_t k = 1; k <= n; ++k) sum += invariant_C_eigenvalue(l, mu, k, InvariantKind::C);
          check_true(o, "sum C = 1 on " + l.to_string() + " / " + mu.to_string(), sum == 1);
          ++branches;
        }
        const GlRep rep(l);
        worst = std::max(worst, invariant_block_residual(rep, InvariantKind::Cbar, Tolerance{}));
        worst = std::max(worst, invariant_block_residual(rep, InvariantKind::C, Tolerance{}));
      }
    o.note << " branch subspaces=" << branches << ';';
    check_max(o, "max block residual", worst, 1e-8);
  });

  criterion(6, "shift-operator norms and exact squared elements", [&](Outcome& o) {
    double worst = 0.0;
    std::size_t exact = 0;
    for (const auto& l : weights) {
      if (l.rank() < 2) continue;
      const GlRep rep(l);
      for (std::size_t r = 1; r < l.rank(); ++r) {
        const auto nr = norm_identity_residuals(rep, r);
        worst = std::max({worst, nr.mbar, nr.m});
      }
      const ExactNormCheck ex = exact_norm_check(rep);
      check_true(o, "exact N^2 = M Cbar on " + l.to_string() + " (" + ex.first_mismatch + ")", ex.mismatches == 0);
      exact += ex.checked;
    }
    o.note << " exact coefficients=" << exact << ';';
    check_max(o, "max operator residual", worst, 1e-8);
  });

  criterion(7, "nonelementary coefficients vs commutators on gl(3), gl(4)", [&](Outcome& o) {
    double worst = 0.0;
    std::size_t entries = 0;
    for (std::size_t n : {3u, 4u})
      for (const auto& l : sweep_rank(n)) {
        const ElementCrossCheck cc = nonelementary_cross_check(GlRep(l));
        worst = std::max(worst, cc.max_gap);
        entries += cc.entries;
      }
    o.note << " entries=" << entries << ';';
    check_max(o, "max gap", worst, 1e-9);
  });

  criterion(8, "general characteristic matrix", [&](Outcome& o) {
    double worst = 0.0;
    for (const auto& l : weights) {
      const GlRep rep(l);
      const auto vec = vector_rep_matrices(l.rank());
      worst = std::max(worst, (build_general_char_matrix(vec, rep).big - build_char_matrix(rep, CharKind::Abar).big).max_abs());
      worst = std::max(worst, (build_general_char_matrix(contragredient(vec), rep).big -
                               build_char_matrix(rep, CharKind::A).big).max_abs());
    }
    check_max(o, "vector/dual reproduction", worst, 1e-10);
    double dist = 0.0;
    const HighestWeight mu{{2, 0, 0}};
    const auto mg = GlRep(mu).matrices();
    for (const auto& l : sweep_rank(3)) {
      const GlRep rep(l);
      const CharMatrix cm = build_general_char_matrix(mg, rep);
      dist = std::max(dist, observe_spectrum(cm, general_char_roots(l, mu), Tolerance{}).max_distance_to_candidates);
    }
    check_max(o, "mu=(2,0,0) spectrum distance", dist, 1e-8);
  });

  criterion(9, "gl(m|n) relations, identities and classifications", [&](Outcome& o) {
    double rel = 0.0, id = 0.0;
    std::size_t cases = 0;
    for (std::size_t m = 1; m <= 4; ++m)
      for (std::size_t n = 1; m + n <= 5; ++n) {
        rel = std::max(rel, graded_relation_residual(super_vector_rep(m, n), m, n));
        for (CharKind k : {CharKind::A, CharKind::Abar}) id = std::max(id, verify_super_identity(m, n, k).residual);
        ++cases;
      }
    o.note << " (m,n) cases=" << cases << ';';
    check_true(o, "graded relations exact", rel == 0.0);
    o.note << " graded relation residual=" << rel << ';';
    check_max(o, "identity residual", id, 1e-10);
    const auto a = classify_type1_star(parse_super_weight("2,1|3", 2, 1));
    const auto b = classify_type1_star(parse_super_weight("1,0|0", 2, 1));
    const auto c = classify_type1_star(parse_super_weight("0,0|0", 2, 1));
    check_true(o, "(2,1|3) typical", a.verdict == StarVerdict::TypicalType1);
    check_true(o, "(1,0|0) atypical mu=1", b.verdict == StarVerdict::AtypicalType1 && b.witness == 1u);
    check_true(o, "(0,0|0) atypical mu=1", c.verdict == StarVerdict::AtypicalType1 && c.witness == 1u);
  });

  criterion(10, "negative controls fail their suites", [&](Outcome& o) {
    std::size_t controls = 0;
    auto expect_fail = [&](const char* algebra, const char* weight, const char* suite, Perturbation p) {
      JobSpec s;
      s.algebra = parse_algebra(algebra);
      set_weight(s, weight);
      s.suite = suite;
      const bool clean = run_suite(s).passed();
      s.perturbation = p;
      const bool perturbed = run_suite(s).passed();
      check_true(o, std::string(suite) + " control on " + algebra + " " + weight, clean && !perturbed);
      ++controls;
    };
    const std::pair<const char*, const char*> gl_cases[] = {{"gl3", "2,1,0"}, {"gl3", "1,0,0"}, {"gl4", "2,2,1,0"}};
    for (auto [alg, w] : gl_cases) {
      for (const char* suite : {"identity", "projectors", "invariants"}) expect_fail(alg, w, suite, {1e-6, false, false});
      for (const char* suite : {"relations", "identity"}) expect_fail(alg, w, suite, {0.0, true, false});
    }
    expect_fail("gl2", "1,0", "relations", {0.0, true, false});
    const std::pair<const char*, const char*> super_cases[] = {{"gl1|1", "1|0"}, {"gl2|1", "1,0|0"}, {"gl2|2", "1,0|0,0"}};
    for (auto [alg, w] : super_cases) {
      expect_fail(alg, w, "super", {0.0, false, true});
      expect_fail(alg, w, "super", {1e-6, false, false});
      expect_fail(alg, w, "super", {0.0, true, false});
    }
    // Shifting any single root of A, not just the first, breaks the identity.
    for (const auto& l : sweep_rank(3)) {
      const GlRep rep(l);
      const CharMatrix cm = build_char_matrix(rep, CharKind::A);
      for (std::size_t j = 0; j < 3; ++j) {
        auto roots = char_roots(l, CharKind::A).values();
        roots[j] += Rational(1, 1000000);
        const auto r = verify_identity(cm, roots, Tolerance{});
        if (char_roots(l, CharKind::A).present(j)) {
          check_true(o, "root " + std::to_string(j + 1) + " shift on " + l.to_string(), !r.passed);
          ++controls;
        }
      }
    }
    o.note << " controls=" << controls << ';';
  });

  std::printf("%s: %d criterion failure(s)\n", g_failures == 0 ? "ALL PASS" : "FAILURES", g_failures);
  return g_failures == 0 ? 0 : 1;
}
