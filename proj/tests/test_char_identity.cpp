#include "charid/char_identity.hpp"
#include "charid/error.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace charid;
using testing_helpers::Q;
using testing_helpers::W;

namespace {

std::vector<Rational> R(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

// Clusters a dense symmetric eigensolve into value -> count.
std::map<long long, std::size_t> integer_spectrum(const Matrix& m) {
  std::map<long long, std::size_t> out;
  for (double e : symmetric_eigenvalues(m)) {
    const double r = std::round(e);
    REQUIRE(std::abs(e - r) < 1e-9);
    ++out[static_cast<long long>(r)];
  }
  return out;
}

// chi(sigma_2) = sum_j l_j (l_j + n + 1 - 2j), written out independently of the library.
Rational chi2(const std::vector<Rational>& l) {
  Rational s = 0;
  const long n = static_cast<long>(l.size());
  for (long j = 1; j <= n; ++j) s += l[j - 1] * (l[j - 1] + n + 1 - 2 * j);
  return s;
}

}  // namespace

TEST_CASE("characteristic matrix of the gl(2) vector rep") {
  const GlRep rep(W("1,0"));
  const CharMatrix cm = build_char_matrix(rep, CharKind::A);
  CHECK(cm.big.rows() == 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK((cm.big.block(i, j, 2) - unit_matrix(2, i, j)).max_abs() == 0.0);
  const auto spec = integer_spectrum(cm.big);
  CHECK(spec.size() == 2);
  CHECK(spec.count(2) == 1);
  CHECK(spec.count(0) == 1);
  CHECK(roots_A(W("1,0")) == R({2, 0}));
}

TEST_CASE("root formulas") {
  CHECK(roots_A(W("2,1,0")) == R({4, 2, 0}));
  CHECK(roots_Abar(W("2,1,0")) == R({-2, 0, 2}));
  CHECK(roots_A(W("7")) == R({7}));
  for (const auto& l : testing_helpers::small_weights(4, 3)) {
    const auto a = roots_A(l), ab = roots_Abar(l);
    for (std::size_t j = 0; j < 4; ++j) CHECK(ab[j] == 3 - a[j]);
  }
  const CharSpectrum s = char_roots(W("1,1"), CharKind::A);
  CHECK_FALSE(s.present(0));  // (0,1) is not dominant
  CHECK(s.present(1));        // (1,0)
}

TEST_CASE("root multiplicities match a dense eigensolve") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& l : testing_helpers::small_weights(n, 3))
      for (CharKind kind : {CharKind::A, CharKind::Abar}) {
        const GlRep rep(l);
        const CharMatrix cm = build_char_matrix(rep, kind);
        const CharSpectrum spec = char_roots(l, kind);
        auto observed = integer_spectrum(cm.big);
        for (const auto& r : spec.roots) {
          const long long v = static_cast<long long>(floor(r.value));
          const std::size_t seen = observed.count(v) ? observed[v] : 0;
          CHECK(BigInt(seen) == r.multiplicity);
          if (r.multiplicity > 0) CHECK(r.multiplicity == dimension(r.constituents.front()));
          observed.erase(v);
        }
        CHECK(observed.empty());
      }
}

TEST_CASE("trivial representation") {
  const GlRep rep(W("0,0,0"));
  const CharMatrix cm = build_char_matrix(rep, CharKind::A);
  CHECK(cm.big.max_abs() == 0.0);
  const CharSpectrum s = char_roots(W("0,0,0"), CharKind::A);
  CHECK(s.values() == R({2, 1, 0}));
  CHECK_FALSE(s.present(0));
  CHECK_FALSE(s.present(1));
  CHECK(s.present(2));
  const Projector p = build_projector(cm, s, 2);
  CHECK((p.matrix - Matrix::identity(3)).max_abs() == 0.0);
}

TEST_CASE("characteristic identities") {
  const GlRep rep(W("2,1,0"));
  const CharMatrix a = build_char_matrix(rep, CharKind::A);
  const auto good = verify_identity(a, R({4, 2, 0}), Tolerance{});
  CHECK(good.passed);
  CHECK(good.residual < 1e-9);
  CHECK(verify_identity(build_char_matrix(rep, CharKind::Abar), R({-2, 0, 2}), Tolerance{}).passed);
  std::vector<Rational> bad{Q("4.001"), 2, 0};
  const auto r = verify_identity(a, bad, Tolerance{});
  CHECK_FALSE(r.passed);
  CHECK(r.residual > 1e3 * r.threshold);

  for (const char* w : {"-4", "0", "3", "7/2"}) CHECK(verify_gl1_identity(GlRep(W(w)), Tolerance{}).passed);
  for (const char* w : {"0,0", "1,0", "3,-2", "5/2,1/2"}) CHECK(verify_gl2_identity(GlRep(W(w)), Tolerance{}).passed);
}

TEST_CASE("general characteristic matrix") {
  const GlRep rep(W("2,1,0"));
  const auto vec = vector_rep_matrices(3);
  const CharMatrix g = build_general_char_matrix(vec, rep);
  CHECK((g.big - build_char_matrix(rep, CharKind::Abar).big).max_abs() < 1e-12);
  CHECK((build_general_char_matrix(contragredient(vec), rep).big - build_char_matrix(rep, CharKind::A).big).max_abs() <
        1e-12);
  CHECK((coproduct_char_matrix(vec, rep) - g.big).max_abs() < 1e-12);

  SUBCASE("vector mu roots match the chi formula and Abar") {
    const CharSpectrum c = general_char_roots(W("2,1,0"), W("1,0,0"));
    const Rational cl = chi2({2, 1, 0}), cm = chi2({1, 0, 0});
    std::vector<Rational> expect;
    for (const auto& nu : {R({3, 1, 0}), R({2, 2, 0}), R({2, 1, 1})}) expect.push_back(-(chi2(nu) - cm - cl) / 2);
    std::sort(expect.begin(), expect.end());
    CHECK(c.values() == expect);
    CHECK(expect == R({-2, 0, 2}));  // the Abar roots
  }
  SUBCASE("mu = (2,0,0) spectrum lies in the candidate set") {
    const GlRep mu(W("2,0,0"));
    const auto mg = mu.matrices();
    const CharMatrix cm = build_general_char_matrix(mg, rep);
    const CharSpectrum cand = general_char_roots(W("2,1,0"), W("2,0,0"));
    const ObservedSpectrum obs = observe_spectrum(cm, cand, Tolerance{});
    CHECK(obs.max_distance_to_candidates < 1e-8);
    const CharSpectrum pruned = prune_to_observed(cand, obs, Tolerance{});
    BigInt total = 0;
    for (const auto& r : pruned.roots) total += r.multiplicity;
    CHECK(total == BigInt(cm.big.rows()));
    CHECK(verify_identity(cm, pruned, Tolerance{}).passed);
  }
}

TEST_CASE("projectors") {
  SUBCASE("gl(2) vector, Abar: rank of the first projector is dim V(2,0) = 3") {
    const GlRep rep(W("1,0"));
    const CharMatrix cm = build_char_matrix(rep, CharKind::Abar);
    const CharSpectrum s = char_roots(W("1,0"), CharKind::Abar);
    std::vector<Projector> ps{build_projector(cm, s, 0), build_projector(cm, s, 1)};
    const auto alg = projector_algebra(ps);
    CHECK(alg.ranks == std::vector<long long>{3, 1});
  }
  SUBCASE("completeness and spectral calculus on gl(3) (2,1,0)") {
    const GlRep rep(W("2,1,0"));
    for (CharKind k : {CharKind::A, CharKind::Abar}) {
      const CharMatrix cm = build_char_matrix(rep, k);
      const CharSpectrum s = char_roots(W("2,1,0"), k);
      std::vector<Projector> ps;
      for (std::size_t r = 0; r < 3; ++r) ps.push_back(build_projector(cm, s, r));
      const auto alg = projector_algebra(ps);
      CHECK(alg.completeness < 1e-9);
      CHECK(alg.idempotency < 1e-9);
      CHECK(alg.orthogonality < 1e-9);
      CHECK(spectral_calculus_residual(cm, s, ps) < 1e-9);
    }
  }
  SUBCASE("repeated roots are rejected") {
    const GlRep rep(W("1,0"));
    CharSpectrum s = char_roots(W("1,0"), CharKind::A);
    s.roots[1].value = s.roots[0].value;
    CHECK_THROWS_AS(build_projector(build_char_matrix(rep, CharKind::A), s, 0), DegenerateError);
  }
}

TEST_CASE("invariants") {
  SUBCASE("sum of C is one on every branch") {
    for (const auto& l : {W("2,1,0"), W("3,1,0,0"), W("1,1")})
      for (const auto& mu : branch(l)) {
        Rational s = 0;
        for (std::size_t k = 1; k <= l.rank(); ++k) s += invariant_C_eigenvalue(l, mu, k, InvariantKind::C);
        CHECK(s == 1);
      }
  }
  SUBCASE("Cbar for gl(2) (1,0) over gl(1) (1)") {
    CHECK(invariant_C_eigenvalue(W("1,0"), W("1"), 1, InvariantKind::Cbar) == Rational(1, 2));
    CHECK(invariant_C_eigenvalue(W("1,0"), W("1"), 2, InvariantKind::Cbar) == Rational(1, 2));
    CHECK_THROWS_AS(invariant_C_eigenvalue(W("1,0"), W("2"), 1, InvariantKind::C), DomainError);
  }
  SUBCASE("projector corner blocks equal C and Cbar") {
    for (const char* w : {"1,0", "2,1,0", "2,0,0", "2,1,1,0"}) {
      const GlRep rep(W(w));
      CHECK(invariant_block_residual(rep, InvariantKind::C, Tolerance{}) < 1e-9);
      CHECK(invariant_block_residual(rep, InvariantKind::Cbar, Tolerance{}) < 1e-9);
    }
    const GlRep rep(W("2,1,0"));
    auto up = roots_A(W("2,1,0"));
    up[0] += Q("1/1000");
    CHECK(invariant_block_residual(rep, InvariantKind::C, Tolerance{}, up) > 1e-6);
  }
  SUBCASE("shift components") {
    const GlRep rep(W("2,1,0"));
    const std::size_t d = rep.dim();
    std::vector<Matrix> total(2, Matrix(d, d));
    for (std::size_t r = 1; r <= 2; ++r) {
      const ShiftComponent sc = shift_components(rep, r);
      CHECK(sc.contraction_gap < 1e-12);
      CHECK(sc.shift_leak < 1e-12);
      for (std::size_t j = 0; j < 2; ++j) total[j] += sc.components[j];
    }
    for (std::size_t j = 1; j <= 2; ++j) CHECK((total[j - 1] - rep.matrix(j, 3)).max_abs() < 1e-12);
  }
  SUBCASE("gl(2) over gl(1): psi[1;1] raises lambda_11 by one") {
    const GlRep rep(W("1,0"));
    const ShiftComponent sc = shift_components(rep, 1);
    const Matrix& c = sc.components[0];
    for (std::size_t a = 0; a < rep.dim(); ++a)
      for (std::size_t b = 0; b < rep.dim(); ++b)
        if (c(a, b) != 0.0) CHECK(rep.basis()[a].label(1, 1) == rep.basis()[b].label(1, 1) + 1);
    CHECK(c.max_abs() > 0.5);
  }
  SUBCASE("norms and exact squared elements") {
    for (const char* w : {"2,1,0", "1,1,0", "3,0,0"}) {
      const GlRep rep(W(w));
      for (std::size_t r = 1; r <= 2; ++r) {
        const auto nr = norm_identity_residuals(rep, r);
        CHECK(nr.mbar < 1e-9);
        CHECK(nr.m < 1e-9);
      }
      const ExactNormCheck ex = exact_norm_check(rep);
      CHECK(ex.checked > 0);
      CHECK(ex.mismatches == 0);
    }
  }
  SUBCASE("M vanishes when the shift is forbidden") {
    // gl(2) (1,1) over gl(1) (1): raising row 1 to 2 leaves the lattice.
    CHECK(invariant_M_eigenvalue(W("1,1"), W("1"), 1, InvariantKind::M) == 0);
  }
}

TEST_CASE("nonelementary cross-check") {
  for (const char* w : {"2,1,0", "1,0,0", "2,1,1,0", "3,1,0,0"}) {
    const ElementCrossCheck cc = nonelementary_cross_check(GlRep(W(w)));
    CHECK(cc.entries > 0);
    CHECK(cc.max_gap < 1e-12);
  }
}
