#include "charid/error.hpp"
#include "charid/gl_rep.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace charid;
using testing_helpers::W;

namespace {

double relation_residual(const GlRep& rep) {
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

}  // namespace

TEST_CASE("gl(2) vector representation is e_ij") {
  const GlRep rep(W("1,0"));
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j) CHECK((rep.matrix(i, j) - unit_matrix(2, i - 1, j - 1)).max_abs() == 0.0);
}

TEST_CASE("elementary coefficient examples") {
  const GTPattern low({{1, 0}, {0}});
  CHECK(elementary_coefficient(low, 1, 1) == Surd::sqrt_of(1));
  const GTPattern mid({{2, 0}, {1}});
  CHECK(elementary_coefficient(mid, 1, 1) == Surd::sqrt_of(2));
  // Forbidden shift: the top state cannot be raised.
  CHECK(elementary_coefficient(GTPattern({{2, 0}, {2}}), 1, 1).is_zero());
  CHECK(elementary_coefficient(GTPattern({{2, 1, 0}, {1, 1}, {1}}), 2, 2).is_zero());
}

TEST_CASE("gl(2) coefficients match the su(2) ladder oracle") {
  // a_12 |m> = sqrt((l1 - m)(m - l2 + 1)) |m+1>
  for (int l1 = -2; l1 <= 5; ++l1)
    for (int l2 = -3; l2 <= l1; ++l2) {
      const GlRep rep(HighestWeight{{l1, l2}});
      const auto& basis = rep.basis();
      for (std::size_t s = 0; s < rep.dim(); ++s) {
        const Rational m = basis[s].label(1, 1);
        const std::size_t t = basis.find(basis[s].shifted(1, 1));
        if (t == GTBasis::npos) continue;
        const double expect = std::sqrt(to_double((l1 - m) * (m - l2 + 1)));
        CHECK(rep.matrix(1, 2)(t, s) == doctest::Approx(expect).epsilon(1e-14));
      }
    }
}

TEST_CASE("defining relations on small gl(n) irreps") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& l : testing_helpers::small_weights(n, n <= 3 ? 3 : 2)) {
      const GlRep rep(l);
      CHECK(relation_residual(rep) < 1e-10);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
          CHECK((rep.matrix(j, i) - rep.matrix(i, j).transpose()).max_abs() < 1e-14);
    }
  // Shifted, rational and negative labels.
  for (const char* w : {"5/2,1/2,-1/2", "-1,-1,-3", "1/3,1/3"}) CHECK(relation_residual(GlRep(W(w))) < 1e-10);
}

TEST_CASE("nonelementary coefficient") {
  SUBCASE("single level reduces to the elementary coefficient") {
    const GlRep rep(W("2,1,0"));
    for (std::size_t s = 0; s < rep.dim(); ++s)
      for (std::size_t i = 1; i <= 2; ++i) {
        const std::size_t shifts[] = {i};
        const GTPattern& p = rep.basis()[s];
        const Surd e = elementary_coefficient(p, 2, i);
        const Surd ne = nonelementary_coefficient(p, 2, 2, shifts);
        CHECK(ne.squared() == e.squared());
      }
  }
  SUBCASE("gl(3) vector: a_13 on the lowest state has magnitude 1") {
    const GlRep rep(W("1,0,0"));
    const std::size_t low = rep.dim() - 1;
    const GTPattern& p = rep.basis()[low];
    const std::size_t shifts[] = {1, 1};
    CHECK(nonelementary_coefficient(p, 1, 2, shifts).to_double() == doctest::Approx(1.0));
    const Matrix c = commutator(unit_matrix(3, 0, 1), unit_matrix(3, 1, 2));
    CHECK(std::abs(rep.matrix(1, 3)(0, low)) == doctest::Approx(std::abs(c(0, 2))));
  }
  SUBCASE("a vanishing link gives zero") {
    const GTPattern top({{1, 0, 0}, {1, 0}, {1}});
    const std::size_t shifts[] = {1, 1};
    CHECK(nonelementary_coefficient(top, 1, 2, shifts).is_zero());
  }
}

TEST_CASE("Casimir values") {
  CHECK(casimir_eigenvalue_formula(W("1,0"), 2) == 2);
  CHECK(casimir_eigenvalue_formula(W("2,1,0"), 1) == 3);
  CHECK(casimir_eigenvalue_formula(W("2,1,0"), 2) == 9);
  CHECK(casimir_eigenvalue_formula(W("0,0,0"), 1) == 0);
  CHECK(casimir_eigenvalue_formula(W("0,0,0"), 2) == 0);
  CHECK(casimir_sigma(GlRep(W("1,0")), 2).value == 2);
  const auto s = casimir_sigma(GlRep(W("2,1,0")), 2);
  CHECK(s.value == 9);
  CHECK(s.residual < 1e-12);

  SUBCASE("partial trace of A on the gl(2) vector rep is sigma_1 I") {
    const GlRep rep(W("1,0"));
    const Matrix t = partial_trace_block(assemble_generator_matrix(rep), 2, 2);
    CHECK((t - Matrix::identity(2) * to_double(casimir_eigenvalue_formula(W("1,0"), 1))).max_abs() == 0.0);
  }
  SUBCASE("gl(1): sigma_2 = sigma_1^2") {
    for (const char* w : {"-3", "0", "1", "4", "7/2"}) {
      const GlRep rep(W(w));
      const Rational s1 = casimir_sigma(rep, 1).value;
      CHECK(casimir_sigma(rep, 2).value == s1 * s1);
    }
  }
  SUBCASE("gl(2): sigma_3 = 3/2 s1 s2 - 1/2 s1^3 + s2 - 1/2 s1^2") {
    for (int a = -2; a <= 4; ++a)
      for (int b = -3; b <= a; ++b) {
        const GlRep rep(HighestWeight{{a, b}});
        const Rational s1 = casimir_sigma(rep, 1).value, s2 = casimir_sigma(rep, 2).value,
                       s3 = casimir_sigma(rep, 3).value;
        CHECK(s3 == Rational(3, 2) * s1 * s2 - Rational(1, 2) * s1 * s1 * s1 + s2 - Rational(1, 2) * s1 * s1);
      }
  }
  SUBCASE("higher Casimirs are scalar (Schur)") {
    for (const char* w : {"2,1,0", "3,1,1,0", "2,2,0"})
      for (unsigned m = 1; m <= 4; ++m) CHECK_NOTHROW(casimir_sigma(GlRep(W(w)), m));
  }
}

TEST_CASE("negative control: a negated generator breaks the relations") {
  GlRep rep(W("2,1,0"));
  rep.negate_generator(1, 3);
  CHECK(relation_residual(rep) > 0.5);
}
