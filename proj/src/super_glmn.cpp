#include "charid/super_glmn.hpp"

#include "charid/error.hpp"

#include <cmath>
#include <sstream>

namespace charid {

namespace {

int exponent_value(ParityExponent e, int pp, int pq) {
  switch (e) {
    case ParityExponent::None: return 0;
    case ParityExponent::P: return pp;
    case ParityExponent::Q: return pq;
    case ParityExponent::PQ: return pp * pq;
    case ParityExponent::PplusQ: return pp + pq;
    case ParityExponent::PplusPQ: return pp + pp * pq;
    case ParityExponent::QplusPQ: return pq + pp * pq;
  }
  return 0;
}

const char* exponent_name(ParityExponent e) {
  switch (e) {
    case ParityExponent::None: return "0";
    case ParityExponent::P: return "(p)";
    case ParityExponent::Q: return "(q)";
    case ParityExponent::PQ: return "(p)(q)";
    case ParityExponent::PplusQ: return "(p)+(q)";
    case ParityExponent::PplusPQ: return "(p)+(p)(q)";
    case ParityExponent::QplusPQ: return "(q)+(p)(q)";
  }
  return "?";
}

bool blocks_decreasing(const std::vector<Rational>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return true;
}

}  // namespace

bool SuperWeight::is_dominant() const { return blocks_decreasing(even) && blocks_decreasing(odd); }

std::string SuperWeight::to_string() const { return "(" + join(even, ",") + "|" + join(odd, ",") + ")"; }

SuperWeight parse_super_weight(std::string_view text, std::size_t m, std::size_t n) {
  SuperWeight w;
  if (auto bar = text.find('|'); bar != std::string_view::npos) {
    w.even = parse_rational_list(text.substr(0, bar));
    w.odd = parse_rational_list(text.substr(bar + 1));
  } else {
    auto all = parse_rational_list(text);
    if (all.size() != m + n)
      throw DomainError("gl(" + std::to_string(m) + "|" + std::to_string(n) + ") weight needs " +
                        std::to_string(m + n) + " labels");
    w.even.assign(all.begin(), all.begin() + static_cast<long>(m));
    w.odd.assign(all.begin() + static_cast<long>(m), all.end());
  }
  if (w.m() != m || w.n() != n)
    throw DomainError("weight " + w.to_string() + " does not match gl(" + std::to_string(m) + "|" +
                      std::to_string(n) + ")");
  return w;
}

std::vector<Matrix> super_vector_rep(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw DomainError("gl(m|n) needs m, n >= 1");
  return vector_rep_matrices(m + n);
}

double graded_relation_residual(std::span<const Matrix> gens, std::size_t m, std::size_t n, bool graded) {
  const std::size_t N = m + n;
  if (gens.size() != N * N) throw DimensionError("need (m+n)^2 generator matrices");
  auto g = [&](std::size_t p, std::size_t q) -> const Matrix& { return gens[(p - 1) * N + (q - 1)]; };
  double worst = 0.0;
  for (std::size_t p = 1; p <= N; ++p)
    for (std::size_t q = 1; q <= N; ++q)
      for (std::size_t r = 1; r <= N; ++r)
        for (std::size_t s = 1; s <= N; ++s) {
          const int deg = (parity(p, m) + parity(q, m)) * (parity(r, m) + parity(s, m));
          const double sg = (graded && deg % 2 != 0) ? -1.0 : 1.0;
          Matrix lhs = g(p, q) * g(r, s) - (g(r, s) * g(p, q)) * sg;
          if (q == r) lhs -= g(p, s);
          if (p == s) lhs += g(r, q) * sg;
          worst = std::max(worst, lhs.max_abs());
        }
  return worst;
}

std::string SuperConvention::describe() const {
  std::ostringstream os;
  os << (sign < 0 ? "-" : "+") << "(-1)^{" << exponent_name(exponent) << "} a_" << (transpose ? "qp" : "pq");
  return os.str();
}

std::vector<SuperConvention> super_convention_candidates(CharKind kind) {
  static const ParityExponent exps[] = {ParityExponent::None,   ParityExponent::P,       ParityExponent::Q,
                                        ParityExponent::PQ,     ParityExponent::PplusQ,  ParityExponent::PplusPQ,
                                        ParityExponent::QplusPQ};
  std::vector<SuperConvention> out;
  // Printed forms first: A_pq = -(-1)^{(p)} a_pq, A-bar_pq = -(-1)^{(p)(q)} a_qp.
  out.push_back(kind == CharKind::Abar ? SuperConvention{true, -1, ParityExponent::PQ}
                                       : SuperConvention{false, -1, ParityExponent::P});
  for (bool t : {false, true})
    for (int s : {1, -1})
      for (auto e : exps) {
        SuperConvention c{t, s, e};
        if (c != out.front()) out.push_back(c);
      }
  return out;
}

Matrix super_char_matrix(std::span<const Matrix> gens, std::size_t m, std::size_t n, const SuperConvention& conv) {
  const std::size_t N = m + n;
  if (gens.size() != N * N) throw DimensionError("need (m+n)^2 generator matrices");
  const std::size_t d = gens.front().rows();
  Matrix big(N * d, N * d);
  for (std::size_t p = 1; p <= N; ++p)
    for (std::size_t q = 1; q <= N; ++q) {
      const int e = exponent_value(conv.exponent, parity(p, m), parity(q, m));
      const double c = conv.sign * ((e % 2 == 0) ? 1.0 : -1.0);
      const Matrix& a = conv.transpose ? gens[(q - 1) * N + (p - 1)] : gens[(p - 1) * N + (q - 1)];
      big.set_block(p - 1, q - 1, a * c);
    }
  return big;
}

std::vector<Rational> super_char_roots(const SuperWeight& lambda, CharKind kind) {
  if (!lambda.is_dominant()) throw DomainError("super weight " + lambda.to_string() + " is not dominant per block");
  const long m = static_cast<long>(lambda.m());
  const long n = static_cast<long>(lambda.n());
  std::vector<Rational> out;
  for (long p = 1; p <= m + n; ++p) {
    const int sg = parity(static_cast<std::size_t>(p), lambda.m()) ? -1 : 1;
    const Rational& l = lambda.label(static_cast<std::size_t>(p));
    switch (kind) {
      case CharKind::A: out.push_back(sg * (l + m - p) - n); break;
      case CharKind::Abar: out.push_back(m - sg * (l + m + 1 - p)); break;
      default: throw DomainError("super roots exist for kinds A and Abar");
    }
  }
  return out;
}

SuperWeight super_vector_weight(std::size_t m, std::size_t n) {
  SuperWeight w{std::vector<Rational>(m, 0), std::vector<Rational>(n, 0)};
  w.even.at(0) = 1;
  return w;
}

ResidualReport verify_super_identity(std::size_t m, std::size_t n, CharKind kind, const Tolerance& tol,
                                     const SuperConvention& conv) {
  const auto gens = super_vector_rep(m, n);
  CharMatrix cm{kind, super_char_matrix(gens, m, n, conv), m + n, m + n, m + n};
  return verify_identity(cm, super_char_roots(super_vector_weight(m, n), kind), tol);
}

ResidualReport verify_super_identity(std::size_t m, std::size_t n, CharKind kind, const Tolerance& tol) {
  return verify_super_identity(m, n, kind, tol, kind == CharKind::Abar ? kSuperConventionAbar : kSuperConventionA);
}

CalibrationResult calibrate_super_conventions(std::span<const std::pair<std::size_t, std::size_t>> grid,
                                              const Tolerance& tol) {
  auto pick = [&](CharKind kind) {
    const auto candidates = super_convention_candidates(kind);
    for (const auto& c : candidates) {
      bool all = true;
      for (auto [m, n] : grid)
        if (!verify_super_identity(m, n, kind, tol, c).passed) {
          all = false;
          break;
        }
      if (all) return c;
    }
    std::ostringstream os;
    os << "no sign convention annihilates the " << to_string(kind) << " identity";
    if (!grid.empty()) {
      auto [m, n] = grid.front();
      const auto gens = super_vector_rep(m, n);
      os << "; spectrum of " << candidates.front().describe() << " on gl(" << m << "|" << n << "):";
      for (double e : symmetric_eigenvalues(super_char_matrix(gens, m, n, candidates.front()))) os << ' ' << e;
      os << "; roots: " << join(super_char_roots(super_vector_weight(m, n), kind));
    }
    throw ConventionError(os.str());
  };
  return {pick(CharKind::A), pick(CharKind::Abar)};
}

const char* to_string(StarVerdict v) {
  switch (v) {
    case StarVerdict::TypicalType1: return "typical-type1";
    case StarVerdict::AtypicalType1: return "atypical-type1";
    case StarVerdict::NotType1Star: return "not-type1-star";
  }
  return "?";
}

StarClassification classify_type1_star(const SuperWeight& lambda) {
  if (lambda.m() == 0 || lambda.n() == 0) throw DomainError("classification needs m, n >= 1");
  if (!lambda.is_dominant()) throw DomainError("super weight " + lambda.to_string() + " is not dominant per block");
  const Rational& lm = lambda.even.back();
  const Rational& lnbar = lambda.odd.back();
  const long n = static_cast<long>(lambda.n());
  if (lm + lnbar > n - 1) return {StarVerdict::TypicalType1, std::nullopt};
  for (std::size_t mu = 1; mu <= lambda.n(); ++mu) {
    const Rational& lmu = lambda.odd[mu - 1];
    if (lm + lmu + 1 - static_cast<long>(mu) == 0 && lnbar - lmu == 0) return {StarVerdict::AtypicalType1, mu};
  }
  return {StarVerdict::NotType1Star, std::nullopt};
}

bool is_covariant(const SuperWeight& lambda) {
  if (!lambda.is_dominant() || lambda.m() == 0) return false;
  for (const auto* block : {&lambda.even, &lambda.odd})
    for (const auto& v : *block)
      if (v < 0 || !is_integer(v)) return false;
  for (std::size_t j = 1; j <= lambda.n(); ++j)
    if (lambda.odd[j - 1] > 0 && lambda.even.back() < static_cast<long>(j)) return false;
  return true;
}

SuperWeight shift_weight(const SuperWeight& lambda, const Rational& gamma, const Rational& omega) {
  SuperWeight out = lambda;
  for (auto& v : out.even) v += gamma - omega;
  for (auto& v : out.odd) v += omega;
  return out;
}

SuperWeight compose_type1_weight(const SuperWeight& lambda0, const Rational& gamma, const Rational& omega) {
  if (!is_covariant(lambda0)) throw DomainError("Lambda_0 = " + lambda0.to_string() + " is not a covariant weight");
  const long n = static_cast<long>(lambda0.n());
  const bool small_integer = is_integer(gamma) && gamma >= 0 && gamma <= n - 1;
  if (!small_integer && !(gamma > n - 1))
    throw DomainError("gamma = " + to_string(gamma) + " must lie in {0,...," + std::to_string(n - 1) +
                      "} or exceed " + std::to_string(n - 1));
  return shift_weight(lambda0, gamma, omega);
}

}  // namespace charid
