#include "charid/char_identity.hpp"

#include "charid/error.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <functional>
#include <limits>

namespace charid {

namespace {

long as_long(std::size_t v) { return static_cast<long>(v); }

double max_abs_root(std::span<const Rational> roots) {
  double m = 0.0;
  for (const auto& r : roots) m = std::max(m, std::abs(to_double(r)));
  return m;
}

void require_distinct(std::span<const Rational> values) {
  for (std::size_t a = 0; a < values.size(); ++a)
    for (std::size_t b = a + 1; b < values.size(); ++b)
      if (values[a] == values[b]) throw DegenerateError("repeated characteristic root " + to_string(values[a]));
}

// Lagrange product over the listed present indices.
Matrix lagrange(const Matrix& big, std::span<const Rational> roots, std::span<const std::size_t> present, std::size_t r) {
  const Matrix id = Matrix::identity(big.rows());
  Matrix p = id;
  for (std::size_t l : present) {
    if (l == r) continue;
    const Rational gap = roots[r] - roots[l];
    if (gap == 0) throw DegenerateError("coincident roots in projector");
    p = p * ((big - id * to_double(roots[l])) * (1.0 / to_double(gap)));
  }
  return p;
}

bool interlaces(const HighestWeight& upper, const HighestWeight& lower) {
  if (lower.rank() + 1 != upper.rank()) return false;
  for (std::size_t i = 0; i < lower.rank(); ++i) {
    const Rational a = upper[i] - lower[i];
    const Rational b = lower[i] - upper[i + 1];
    if (a < 0 || b < 0 || !is_integer(a) || !is_integer(b)) return false;
  }
  return true;
}

bool shift_is_dominant(const HighestWeight& w, std::size_t j, int delta) {
  return w.shifted(j, delta).is_dominant();
}

// Factor lists for exact evaluation with zero bookkeeping.
struct FactorProduct {
  int sign = 1;
  std::vector<Rational> num;
  std::vector<Rational> den;

  std::size_t zero_num() const { return static_cast<std::size_t>(std::count(num.begin(), num.end(), Rational(0))); }
  std::size_t zero_den() const { return static_cast<std::size_t>(std::count(den.begin(), den.end(), Rational(0))); }
  Rational value() const {
    Rational v = sign;
    for (const auto& f : num) v *= f;
    for (const auto& f : den) {
      if (f == 0) throw DegenerateError("vanishing denominator in invariant");
      v /= f;
    }
    return v;
  }
  FactorProduct& operator*=(const FactorProduct& o) {
    sign *= o.sign;
    num.insert(num.end(), o.num.begin(), o.num.end());
    den.insert(den.end(), o.den.begin(), o.den.end());
    return *this;
  }
};

FactorProduct c_factors(std::span<const Rational> upper, std::span<const Rational> lower, std::size_t k, InvariantKind kind) {
  if (upper.size() != lower.size() + 1) throw DimensionError("invariant C needs root lists of lengths n+1 and n");
  if (k < 1 || k > upper.size()) throw DomainError("invariant index out of range");
  if (kind != InvariantKind::C && kind != InvariantKind::Cbar) throw DomainError("expected kind C or Cbar");
  FactorProduct f;
  const Rational& ak = upper[k - 1];
  for (std::size_t p = 0; p < upper.size(); ++p)
    if (p + 1 != k) f.den.push_back(ak - upper[p]);
  for (const auto& al : lower) f.num.push_back(kind == InvariantKind::C ? ak - al - 1 : ak - al);
  return f;
}

FactorProduct m_factors(std::span<const Rational> upper, std::span<const Rational> lower, std::size_t r, InvariantKind kind) {
  if (upper.size() != lower.size() + 1) throw DimensionError("invariant M needs root lists of lengths n+1 and n");
  if (r < 1 || r > lower.size()) throw DomainError("invariant index out of range");
  if (kind != InvariantKind::M && kind != InvariantKind::Mbar) throw DomainError("expected kind M or Mbar");
  FactorProduct f;
  f.sign = lower.size() % 2 == 0 ? 1 : -1;
  const Rational& ar = lower[r - 1];
  const bool bar = kind == InvariantKind::Mbar;
  for (const auto& ap : upper) f.num.push_back(bar ? ap - ar : ap - ar - 1);
  for (std::size_t l = 0; l < lower.size(); ++l)
    if (l + 1 != r) f.den.push_back(bar ? ar - lower[l] - 1 : ar - lower[l] + 1);
  return f;
}

// Roots of the gl(level) irrep on row `level` of a pattern; empty for level 0.
std::vector<Rational> row_roots(const GTPattern& p, std::size_t level) {
  if (level == 0) return {};
  return roots_A(HighestWeight{p.row(level)});
}

}  // namespace

const char* to_string(CharKind kind) {
  switch (kind) {
    case CharKind::A: return "A";
    case CharKind::Abar: return "Abar";
    case CharKind::General: return "General";
  }
  return "?";
}

CharKind parse_char_kind(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "a") return CharKind::A;
  if (t == "abar") return CharKind::Abar;
  if (t == "general") return CharKind::General;
  throw Error(ErrorCode::InvalidArgument, "unknown characteristic matrix kind '" + std::string(text) + "'");
}

CharMatrix build_char_matrix(const GlRep& rep, CharKind kind) {
  const std::size_t n = rep.rank();
  const std::size_t d = rep.dim();
  CharMatrix cm{kind, Matrix(n * d, n * d), n, d, n};
  switch (kind) {
    case CharKind::A:
      cm.big = assemble_generator_matrix(rep);
      break;
    case CharKind::Abar:
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) cm.big.set_block(i - 1, j - 1, -rep.matrix(j, i));
      break;
    case CharKind::General:
      throw DomainError("general kind needs the auxiliary representation; use build_general_char_matrix");
  }
  return cm;
}

CharMatrix build_general_char_matrix(std::span<const Matrix> mu_gens, const GlRep& lambda) {
  const std::size_t n = lambda.rank();
  if (mu_gens.size() != n * n) throw DimensionError("auxiliary representation needs n^2 generator matrices");
  const std::size_t s = mu_gens.front().rows();
  const std::size_t d = lambda.dim();
  CharMatrix cm{CharKind::General, Matrix(s * d, s * d), s, d, n};
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const Matrix& mu = mu_gens[(i - 1) * n + (j - 1)];
      if (mu.rows() != s || !mu.is_square()) throw DimensionError("auxiliary generators must be s x s");
      cm.big -= kron(mu, lambda.matrix(j, i));
    }
  return cm;
}

Matrix coproduct_char_matrix(std::span<const Matrix> mu_gens, const GlRep& lambda) {
  const std::size_t n = lambda.rank();
  if (mu_gens.size() != n * n) throw DimensionError("auxiliary representation needs n^2 generator matrices");
  const std::size_t s = mu_gens.front().rows();
  const std::size_t d = lambda.dim();
  const Matrix is = Matrix::identity(s);
  const Matrix id = Matrix::identity(d);
  auto mu = [&](std::size_t i, std::size_t j) -> const Matrix& { return mu_gens[(i - 1) * n + (j - 1)]; };
  auto delta = [&](std::size_t i, std::size_t j) { return kron(mu(i, j), id) + kron(is, lambda.matrix(i, j)); };

  Matrix total(s * d, s * d);
  Matrix sigma_mu(s, s);
  Matrix sigma_lambda(d, d);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      total += delta(i, j) * delta(j, i);
      sigma_mu += mu(i, j) * mu(j, i);
      sigma_lambda += lambda.matrix(i, j) * lambda.matrix(j, i);
    }
  return (total - kron(sigma_mu, id) - kron(is, sigma_lambda)) * -0.5;
}

std::vector<Matrix> vector_rep_matrices(std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.push_back(unit_matrix(n, i, j));
  return out;
}

std::vector<Matrix> contragredient(std::span<const Matrix> gens) {
  std::vector<Matrix> out;
  for (const auto& g : gens) out.push_back(-g.transpose());
  return out;
}

std::vector<Rational> CharSpectrum::values() const {
  std::vector<Rational> out;
  for (const auto& r : roots) out.push_back(r.value);
  return out;
}

std::vector<Rational> roots_A(const HighestWeight& lambda) {
  const long n = as_long(lambda.rank());
  std::vector<Rational> out;
  for (long j = 1; j <= n; ++j) out.push_back(lambda[static_cast<std::size_t>(j - 1)] + n - j);
  return out;
}

std::vector<Rational> roots_Abar(const HighestWeight& lambda) {
  std::vector<Rational> out;
  for (long j = 1; j <= as_long(lambda.rank()); ++j) out.push_back(Rational(j - 1) - lambda[static_cast<std::size_t>(j - 1)]);
  return out;
}

CharSpectrum char_roots(const HighestWeight& lambda, CharKind kind) {
  lambda.require_integral_dominant();
  CharSpectrum spec{kind, {}};
  std::vector<Rational> values;
  int delta = 0;
  switch (kind) {
    case CharKind::A:
      values = roots_A(lambda);
      delta = -1;
      break;
    case CharKind::Abar:
      values = roots_Abar(lambda);
      delta = 1;
      break;
    case CharKind::General:
      throw DomainError("general roots need the auxiliary weight; use general_char_roots");
  }
  for (std::size_t j = 0; j < values.size(); ++j) {
    HighestWeight nu = lambda.shifted(j, delta);
    BigInt mult = nu.is_dominant() ? dimension(nu) : BigInt(0);
    spec.roots.push_back(Root{values[j], {std::move(nu)}, mult});
  }
  return spec;
}

CharSpectrum general_char_roots(const HighestWeight& lambda, const HighestWeight& mu) {
  lambda.require_integral_dominant();
  mu.require_integral_dominant();
  if (lambda.rank() != mu.rank()) throw DimensionError("lambda and mu must be weights of the same gl(n)");
  std::vector<std::vector<Rational>> weights;
  for (const auto& p : enumerate_patterns(mu)) {
    auto w = pattern_weight(p);
    if (std::find(weights.begin(), weights.end(), w) == weights.end()) weights.push_back(std::move(w));
  }
  const Rational chi_mu = casimir_eigenvalue_formula(mu, 2);
  const Rational chi_lambda = casimir_eigenvalue_formula(lambda, 2);
  CharSpectrum spec{CharKind::General, {}};
  for (const auto& w : weights) {
    HighestWeight nu = lambda;
    for (std::size_t i = 0; i < w.size(); ++i) nu.labels[i] += w[i];
    if (!nu.is_dominant()) continue;
    const Rational alpha = Rational(-1, 2) * (casimir_eigenvalue_formula(nu, 2) - chi_mu - chi_lambda);
    auto it = std::find_if(spec.roots.begin(), spec.roots.end(), [&](const Root& r) { return r.value == alpha; });
    if (it == spec.roots.end())
      spec.roots.push_back(Root{alpha, {std::move(nu)}, 0});
    else
      it->constituents.push_back(std::move(nu));
  }
  std::sort(spec.roots.begin(), spec.roots.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
  for (auto& r : spec.roots) std::sort(r.constituents.begin(), r.constituents.end(), std::greater<>());
  return spec;
}

ObservedSpectrum observe_spectrum(const CharMatrix& cm, const CharSpectrum& candidates, const Tolerance& tol) {
  const auto eig = symmetric_eigenvalues(cm.big);
  const double thr = tol.threshold(cm.big.max_abs());
  ObservedSpectrum obs;
  for (double e : eig) {
    if (!obs.values.empty() && std::abs(e - obs.values.back()) <= thr) {
      auto& c = obs.counts.back();
      obs.values.back() = (obs.values.back() * static_cast<double>(c) + e) / static_cast<double>(c + 1);
      ++c;
    } else {
      obs.values.push_back(e);
      obs.counts.push_back(1);
    }
  }
  for (double v : obs.values) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : candidates.roots) best = std::min(best, std::abs(v - to_double(r.value)));
    obs.max_distance_to_candidates = std::max(obs.max_distance_to_candidates, best);
  }
  return obs;
}

CharSpectrum prune_to_observed(const CharSpectrum& candidates, const ObservedSpectrum& observed, const Tolerance& tol) {
  CharSpectrum out{candidates.kind, {}};
  for (const auto& r : candidates.roots) {
    const double v = to_double(r.value);
    for (std::size_t c = 0; c < observed.values.size(); ++c)
      if (std::abs(observed.values[c] - v) <= tol.threshold(std::abs(v))) {
        Root kept = r;
        kept.multiplicity = observed.counts[c];
        out.roots.push_back(std::move(kept));
        break;
      }
  }
  return out;
}

ResidualReport verify_identity(const CharMatrix& cm, std::span<const Rational> roots, const Tolerance& tol) {
  std::vector<Rational> sorted(roots.begin(), roots.end());
  std::sort(sorted.begin(), sorted.end());
  const Matrix id = Matrix::identity(cm.big.rows());
  Matrix prod = id;
  for (const auto& a : sorted) prod = prod * (cm.big - id * to_double(a));
  ResidualReport rep;
  rep.residual = prod.max_abs();
  rep.threshold = tol.threshold(std::max(cm.big.max_abs(), max_abs_root(roots)));
  rep.passed = rep.residual <= rep.threshold;
  return rep;
}

ResidualReport verify_identity(const CharMatrix& cm, const CharSpectrum& spectrum, const Tolerance& tol) {
  return verify_identity(cm, spectrum.values(), tol);
}

ResidualReport verify_gl1_identity(const GlRep& rep, const Tolerance& tol) {
  if (rep.rank() != 1) throw DomainError("gl(1) identity needs a gl(1) representation");
  const Matrix a = assemble_generator_matrix(rep);
  const double s1 = to_double(casimir_eigenvalue_formula(rep.weight(), 1));
  ResidualReport r;
  r.residual = (a - Matrix::identity(a.rows()) * s1).max_abs();
  r.threshold = tol.threshold(std::max(a.max_abs(), std::abs(s1)));
  r.passed = r.residual <= r.threshold;
  return r;
}

ResidualReport verify_gl2_identity(const GlRep& rep, const Tolerance& tol) {
  if (rep.rank() != 2) throw DomainError("gl(2) identity needs a gl(2) representation");
  const Matrix a = assemble_generator_matrix(rep);
  const Rational s1 = casimir_eigenvalue_formula(rep.weight(), 1);
  const Rational s2 = casimir_eigenvalue_formula(rep.weight(), 2);
  const Rational c0 = Rational(1, 2) * (s1 * s1 + s1 - s2);
  const Matrix id = Matrix::identity(a.rows());
  const Matrix res = a * a - a * to_double(s1 + 1) + id * to_double(c0);
  ResidualReport r;
  r.residual = res.max_abs();
  r.threshold = tol.threshold(std::max({a.max_abs(), std::abs(to_double(s1)), std::abs(to_double(c0))}));
  r.passed = r.residual <= r.threshold;
  return r;
}

Projector build_projector(const CharMatrix& cm, const CharSpectrum& spectrum, std::size_t r) {
  const auto values = spectrum.values();
  require_distinct(values);
  if (r >= values.size()) throw DomainError("root index out of range");
  if (!spectrum.present(r)) return Projector{r, Matrix(cm.big.rows(), cm.big.cols())};
  std::vector<std::size_t> present;
  for (std::size_t l = 0; l < values.size(); ++l)
    if (spectrum.present(l)) present.push_back(l);
  return Projector{r, lagrange(cm.big, values, present, r)};
}

ProjectorAlgebra projector_algebra(std::span<const Projector> projectors) {
  ProjectorAlgebra out;
  if (projectors.empty()) return out;
  const std::size_t dim = projectors.front().matrix.rows();
  Matrix sum(dim, dim);
  for (std::size_t a = 0; a < projectors.size(); ++a) {
    const Matrix& p = projectors[a].matrix;
    sum += p;
    out.idempotency = std::max(out.idempotency, (p * p - p).max_abs());
    for (std::size_t b = a + 1; b < projectors.size(); ++b) {
      // P_b P_a is the transpose of P_a P_b for symmetric projectors; both are checked.
      out.orthogonality = std::max(out.orthogonality, (p * projectors[b].matrix).max_abs());
      out.orthogonality = std::max(out.orthogonality, (projectors[b].matrix * p).max_abs());
    }
    const double tr = p.trace();
    const double rounded = std::round(tr);
    out.ranks.push_back(static_cast<long long>(rounded));
    out.rank_rounding = std::max(out.rank_rounding, std::abs(tr - rounded));
  }
  out.completeness = (sum - Matrix::identity(dim)).max_abs();
  return out;
}

double spectral_calculus_residual(const CharMatrix& cm, const CharSpectrum& spectrum,
                                  std::span<const Projector> projectors) {
  const Matrix id = Matrix::identity(cm.big.rows());
  const Matrix& a = cm.big;
  const Matrix a2 = a * a;
  const Matrix a3 = a2 * a;
  const std::vector<std::function<double(double)>> scalars = {
      [](double) { return 1.0; }, [](double x) { return x; }, [](double x) { return x * x - 2 * x + 3; },
      [](double x) { return x * x * x - x; }};
  const std::vector<Matrix> mats = {id, a, a2 - a * 2.0 + id * 3.0, a3 - a};
  double worst = 0.0;
  for (std::size_t q = 0; q < scalars.size(); ++q) {
    Matrix rhs(a.rows(), a.cols());
    for (const auto& p : projectors) rhs += p.matrix * scalars[q](to_double(spectrum.roots.at(p.root_index).value));
    worst = std::max(worst, (mats[q] - rhs).max_abs());
  }
  return worst;
}

Matrix restricted_char_matrix(const GlRep& rep, CharKind kind) {
  if (rep.rank() < 2) throw DomainError("restriction to gl(n) needs gl(n+1) with n >= 1");
  const std::size_t n = rep.rank() - 1;
  const std::size_t d = rep.dim();
  Matrix big(n * d, n * d);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (kind == CharKind::A)
        big.set_block(i - 1, j - 1, rep.matrix(i, j));
      else if (kind == CharKind::Abar)
        big.set_block(i - 1, j - 1, -rep.matrix(j, i));
      else
        throw DomainError("restricted characteristic matrix supports kinds A and Abar");
    }
  return big;
}

Matrix restricted_projector(const GlRep& rep, CharKind kind, std::size_t r) {
  const Matrix big = restricted_char_matrix(rep, kind);
  const std::size_t n = rep.rank() - 1;
  const std::size_t d = rep.dim();
  if (r < 1 || r > n) throw DomainError("projector index out of range");
  Matrix out(n * d, n * d);
  for (const auto& [mu, ordinals] : rep.basis().isotypic_blocks(n)) {
    const auto roots = kind == CharKind::A ? roots_A(mu) : roots_Abar(mu);
    const int delta = kind == CharKind::A ? -1 : 1;
    std::vector<std::size_t> present;
    for (std::size_t j = 0; j < n; ++j)
      if (shift_is_dominant(mu, j, delta)) present.push_back(j);
    if (std::find(present.begin(), present.end(), r - 1) == present.end()) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t s : ordinals) idx.push_back(i * d + s);
    const Matrix p = lagrange(submatrix(big, idx), roots, present, r - 1);
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) out(idx[a], idx[b]) = p(a, b);
  }
  return out;
}

ShiftComponent shift_components(const GlRep& rep, std::size_t r) {
  if (rep.rank() < 2) throw DomainError("shift components need gl(n+1) with n >= 1");
  const std::size_t n = rep.rank() - 1;
  const std::size_t d = rep.dim();
  const Matrix pbar = restricted_projector(rep, CharKind::Abar, r);
  const Matrix p = restricted_projector(rep, CharKind::A, r);
  ShiftComponent out;
  out.r = r;
  for (std::size_t j = 1; j <= n; ++j) {
    Matrix via_bar(d, d);
    Matrix via_a(d, d);
    for (std::size_t i = 1; i <= n; ++i) {
      const Matrix& psi = rep.matrix(i, n + 1);
      via_bar += psi * pbar.block(i - 1, j - 1, d);
      via_a += p.block(j - 1, i - 1, d) * psi;
    }
    out.contraction_gap = std::max(out.contraction_gap, (via_bar - via_a).max_abs());
    for (std::size_t t = 0; t < d; ++t)
      for (std::size_t s = 0; s < d; ++s) {
        const HighestWeight target{rep.basis()[t].row(n)};
        const HighestWeight source{rep.basis()[s].row(n)};
        if (target != source.shifted(r - 1, 1)) out.shift_leak = std::max(out.shift_leak, std::abs(via_bar(t, s)));
      }
    out.components.push_back(std::move(via_bar));
  }
  return out;
}

Rational invariant_C_from_roots(std::span<const Rational> upper, std::span<const Rational> lower, std::size_t k,
                                InvariantKind kind) {
  auto f = c_factors(upper, lower, k, kind);
  if (f.zero_den() > 0) throw DegenerateError("coincident roots at level n+1");
  return f.value();
}

Rational invariant_M_from_roots(std::span<const Rational> upper, std::span<const Rational> lower, std::size_t r,
                                InvariantKind kind) {
  auto f = m_factors(upper, lower, r, kind);
  if (f.zero_den() > 0) throw DegenerateError("vanishing denominator in M invariant (absent shift)");
  return f.value();
}

Rational invariant_C_eigenvalue(const HighestWeight& upper, const HighestWeight& lower, std::size_t k,
                                InvariantKind kind) {
  if (!(upper.rank() == 1 && lower.rank() == 0) && !interlaces(upper, lower))
    throw DomainError(lower.to_string() + " does not occur in the branching of " + upper.to_string());
  return invariant_C_from_roots(roots_A(upper), roots_A(lower), k, kind);
}

Rational invariant_M_eigenvalue(const HighestWeight& upper, const HighestWeight& lower, std::size_t r,
                                InvariantKind kind) {
  if (!interlaces(upper, lower))
    throw DomainError(lower.to_string() + " does not occur in the branching of " + upper.to_string());
  return invariant_M_from_roots(roots_A(upper), roots_A(lower), r, kind);
}

double invariant_block_residual(const GlRep& rep, InvariantKind kind, const Tolerance& /*tol*/,
                                std::span<const Rational> upper_roots_override) {
  if (kind != InvariantKind::C && kind != InvariantKind::Cbar) throw DomainError("expected kind C or Cbar");
  if (rep.rank() < 2) throw DomainError("invariants need gl(n+1) with n >= 1");
  const CharKind ck = kind == InvariantKind::C ? CharKind::A : CharKind::Abar;
  const CharMatrix cm = build_char_matrix(rep, ck);
  const CharSpectrum spec = char_roots(rep.weight(), ck);
  const std::size_t n = rep.rank() - 1;
  const std::size_t d = rep.dim();
  const std::vector<Rational> upper =
      upper_roots_override.empty() ? roots_A(rep.weight())
                                   : std::vector<Rational>(upper_roots_override.begin(), upper_roots_override.end());
  double worst = 0.0;
  for (std::size_t k = 1; k <= n + 1; ++k) {
    const Matrix corner = build_projector(cm, spec, k - 1).matrix.block(n, n, d);
    Matrix expected(d, d);
    for (std::size_t s = 0; s < d; ++s) {
      const auto lower = row_roots(rep.basis()[s], n);
      expected(s, s) = to_double(invariant_C_from_roots(upper, lower, k, kind));
    }
    worst = std::max(worst, (corner - expected).max_abs());
  }
  return worst;
}

NormIdentityResiduals norm_identity_residuals(const GlRep& rep, std::size_t r) {
  const std::size_t n = rep.rank() - 1;
  const std::size_t d = rep.dim();
  const auto comps = shift_components(rep, r).components;
  const Matrix p = restricted_projector(rep, CharKind::A, r);
  const Matrix pbar = restricted_projector(rep, CharKind::Abar, r);
  const auto upper = roots_A(rep.weight());

  // Column scalings by M-bar and M on each source state; zero where the root is absent.
  std::vector<double> mbar(d, 0.0), m(d, 0.0);
  for (std::size_t s = 0; s < d; ++s) {
    const HighestWeight mu{rep.basis()[s].row(n)};
    const auto lower = roots_A(mu);
    if (shift_is_dominant(mu, r - 1, -1)) mbar[s] = to_double(invariant_M_from_roots(upper, lower, r, InvariantKind::Mbar));
    if (shift_is_dominant(mu, r - 1, 1)) m[s] = to_double(invariant_M_from_roots(upper, lower, r, InvariantKind::M));
  }
  auto scale_columns = [d](Matrix x, const std::vector<double>& f) {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) x(a, b) *= f[b];
    return x;
  };
  NormIdentityResiduals out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix lhs_bar = comps[i] * comps[j].transpose();
      const Matrix lhs = comps[i].transpose() * comps[j];
      out.mbar = std::max(out.mbar, (lhs_bar - scale_columns(p.block(i, j, d), mbar)).max_abs());
      out.m = std::max(out.m, (lhs - scale_columns(pbar.block(i, j, d), m)).max_abs());
    }
  return out;
}

ExactNormCheck exact_norm_check(const GlRep& rep) {
  ExactNormCheck out;
  const std::size_t top = rep.rank();
  for (const auto& p : rep.basis().patterns()) {
    for (std::size_t level = 1; level < top; ++level) {
      const auto upper = row_roots(p, level + 1);
      const auto mid = row_roots(p, level);
      const auto lower = row_roots(p, level - 1);
      for (std::size_t r = 1; r <= level; ++r) {
        ++out.checked;
        FactorProduct prod = m_factors(upper, mid, r, InvariantKind::M);
        prod *= c_factors(mid, lower, r, InvariantKind::Cbar);
        bool ok = false;
        const Surd n = elementary_coefficient(p, level, r);
        if (n.is_zero()) {
          // Forbidden shift: the product must vanish, counting zeros against poles.
          ok = prod.zero_num() > prod.zero_den();
        } else if (prod.zero_den() == 0) {
          ok = prod.value() == n.squared();
        }
        if (!ok) {
          ++out.mismatches;
          if (out.first_mismatch.empty())
            out.first_mismatch = p.to_string() + " level " + std::to_string(level) + " row " + std::to_string(r);
        }
      }
    }
  }
  return out;
}

ElementCrossCheck nonelementary_cross_check(const GlRep& rep) {
  ElementCrossCheck out;
  const std::size_t top = rep.rank();
  const std::size_t d = rep.dim();
  for (std::size_t ell = 1; ell < top; ++ell)
    for (std::size_t n = ell + 1; n < top; ++n) {
      const Matrix& built = rep.matrix(ell, n + 1);
      Matrix closed(d, d);
      std::vector<std::size_t> shifts(n - ell + 1, 1);  // (i_n, ..., i_l)
      for (std::size_t s = 0; s < d; ++s) {
        const GTPattern& p = rep.basis()[s];
        std::function<void(std::size_t)> rec = [&](std::size_t pos) {
          if (pos == shifts.size()) {
            GTPattern q = p;
            for (std::size_t t = 0; t < shifts.size(); ++t) q = q.shifted(shifts[t], n - t);
            const std::size_t target = rep.basis().find(q);
            if (target == GTBasis::npos) return;
            closed(target, s) = nonelementary_coefficient(p, ell, n, shifts).to_double();
            ++out.entries;
            return;
          }
          const std::size_t level = n - pos;
          for (std::size_t i = 1; i <= level; ++i) {
            shifts[pos] = i;
            rec(pos + 1);
          }
        };
        rec(0);
      }
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          out.max_gap = std::max(out.max_gap, std::abs(std::abs(built(a, b)) - closed(a, b)));
    }
  return out;
}

}  // namespace charid
