#include "charid/gl_rep.hpp"

#include "charid/error.hpp"

#include <algorithm>
#include <cmath>

namespace charid {

namespace {

long as_long(std::size_t v) { return static_cast<long>(v); }

RepMatrix sparse_to_rep(std::size_t i, std::size_t j, GeneratorKind kind, std::size_t d, std::vector<ExactEntry> exact) {
  RepMatrix m{i, j, kind, Matrix(d, d), std::move(exact)};
  for (const auto& e : m.exact) m.entries(e.row, e.col) = e.value.to_double();
  return m;
}

}  // namespace

Rational ElementaryFactors::value() const {
  Rational v = sign;
  for (const auto& f : upper) v *= f;
  for (const auto& f : lower) v *= f;
  for (const auto& f : denominator) {
    if (f == 0) throw DegenerateError("vanishing denominator in elementary coefficient");
    v /= f;
  }
  return v;
}

ElementaryFactors elementary_factors(const GTPattern& p, std::size_t level, std::size_t r) {
  if (level < 1 || level >= p.rank()) throw DomainError("elementary level must lie in 1..n-1");
  if (r < 1 || r > level) throw DomainError("row index must lie in 1..level");
  ElementaryFactors f;
  f.sign = (level % 2 == 0) ? 1 : -1;
  const Rational& lr = p.label(r, level);
  for (std::size_t q = 1; q <= level + 1; ++q) f.upper.push_back(p.label(q, level + 1) - lr + as_long(r) - as_long(q));
  for (std::size_t l = 1; l + 1 <= level; ++l) f.lower.push_back(lr - p.label(l, level - 1) + as_long(l) - as_long(r) + 1);
  for (std::size_t l = 1; l <= level; ++l) {
    if (l == r) continue;
    const Rational x = lr - p.label(l, level) + as_long(l) - as_long(r);
    f.denominator.push_back(x);
    f.denominator.push_back(x + 1);
  }
  return f;
}

Surd elementary_coefficient(const GTPattern& p, std::size_t level, std::size_t r) {
  if (!p.shifted(r, level).is_valid()) {
    // Still validate the indices.
    (void)elementary_factors(p, level, r);
    return {};
  }
  const Rational sq = elementary_factors(p, level, r).value();
  if (sq <= 0)
    throw InternalError("non-positive squared coefficient " + to_string(sq) + " for lawful shift of " + p.to_string() +
                        " at level " + std::to_string(level) + ", row " + std::to_string(r));
  return Surd::sqrt_of(sq);
}

Surd nonelementary_coefficient(const GTPattern& p, std::size_t ell, std::size_t n, std::span<const std::size_t> shifts) {
  if (ell < 1 || ell > n || n >= p.rank()) throw DomainError("need 1 <= l <= n < rank");
  if (shifts.size() != n - ell + 1) throw DomainError("need one shift index per level l..n");
  // shift index at level r
  auto idx = [&](std::size_t r) { return shifts[n - r]; };
  for (std::size_t r = ell; r <= n; ++r)
    if (idx(r) < 1 || idx(r) > r) throw DomainError("shift index out of range at level " + std::to_string(r));

  GTPattern target = p;
  for (std::size_t r = ell; r <= n; ++r) target = target.shifted(idx(r), r);
  if (!target.is_valid()) return {};

  std::vector<ElementaryFactors> fs;
  for (std::size_t r = ell; r <= n; ++r) fs.push_back(elementary_factors(p, r, idx(r)));
  auto at = [&](std::size_t r) -> ElementaryFactors& { return fs[r - ell]; };

  // Each correction factor x_r (x_r + 1) cancels the p = i_r entry of N^{r-1}'s upper
  // product and the l = i_{r-1} entry of N^r's lower product.
  for (std::size_t r = n; r > ell; --r) {
    const Rational x = p.label(idx(r), r) - p.label(idx(r - 1), r - 1) + as_long(idx(r - 1)) - as_long(idx(r));
    auto& up = at(r - 1).upper;
    auto& lo = at(r).lower;
    if (up[idx(r) - 1] != x || lo[idx(r - 1) - 1] != x + 1)
      throw InternalError("correction factor mismatch for " + p.to_string());
    up[idx(r) - 1] = 1;
    lo[idx(r - 1) - 1] = 1;
  }
  Rational sq = 1;
  for (const auto& f : fs) {
    for (const auto& d : f.denominator)
      if (d == 0)
        throw DegenerateError("vanishing denominator for lawful shift of " + p.to_string() + " (a_" +
                              std::to_string(ell) + "," + std::to_string(n + 1) + ")");
    sq *= f.value();
  }
  if (sq < 0) throw InternalError("negative squared nonelementary coefficient for " + p.to_string());
  return Surd::sqrt_of(sq);
}

void GlRep::negate_generator(std::size_t i, std::size_t j) {
  RepMatrix& g = gens_.at((i - 1) * rank() + (j - 1));
  g.entries = g.entries * -1.0;
  for (auto& e : g.exact) e.value = -e.value;
}

GlRep::GlRep(const HighestWeight& lambda) : basis_(std::make_shared<const GTBasis>(lambda)) {
  const std::size_t n = rank();
  const std::size_t d = dim();
  gens_.resize(n * n);
  auto slot = [&](std::size_t i, std::size_t j) -> RepMatrix& { return gens_[(i - 1) * n + (j - 1)]; };

  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<ExactEntry> diag;
    for (std::size_t s = 0; s < d; ++s) {
      const Rational w = pattern_weight((*basis_)[s])[k - 1];
      if (w != 0) diag.push_back({s, s, Surd(w > 0 ? 1 : -1, w * w)});
    }
    slot(k, k) = sparse_to_rep(k, k, GeneratorKind::Diagonal, d, std::move(diag));
  }

  for (std::size_t level = 1; level < n; ++level) {
    std::vector<ExactEntry> up;
    for (std::size_t s = 0; s < d; ++s) {
      const GTPattern& p = (*basis_)[s];
      for (std::size_t r = 1; r <= level; ++r) {
        Surd c = elementary_coefficient(p, level, r);
        if (c.is_zero()) continue;
        const std::size_t t = basis_->find(p.shifted(r, level));
        if (t == GTBasis::npos) throw InternalError("shifted pattern missing from basis");
        up.push_back({t, s, c});
      }
    }
    std::vector<ExactEntry> down;
    for (const auto& e : up) down.push_back({e.col, e.row, e.value});
    slot(level, level + 1) = sparse_to_rep(level, level + 1, GeneratorKind::Raising, d, std::move(up));
    slot(level + 1, level) = sparse_to_rep(level + 1, level, GeneratorKind::Lowering, d, std::move(down));
  }

  for (std::size_t gap = 2; gap < n; ++gap)
    for (std::size_t i = 1; i + gap <= n; ++i) {
      const std::size_t j = i + gap;
      Matrix m = commutator(slot(i, j - 1).entries, slot(j - 1, j).entries);
      Matrix t = m.transpose();
      slot(i, j) = RepMatrix{i, j, GeneratorKind::NonelementaryRaising, std::move(m), {}};
      slot(j, i) = RepMatrix{j, i, GeneratorKind::NonelementaryLowering, std::move(t), {}};
    }
}

std::vector<Matrix> GlRep::matrices() const {
  std::vector<Matrix> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.entries);
  return out;
}

RepMatrix build_generator(const HighestWeight& lambda, std::size_t i, std::size_t j) {
  GlRep rep(lambda);
  if (i < 1 || j < 1 || i > rep.rank() || j > rep.rank()) throw DomainError("generator index out of range");
  return rep.generator(i, j);
}

Matrix assemble_generator_matrix(const GlRep& rep) {
  const std::size_t n = rep.rank();
  const std::size_t d = rep.dim();
  Matrix big(n * d, n * d);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) big.set_block(i - 1, j - 1, rep.matrix(i, j));
  return big;
}

CasimirValue casimir_sigma(const GlRep& rep, unsigned order, const Tolerance& tol) {
  if (order < 1) throw DomainError("Casimir order must be >= 1");
  const Matrix big = assemble_generator_matrix(rep);
  const Matrix traced = partial_trace_block(matrix_power(big, order), rep.rank(), rep.dim());

  const double scalar = traced.trace() / static_cast<double>(rep.dim());
  const double residual = (traced - Matrix::identity(rep.dim()) * scalar).max_abs();
  if (residual > tol.threshold(std::abs(scalar)))
    throw InternalError("Schur violation: sigma_" + std::to_string(order) + " is not scalar on " +
                        rep.weight().to_string() + " (residual " + std::to_string(residual) + ")");

  // sigma_M has denominator dividing q^M where q is the common label denominator.
  BigInt q = 1;
  for (const auto& l : rep.weight().labels) q = boost::multiprecision::lcm(q, boost::multiprecision::denominator(l));
  BigInt den = 1;
  for (unsigned i = 0; i < order; ++i) den *= q;
  Rational value = round_to_denominator(scalar, den);
  if (std::abs(to_double(value) - scalar) > tol.threshold(std::abs(scalar)))
    throw InternalError("sigma_" + std::to_string(order) + " does not round to a rational within tolerance");
  return {order, value, residual};
}

Rational casimir_eigenvalue_formula(const HighestWeight& lambda, unsigned order) {
  const long n = as_long(lambda.rank());
  Rational out = 0;
  switch (order) {
    case 1:
      for (const auto& l : lambda.labels) out += l;
      return out;
    case 2:
      for (long j = 1; j <= n; ++j) {
        const Rational& l = lambda[static_cast<std::size_t>(j - 1)];
        out += l * (l + n + 1 - 2 * j);
      }
      return out;
    default:
      throw DomainError("closed-form Casimir eigenvalue only for orders 1 and 2");
  }
}

}  // namespace charid
