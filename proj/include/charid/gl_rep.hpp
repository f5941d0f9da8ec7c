#pragma once

#include "charid/gt_basis.hpp"
#include "charid/matrix.hpp"
#include "charid/surd.hpp"

#include <memory>
#include <span>
#include <vector>

namespace charid {

struct ExactEntry {
  std::size_t row;
  std::size_t col;
  Surd value;
};

enum class GeneratorKind { Diagonal, Raising, Lowering, NonelementaryRaising, NonelementaryLowering };

/// pi(a_ij) on the GT basis. `exact` is filled for diagonal and elementary generators.
struct RepMatrix {
  std::size_t i = 0;  // 1-based
  std::size_t j = 0;
  GeneratorKind kind = GeneratorKind::Diagonal;
  Matrix entries;
  std::vector<ExactEntry> exact;
};

/// Finite-dimensional irrep V(lambda) of gl(n) with all n^2 generators built.
///
/// Diagonal and elementary generators come from the closed forms; a_{l,k} with
/// k > l+1 is defined as [a_{l,k-1}, a_{k-1,k}] (which fixes the phases) and
/// lowering generators are transposes of raising ones.
class GlRep {
 public:
  explicit GlRep(const HighestWeight& lambda);

  const HighestWeight& weight() const noexcept { return basis_->weight(); }
  const GTBasis& basis() const noexcept { return *basis_; }
  std::size_t rank() const noexcept { return basis_->rank(); }
  std::size_t dim() const noexcept { return basis_->size(); }

  const RepMatrix& generator(std::size_t i, std::size_t j) const { return gens_[(i - 1) * rank() + (j - 1)]; }
  const Matrix& matrix(std::size_t i, std::size_t j) const { return generator(i, j).entries; }

  /// pi(a_ij) for (i,j) in row-major order.
  std::vector<Matrix> matrices() const;

  /// Replaces pi(a_ij) by -pi(a_ij). Breaks the algebra; used by negative controls only.
  void negate_generator(std::size_t i, std::size_t j);

 private:
  std::shared_ptr<const GTBasis> basis_;
  std::vector<RepMatrix> gens_;
};

/// Builds V(lambda) and returns pi(a_ij).
RepMatrix build_generator(const HighestWeight& lambda, std::size_t i, std::size_t j);

/// Factorised square of the elementary coefficient N^level_r:
/// sign * prod(upper) * prod(lower) / prod(denominator).
struct ElementaryFactors {
  int sign = 1;
  std::vector<Rational> upper;        // (lambda_{p,level+1} - lambda_{r,level} + r - p), p = 1..level+1
  std::vector<Rational> lower;        // (lambda_{r,level} - lambda_{l,level-1} + l - r + 1), l = 1..level-1
  std::vector<Rational> denominator;  // pairs x, x+1 with x = lambda_{r,level} - lambda_{l,level} + l - r, l != r

  Rational value() const;
};

ElementaryFactors elementary_factors(const GTPattern& p, std::size_t level, std::size_t r);

/// Coefficient of |p + Delta_{r,level}> in a_{level,level+1}|p>, positive root taken.
/// Zero when the shifted pattern leaves the betweenness lattice.
Surd elementary_coefficient(const GTPattern& p, std::size_t level, std::size_t r);

/// |coefficient| of |p + Delta_{i_n,n} + ... + Delta_{i_l,l}> in a_{l,n+1}|p>.
/// `shifts` lists (i_n, ..., i_l). The ratio of elementary factors is simplified
/// exactly before evaluation, so no 0/0 arises on lawful shifts.
Surd nonelementary_coefficient(const GTPattern& p, std::size_t ell, std::size_t n, std::span<const std::size_t> shifts);

struct CasimirValue {
  unsigned order = 0;
  Rational value;
  double residual = 0.0;  // distance of the partial trace from value * I
};

/// sum_{ij} e_ij (x) pi(a_ij), the (n*d) x (n*d) generator matrix.
Matrix assemble_generator_matrix(const GlRep& rep);

/// sigma_M = tr(A^M) traced over the gl index. Throws InternalError ("Schur violation")
/// if the trace is not scalar within `tol`.
CasimirValue casimir_sigma(const GlRep& rep, unsigned order, const Tolerance& tol = {});

/// sigma_1 = sum lambda_j, sigma_2 = sum lambda_j (lambda_j + n + 1 - 2j).
Rational casimir_eigenvalue_formula(const HighestWeight& lambda, unsigned order);

}  // namespace charid
