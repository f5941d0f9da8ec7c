#pragma once

#include "charid/char_identity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace charid {

/// gl(m|n) weight (Lambda_1..Lambda_m | Lambda_{m+1}..Lambda_{m+n}).
struct SuperWeight {
  std::vector<Rational> even;
  std::vector<Rational> odd;

  std::size_t m() const noexcept { return even.size(); }
  std::size_t n() const noexcept { return odd.size(); }
  /// Lambda_p, 1-based over the whole graded index range.
  const Rational& label(std::size_t p) const { return p <= m() ? even[p - 1] : odd[p - m() - 1]; }

  /// Weakly decreasing within each parity block.
  bool is_dominant() const;
  std::string to_string() const;  // "(2,1|3)"

  friend bool operator==(const SuperWeight&, const SuperWeight&) = default;
};

/// Accepts "a,b|c" or a flat list split after the first m labels.
SuperWeight parse_super_weight(std::string_view text, std::size_t m, std::size_t n);

/// (p) = 0 for p <= m, 1 otherwise.
inline int parity(std::size_t p, std::size_t m) { return p <= m ? 0 : 1; }

/// pi(a_pq) = e_pq on C^{m+n}, row-major (p,q).
std::vector<Matrix> super_vector_rep(std::size_t m, std::size_t n);

/// Worst residual of a_pq a_rs - s a_rs a_pq - (delta_qr a_ps - s delta_ps a_rq),
/// s = (-1)^{[(p)+(q)][(r)+(s)]}, over every index quadruple. With `graded = false`
/// every s is +1 (plain commutators).
double graded_relation_residual(std::span<const Matrix> gens, std::size_t m, std::size_t n, bool graded = true);

enum class ParityExponent { None, P, Q, PQ, PplusQ, PplusPQ, QplusPQ };

/// Entry (p,q) of a super characteristic matrix is sign * (-1)^exponent(p,q) * pi(a_pq),
/// or pi(a_qp) when `transpose` is set.
struct SuperConvention {
  bool transpose = false;
  int sign = 1;
  ParityExponent exponent = ParityExponent::None;

  std::string describe() const;
  friend bool operator==(const SuperConvention&, const SuperConvention&) = default;
};

/// Frozen outcome of `calibrate_super_conventions`: A_pq = (-1)^{(p)} a_pq.
inline constexpr SuperConvention kSuperConventionA{false, 1, ParityExponent::P};
/// A-bar_pq = -(-1)^{(p)(q)} a_qp.
inline constexpr SuperConvention kSuperConventionAbar{true, -1, ParityExponent::PQ};

/// Every candidate, in the order calibration tries them.
std::vector<SuperConvention> super_convention_candidates(CharKind kind);

/// (m+n)*d square matrix with block (p,q) the convention's entry.
Matrix super_char_matrix(std::span<const Matrix> gens, std::size_t m, std::size_t n, const SuperConvention& conv);

/// alpha_p = (-1)^{(p)} (Lambda_p + m - p) - n, or
/// alpha-bar_p = m - (-1)^{(p)} (Lambda_p + m + 1 - p); one per p = 1..m+n.
std::vector<Rational> super_char_roots(const SuperWeight& lambda, CharKind kind);

SuperWeight super_vector_weight(std::size_t m, std::size_t n);

/// prod_p (A - alpha_p) on the vector representation.
ResidualReport verify_super_identity(std::size_t m, std::size_t n, CharKind kind, const Tolerance& tol,
                                     const SuperConvention& conv);
ResidualReport verify_super_identity(std::size_t m, std::size_t n, CharKind kind, const Tolerance& tol = {});

struct CalibrationResult {
  SuperConvention a;
  SuperConvention abar;
};

/// Picks, for each kind, the first candidate whose identity holds on the vector representation
/// for every (m,n) in `grid`. Throws ConventionError (with the spectrum of the literal
/// candidate) if none does.
CalibrationResult calibrate_super_conventions(std::span<const std::pair<std::size_t, std::size_t>> grid,
                                              const Tolerance& tol = {});

enum class StarVerdict { TypicalType1, AtypicalType1, NotType1Star };

struct StarClassification {
  StarVerdict verdict = StarVerdict::NotType1Star;
  std::optional<std::size_t> witness;  // odd index mu in 1..n for the atypical case
};

const char* to_string(StarVerdict v);

/// Type 1 star test: typical iff lambda_m + lambda_nbar > n - 1; atypical iff some odd
/// mu has lambda_m + lambda_mu + 1 - mu = 0 = lambda_nbar - lambda_mu.
StarClassification classify_type1_star(const SuperWeight& lambda);

/// Non-negative integer labels, dominant per block, occurring in a tensor power of the
/// vector module: every j with Lambda_{m+j} > 0 satisfies j <= Lambda_m.
bool is_covariant(const SuperWeight& lambda);

/// Lambda_0 + gamma * (1..1|0..0) + omega * (-1..-1|1..1).
/// Requires gamma in {0..n-1} or gamma > n-1, and covariant Lambda_0.
SuperWeight compose_type1_weight(const SuperWeight& lambda0, const Rational& gamma, const Rational& omega);

/// Same arithmetic without the covariance and gamma checks.
SuperWeight shift_weight(const SuperWeight& lambda, const Rational& gamma, const Rational& omega);

}  // namespace charid
