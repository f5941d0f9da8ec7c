#pragma once

#include "charid/gl_rep.hpp"

#include <optional>
#include <span>
#include <vector>

namespace charid {

enum class CharKind { A, Abar, General };

const char* to_string(CharKind kind);
CharKind parse_char_kind(std::string_view text);

/// Operator-valued characteristic matrix realised on C^s (x) V(lambda).
/// Block (i,j) is the d x d matrix of the (i,j) entry.
struct CharMatrix {
  CharKind kind = CharKind::A;
  Matrix big;
  std::size_t aux_dim = 0;  // s
  std::size_t rep_dim = 0;  // d
  std::size_t level = 0;    // n of gl(n)
};

/// A: block (i,j) = pi(a_ij). Abar: block (i,j) = -pi(a_ji).
CharMatrix build_char_matrix(const GlRep& rep, CharKind kind);

/// -sum_{ij} pi_mu(a_ij) (x) pi_lambda(a_ji). `mu_gens` holds pi_mu(a_ij) in row-major (i,j) order.
CharMatrix build_general_char_matrix(std::span<const Matrix> mu_gens, const GlRep& lambda);

/// -1/2 [ (pi_mu (x) pi_lambda) Delta(sigma_2) - pi_mu(sigma_2) (x) I - I (x) pi_lambda(sigma_2) ],
/// assembled from the coproduct directly. Independent route to `build_general_char_matrix`.
Matrix coproduct_char_matrix(std::span<const Matrix> mu_gens, const GlRep& lambda);

/// e_ij on C^n, row-major (i,j).
std::vector<Matrix> vector_rep_matrices(std::size_t n);

/// pi*(a_ij) = -pi(a_ij)^T.
std::vector<Matrix> contragredient(std::span<const Matrix> gens);

struct Root {
  Rational value;
  std::vector<HighestWeight> constituents;
  /// Dimension of the eigenspace; 0 when the root is absent from this representation.
  BigInt multiplicity = 0;
};

struct CharSpectrum {
  CharKind kind = CharKind::A;
  std::vector<Root> roots;

  std::vector<Rational> values() const;
  bool present(std::size_t r) const { return roots.at(r).multiplicity > 0; }
};

/// alpha_j = lambda_j + n - j.
std::vector<Rational> roots_A(const HighestWeight& lambda);
/// alpha-bar_j = j - 1 - lambda_j = n - 1 - alpha_j.
std::vector<Rational> roots_Abar(const HighestWeight& lambda);

/// Roots of A (constituents lambda - Delta_j) or Abar (constituents lambda + Delta_j), in index order.
CharSpectrum char_roots(const HighestWeight& lambda, CharKind kind);

/// Candidate roots -1/2 [chi_nu(sigma_2) - chi_mu(sigma_2) - chi_lambda(sigma_2)] for
/// nu = lambda + w dominant, w a weight of V(mu). Equal values are merged. Multiplicities are 0
/// until `prune_to_observed` fills them.
CharSpectrum general_char_roots(const HighestWeight& lambda, const HighestWeight& mu);

struct ObservedSpectrum {
  std::vector<double> values;               // clustered eigenvalues, ascending
  std::vector<std::size_t> counts;
  double max_distance_to_candidates = 0.0;  // worst cluster distance to nearest candidate
};

/// Clusters the eigenvalues of cm.big within `tol` and compares them with the candidates.
ObservedSpectrum observe_spectrum(const CharMatrix& cm, const CharSpectrum& candidates, const Tolerance& tol);

/// Keeps candidates matched by an observed eigenvalue; multiplicity = eigenvalue count.
CharSpectrum prune_to_observed(const CharSpectrum& candidates, const ObservedSpectrum& observed, const Tolerance& tol);

struct ResidualReport {
  double residual = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

/// max|prod_nu (cm - alpha_nu)| with factors in ascending root order.
ResidualReport verify_identity(const CharMatrix& cm, std::span<const Rational> roots, const Tolerance& tol);
ResidualReport verify_identity(const CharMatrix& cm, const CharSpectrum& spectrum, const Tolerance& tol);

/// gl(1): A - sigma_1 = 0.
ResidualReport verify_gl1_identity(const GlRep& rep, const Tolerance& tol);
/// gl(2): A^2 - (sigma_1 + 1) A + 1/2 (sigma_1^2 + sigma_1 - sigma_2) = 0, sigmas from the closed forms.
ResidualReport verify_gl2_identity(const GlRep& rep, const Tolerance& tol);

struct Projector {
  std::size_t root_index = 0;
  Matrix matrix;
};

/// Lagrange projector prod_{l != r, present} (cm - alpha_l)/(alpha_r - alpha_l); zero for an
/// absent root. Throws DegenerateError if the spectrum lists a value twice.
Projector build_projector(const CharMatrix& cm, const CharSpectrum& spectrum, std::size_t r);

struct ProjectorAlgebra {
  double idempotency = 0.0;   // max_r |P_r^2 - P_r|
  double orthogonality = 0.0; // max_{r != s} |P_r P_s|
  double completeness = 0.0;  // |sum_r P_r - I|
  std::vector<long long> ranks;  // rounded traces
  double rank_rounding = 0.0;    // worst |trace - round(trace)|
};

ProjectorAlgebra projector_algebra(std::span<const Projector> projectors);

/// max |p(A) - sum_k p(alpha_k) P_k| over p(x) = 1, x, x^2 - 2x + 3 and x^3 - x.
double spectral_calculus_residual(const CharMatrix& cm, const CharSpectrum& spectrum,
                                  std::span<const Projector> projectors);

/// gl(n) projector P[n;r] (kind A) or P-bar[n;r] (kind Abar) on C^n (x) V where V is the gl(n+1)
/// irrep `rep` restricted to gl(n), n = rep.rank() - 1. Built block by block on each gl(n)
/// isotypic subspace with that subspace's roots.
Matrix restricted_projector(const GlRep& rep, CharKind kind, std::size_t r);

/// Restricted characteristic matrix of gl(n) on C^n (x) V(lambda_{n+1}).
Matrix restricted_char_matrix(const GlRep& rep, CharKind kind);

struct ShiftComponent {
  std::size_t r = 0;
  std::vector<Matrix> components;       // psi[n;r]_j = sum_i psi_i Pbar[n;r]_ij, j = 1..n
  double contraction_gap = 0.0;         // max |sum_i psi_i Pbar_ij - sum_i P_ji psi_i|
  double shift_leak = 0.0;              // largest entry not mapping row n mu to mu + Delta_r
};

/// Components of the vector operator psi_j = pi(a_{j,n+1}).
ShiftComponent shift_components(const GlRep& rep, std::size_t r);

enum class InvariantKind { C, Cbar, M, Mbar };

/// C_{k,n+1} / C-bar_{k,n+1} from root lists at levels n+1 and n.
Rational invariant_C_from_roots(std::span<const Rational> upper, std::span<const Rational> lower, std::size_t k,
                                InvariantKind kind);
/// M_{r,n} / M-bar_{r,n} from root lists at levels n+1 and n.
Rational invariant_M_from_roots(std::span<const Rational> upper, std::span<const Rational> lower, std::size_t r,
                                InvariantKind kind);

/// `lower` must interlace `upper` (rank n+1 over rank n; rank 0 allowed under rank 1).
Rational invariant_C_eigenvalue(const HighestWeight& upper, const HighestWeight& lower, std::size_t k,
                                InvariantKind kind);
Rational invariant_M_eigenvalue(const HighestWeight& upper, const HighestWeight& lower, std::size_t r,
                                InvariantKind kind);

/// Worst |P[n+1;k]_{n+1,n+1} - C_k| over k and isotypic blocks (kind C uses A, Cbar uses Abar).
double invariant_block_residual(const GlRep& rep, InvariantKind kind, const Tolerance& tol,
                                std::span<const Rational> upper_roots_override = {});

struct NormIdentityResiduals {
  double mbar = 0.0;  // psi[r] psi[r]^dagger - Mbar P[r]
  double m = 0.0;     // psi[r]^dagger psi[r] - M Pbar[r]
};

NormIdentityResiduals norm_identity_residuals(const GlRep& rep, std::size_t r);

struct ExactNormCheck {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::string first_mismatch;
};

/// (N^L_r)^2 == M_{r,L} * Cbar_{r,L} in exact arithmetic for every basis state, level and row.
ExactNormCheck exact_norm_check(const GlRep& rep);

struct ElementCrossCheck {
  std::size_t entries = 0;
  double max_gap = 0.0;
};

/// | |closed-form nonelementary coefficient| - |commutator-built entry| | over every a_{l,n+1}, l < n.
ElementCrossCheck nonelementary_cross_check(const GlRep& rep);

}  // namespace charid
