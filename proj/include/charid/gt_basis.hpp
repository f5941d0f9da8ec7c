#pragma once

#include "charid/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace charid {

/// Highest weight (lambda_1, ..., lambda_n) of a gl(n) irrep.
struct HighestWeight {
  std::vector<Rational> labels;

  std::size_t rank() const noexcept { return labels.size(); }
  const Rational& operator[](std::size_t i) const { return labels[i]; }

  /// Weakly decreasing labels.
  bool is_dominant() const;
  /// Dominant with integer differences; what pattern enumeration requires.
  bool is_integral_dominant() const;
  /// Throws DomainError unless `is_integral_dominant()`.
  void require_integral_dominant() const;

  /// Label list with `delta` added to entry `index` (0-based).
  HighestWeight shifted(std::size_t index, const Rational& delta) const;

  std::string to_string() const;  // "(2,1,0)"

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
  friend auto operator<=>(const HighestWeight& a, const HighestWeight& b) { return a.labels <=> b.labels; }
};

HighestWeight parse_highest_weight(std::string_view text);

/// Gelfand-Tsetlin pattern. Row `k` (1 <= k <= n) holds lambda_{1,k} ... lambda_{k,k};
/// row n is the highest weight.
class GTPattern {
 public:
  GTPattern() = default;
  /// Rows listed top first: rows[0] has length n, rows[n-1] has length 1.
  explicit GTPattern(std::vector<std::vector<Rational>> rows);

  std::size_t rank() const noexcept { return rows_.size(); }

  /// lambda_{i,level}, both 1-based.
  const Rational& label(std::size_t i, std::size_t level) const { return rows_[rank() - level][i - 1]; }
  const std::vector<Rational>& row(std::size_t level) const { return rows_[rank() - level]; }
  const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }

  HighestWeight top() const { return HighestWeight{rows_.front()}; }

  /// Copy with lambda_{i,level} increased by `delta`.
  GTPattern shifted(std::size_t i, std::size_t level, const Rational& delta = 1) const;

  /// Betweenness lambda_{i,k+1} >= lambda_{i,k} >= lambda_{i+1,k+1} with integer gaps.
  bool is_valid() const;

  std::string to_string() const;  // "[[2,1,0],[2,1],[2]]"

  friend bool operator==(const GTPattern&, const GTPattern&) = default;
  friend auto operator<=>(const GTPattern& a, const GTPattern& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// gl(n) weights occurring in the restriction of V(lambda) to gl(n-1), in canonical order.
std::vector<HighestWeight> branch(const HighestWeight& lambda);

/// All patterns with top row lambda. Canonical order: rows compared top first,
/// each row left to right, larger label first, so the highest weight state is ordinal 0.
std::vector<GTPattern> enumerate_patterns(const HighestWeight& lambda);

/// (w_1, ..., w_n), w_k = (sum of row k) - (sum of row k-1).
std::vector<Rational> pattern_weight(const GTPattern& p);

/// Weyl dimension formula.
BigInt dimension(const HighestWeight& lambda);

/// Ordered basis with reverse lookup.
class GTBasis {
 public:
  explicit GTBasis(const HighestWeight& lambda);

  const HighestWeight& weight() const noexcept { return weight_; }
  std::size_t rank() const noexcept { return weight_.rank(); }
  std::size_t size() const noexcept { return patterns_.size(); }
  const GTPattern& operator[](std::size_t ordinal) const { return patterns_[ordinal]; }
  const std::vector<GTPattern>& patterns() const noexcept { return patterns_; }

  /// Ordinal of `p`, or npos if it is not a basis pattern.
  std::size_t find(const GTPattern& p) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Ordinals grouped by row `level`, in canonical order of the row.
  std::vector<std::pair<HighestWeight, std::vector<std::size_t>>> isotypic_blocks(std::size_t level) const;

 private:
  HighestWeight weight_;
  std::vector<GTPattern> patterns_;
  std::map<GTPattern, std::size_t> index_;
};

}  // namespace charid
