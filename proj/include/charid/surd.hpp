#pragma once

#include "charid/rational.hpp"

#include <string>

namespace charid {

/// sign * sqrt(radicand). Products stay closed; sums do not, so callers
/// needing sums go through `to_double()`.
class Surd {
 public:
  Surd() = default;  // zero

  /// Throws DomainError for a negative radicand or a sign inconsistent with it.
  Surd(int sign, Rational radicand);

  /// Positive square root of a non-negative rational.
  static Surd sqrt_of(const Rational& radicand);

  int sign() const noexcept { return sign_; }
  const Rational& radicand() const noexcept { return radicand_; }
  bool is_zero() const noexcept { return sign_ == 0; }

  /// The exact square; always non-negative.
  Rational squared() const { return radicand_; }

  double to_double() const;

  /// "s*sqrt(p/q)" with s in {-1, 1}; "0" for zero.
  std::string to_string() const;

  Surd operator-() const { return Surd(-sign_, radicand_); }
  friend Surd operator*(const Surd& a, const Surd& b);
  friend bool operator==(const Surd& a, const Surd& b) = default;

 private:
  int sign_ = 0;
  Rational radicand_ = 0;
};

}  // namespace charid
