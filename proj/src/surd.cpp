#include "charid/surd.hpp"

#include "charid/error.hpp"

#include <cmath>

namespace charid {

Surd::Surd(int sign, Rational radicand) : sign_(sign), radicand_(std::move(radicand)) {
  if (radicand_ < 0) throw DomainError("negative radicand " + charid::to_string(radicand_));
  if (sign_ < -1 || sign_ > 1) throw DomainError("surd sign must be -1, 0 or 1");
  if ((sign_ == 0) != (radicand_ == 0)) throw DomainError("surd sign is zero iff radicand is zero");
}

Surd Surd::sqrt_of(const Rational& radicand) { return Surd(radicand == 0 ? 0 : 1, radicand); }

double Surd::to_double() const { return sign_ * std::sqrt(charid::to_double(radicand_)); }

std::string Surd::to_string() const {
  if (sign_ == 0) return "0";
  std::string out = sign_ < 0 ? "-1*sqrt(" : "1*sqrt(";
  out += boost::multiprecision::numerator(radicand_).str();
  out += '/';
  out += boost::multiprecision::denominator(radicand_).str();
  out += ')';
  return out;
}

Surd operator*(const Surd& a, const Surd& b) {
  return Surd(a.sign_ * b.sign_, a.radicand_ * b.radicand_);
}

}  // namespace charid
