#include "charid/rational.hpp"

#include "charid/error.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace charid {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw DomainError("malformed number '" + std::string(whole) + "'");
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw DomainError("malformed number '" + std::string(whole) + "'");
  BigInt out = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw DomainError("malformed number '" + std::string(whole) + "'");
    out = out * 10 + (c - '0');
  }
  return negative ? BigInt(-out) : out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(trim(s.substr(0, slash)), text);
    BigInt den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    if (den < 0) {  // boost rejects a negative denominator
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto int_part = s.substr(0, dot);
    auto frac_part = s.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (int_part.empty() || int_part == "-" || int_part == "+") int_part = "0";
    BigInt whole = parse_integer(int_part, text);
    BigInt frac = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, text);
    if (!frac_part.empty() && (frac_part.front() == '-' || frac_part.front() == '+'))
      throw DomainError("malformed number '" + std::string(text) + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    BigInt magnitude = (whole < 0 ? BigInt(-whole) : whole) * scale + frac;
    Rational r(magnitude, scale);
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_integer(s, text));
}

std::string to_string(const Rational& value) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(value);
  if (boost::multiprecision::denominator(value) != 1) os << '/' << boost::multiprecision::denominator(value);
  return os.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

bool is_integer(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

BigInt floor(const Rational& value) {
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  const auto s = trim(text);
  if (s.empty()) throw DomainError("empty weight list");
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    out.push_back(parse_rational(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(std::span<const Rational> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += to_string(values[i]);
  }
  return out;
}

Rational round_to_denominator(double x, const BigInt& denominator) {
  if (!std::isfinite(x)) throw NumericError("cannot round a non-finite value");
  const double scaled = x * denominator.convert_to<double>();
  BigInt n(static_cast<long long>(std::llround(scaled)));
  return Rational(n, denominator);
}

}  // namespace charid
