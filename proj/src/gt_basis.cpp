#include "charid/gt_basis.hpp"

#include "charid/error.hpp"

#include <algorithm>
#include <functional>

namespace charid {

bool HighestWeight::is_dominant() const {
  for (std::size_t i = 0; i + 1 < labels.size(); ++i)
    if (labels[i] < labels[i + 1]) return false;
  return true;
}

bool HighestWeight::is_integral_dominant() const {
  if (labels.empty()) return false;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
    const Rational diff = labels[i] - labels[i + 1];
    if (diff < 0 || !is_integer(diff)) return false;
  }
  return true;
}

void HighestWeight::require_integral_dominant() const {
  if (labels.empty()) throw DomainError("highest weight has no labels");
  if (!is_integral_dominant())
    throw DomainError("weight " + to_string() + " is not dominant with integer differences");
}

HighestWeight HighestWeight::shifted(std::size_t index, const Rational& delta) const {
  HighestWeight out = *this;
  out.labels.at(index) += delta;
  return out;
}

std::string HighestWeight::to_string() const { return "(" + join(labels, ",") + ")"; }

HighestWeight parse_highest_weight(std::string_view text) { return HighestWeight{parse_rational_list(text)}; }

GTPattern::GTPattern(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  for (std::size_t k = 0; k < rows_.size(); ++k)
    if (rows_[k].size() != rows_.size() - k) throw DimensionError("pattern rows must be triangular");
}

GTPattern GTPattern::shifted(std::size_t i, std::size_t level, const Rational& delta) const {
  GTPattern out = *this;
  out.rows_[rank() - level][i - 1] += delta;
  return out;
}

bool GTPattern::is_valid() const {
  for (std::size_t k = 0; k + 1 < rows_.size(); ++k) {
    const auto& upper = rows_[k];
    const auto& lower = rows_[k + 1];
    for (std::size_t i = 0; i < lower.size(); ++i) {
      const Rational a = upper[i] - lower[i];
      const Rational b = lower[i] - upper[i + 1];
      if (a < 0 || b < 0 || !is_integer(a) || !is_integer(b)) return false;
    }
  }
  return true;
}

std::string GTPattern::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (k) out += ',';
    out += "[" + join(rows_[k], ",") + "]";
  }
  return out + "]";
}

namespace {

// Every row interlacing below `upper`, in canonical (descending lexicographic) order.
std::vector<std::vector<Rational>> interlacing_rows(const std::vector<Rational>& upper) {
  std::vector<std::vector<Rational>> out;
  const std::size_t len = upper.size() - 1;
  std::vector<Rational> cur(len);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == len) {
      out.push_back(cur);
      return;
    }
    for (Rational v = upper[i]; v >= upper[i + 1]; v -= 1) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<HighestWeight> branch(const HighestWeight& lambda) {
  lambda.require_integral_dominant();
  if (lambda.rank() < 2) throw DomainError("branching needs gl(n+1) with n >= 1");
  std::vector<HighestWeight> out;
  for (auto& row : interlacing_rows(lambda.labels)) out.push_back(HighestWeight{std::move(row)});
  return out;
}

std::vector<GTPattern> enumerate_patterns(const HighestWeight& lambda) {
  lambda.require_integral_dominant();
  std::vector<GTPattern> out;
  std::vector<std::vector<Rational>> rows{lambda.labels};
  std::function<void()> rec = [&]() {
    if (rows.back().size() == 1) {
      out.emplace_back(rows);
      return;
    }
    for (auto& next : interlacing_rows(rows.back())) {
      rows.push_back(std::move(next));
      rec();
      rows.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<Rational> pattern_weight(const GTPattern& p) {
  std::vector<Rational> w(p.rank());
  Rational below = 0;
  for (std::size_t k = 1; k <= p.rank(); ++k) {
    Rational sum = 0;
    for (const auto& v : p.row(k)) sum += v;
    w[k - 1] = sum - below;
    below = sum;
  }
  return w;
}

BigInt dimension(const HighestWeight& lambda) {
  lambda.require_integral_dominant();
  Rational d = 1;
  const std::size_t n = lambda.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      d *= Rational(lambda[i] - lambda[j] + static_cast<long>(j - i)) / static_cast<long>(j - i);
  if (!is_integer(d)) throw InternalError("Weyl dimension is not an integer for " + lambda.to_string());
  return boost::multiprecision::numerator(d);
}

GTBasis::GTBasis(const HighestWeight& lambda) : weight_(lambda), patterns_(enumerate_patterns(lambda)) {
  for (std::size_t i = 0; i < patterns_.size(); ++i) index_.emplace(patterns_[i], i);
}

std::size_t GTBasis::find(const GTPattern& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? npos : it->second;
}

std::vector<std::pair<HighestWeight, std::vector<std::size_t>>> GTBasis::isotypic_blocks(std::size_t level) const {
  std::vector<std::pair<HighestWeight, std::vector<std::size_t>>> out;
  for (std::size_t s = 0; s < patterns_.size(); ++s) {
    HighestWeight mu{patterns_[s].row(level)};
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == mu; });
    if (it == out.end())
      out.emplace_back(std::move(mu), std::vector<std::size_t>{s});
    else
      it->second.push_back(s);
  }
  return out;
}

}  // namespace charid
