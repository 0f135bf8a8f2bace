#include "lukas/series.hpp"

#include <algorithm>
#include <sstream>

#include "lukas/error.hpp"

namespace lukas {

namespace {

void require_order(int order) {
  if (order < 0) throw Error(Errc::ResourceLimit, "series order must be non-negative", order);
}

}  // namespace

Series::Series(int order) {
  require_order(order);
  coef_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

Series::Series(int order, std::vector<Rational> coefficients) : Series(order) {
  const std::size_t n = std::min(coef_.size(), coefficients.size());
  std::move(coefficients.begin(), coefficients.begin() + static_cast<std::ptrdiff_t>(n),
            coef_.begin());
}

Series Series::constant(int order, Rational c) {
  Series s(order);
  s.coef_[0] = std::move(c);
  return s;
}

Series Series::monomial(int order, int degree, Rational c) {
  Series s(order);
  if (degree >= 0 && degree <= order) s.coef_[static_cast<std::size_t>(degree)] = std::move(c);
  return s;
}

Series Series::from_integers(int order, const std::vector<std::int64_t>& coefficients) {
  Series s(order);
  for (std::size_t i = 0; i < coefficients.size() && i < s.coef_.size(); ++i) {
    s.coef_[i] = coefficients[i];
  }
  return s;
}

Series Series::truncated(int order) const {
  Series s(order);
  for (std::size_t i = 0; i < s.coef_.size() && i < coef_.size(); ++i) s.coef_[i] = coef_[i];
  return s;
}

Series& Series::operator+=(const Series& o) {
  coef_.resize(std::min(coef_.size(), o.coef_.size()));
  for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  coef_.resize(std::min(coef_.size(), o.coef_.size()));
  for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] -= o.coef_[i];
  return *this;
}

Series& Series::operator*=(const Series& o) {
  const std::size_t n = std::min(coef_.size(), o.coef_.size());
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coef_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (o.coef_[j] != 0) out[i + j] += coef_[i] * o.coef_[j];
    }
  }
  coef_ = std::move(out);
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  for (auto& a : coef_) a *= c;
  return *this;
}

Series Series::inverse() const {
  if (coef_.empty() || coef_[0] == 0) {
    throw Error(Errc::NonUnitConstantTerm, "cannot invert a series with zero constant term");
  }
  const std::size_t n = coef_.size();
  Series b(order());
  const Rational inv0 = 1 / coef_[0];
  b.coef_[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (coef_[j] != 0) acc += coef_[j] * b.coef_[k - j];
    }
    b.coef_[k] = -acc * inv0;
  }
  return b;
}

Series Series::shift_down(int m) const {
  if (m < 0) return shift_up(-m);
  if (m > order()) {
    throw Error(Errc::NotDivisible, "shift exceeds the series order", m);
  }
  for (int i = 0; i < m; ++i) {
    if (coef_[static_cast<std::size_t>(i)] != 0) {
      throw Error(Errc::NotDivisible,
                  "coefficient of x^" + std::to_string(i) + " is nonzero", i);
    }
  }
  Series s(order() - m);
  std::copy(coef_.begin() + m, coef_.end(), s.coef_.begin());
  return s;
}

Series Series::shift_up(int m) const {
  if (m < 0) return shift_down(-m);
  Series s(order());
  for (std::size_t i = static_cast<std::size_t>(m); i < coef_.size(); ++i) {
    s.coef_[i] = coef_[i - static_cast<std::size_t>(m)];
  }
  return s;
}

int Series::valuation() const {
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    if (coef_[i] != 0) return static_cast<int>(i);
  }
  return order() + 1;
}

std::vector<BigInt> Series::integers() const {
  std::vector<BigInt> out;
  out.reserve(coef_.size());
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    if (denominator(coef_[i]) != 1) {
      throw Error(Errc::NonIntegral,
                  "coefficient of x^" + std::to_string(i) + " is " + coef_[i].str(),
                  static_cast<long long>(i));
    }
    out.push_back(numerator(coef_[i]));
  }
  return out;
}

int agreement(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order()) + 1;
  for (int i = 0; i < n; ++i) {
    if (a[i] != b[i]) return i;
  }
  return n;
}

Series series_sqrt(const Series& s) {
  if (s.order() < 0 || s[0] != 1) {
    throw Error(Errc::NonUnitConstantTerm, "square root needs constant term 1");
  }
  // Newton on r^2 = s, doubling the number of correct coefficients each round.
  const int order = s.order();
  Series r = Series::constant(order, 1);
  const Rational half(1, 2);
  for (int precision = 1; precision <= order; precision *= 2) {
    const int next = std::min(order, 2 * precision);
    const Series rs = r.truncated(next);
    r = ((rs + s.truncated(next) / rs) * half).truncated(order);
  }
  return r;
}

std::string to_string(const Series& s) {
  std::ostringstream out;
  for (int i = 0; i <= s.order(); ++i) {
    if (i) out << ' ';
    out << s[i].str();
  }
  return out.str();
}

}  // namespace lukas
