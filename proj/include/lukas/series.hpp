#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lukas {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Truncated power series a_0 + a_1 x + ... + a_N x^N with exact rational
/// coefficients. Binary operations truncate to the smaller order.
class Series {
 public:
  Series() = default;
  explicit Series(int order);
  Series(int order, std::vector<Rational> coefficients);

  static Series constant(int order, Rational c);
  static Series monomial(int order, int degree, Rational c = 1);  // c x^degree
  static Series from_integers(int order, const std::vector<std::int64_t>& coefficients);

  int order() const noexcept { return static_cast<int>(coef_.size()) - 1; }
  const Rational& operator[](int i) const { return coef_.at(static_cast<std::size_t>(i)); }
  Rational& operator[](int i) { return coef_.at(static_cast<std::size_t>(i)); }
  const std::vector<Rational>& coefficients() const noexcept { return coef_; }

  Series truncated(int order) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  Series& operator*=(const Rational& c);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Series& b) { return a *= b; }
  friend Series operator*(Series a, const Rational& c) { return a *= c; }
  friend Series operator*(const Rational& c, Series a) { return a *= c; }
  friend Series operator-(Series a) { return a *= Rational(-1); }
  friend Series operator+(Series a, const Rational& c) {
    a.coef_[0] += c;
    return a;
  }
  friend Series operator+(const Rational& c, Series a) { return std::move(a) + c; }
  friend Series operator-(Series a, const Rational& c) {
    a.coef_[0] -= c;
    return a;
  }
  friend Series operator-(const Rational& c, Series a) { return -std::move(a) + c; }

  /// Multiplicative inverse; throws Errc::NonUnitConstantTerm when a_0 == 0.
  Series inverse() const;
  friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

  /// Divides by x^m. Throws Errc::NotDivisible if a coefficient below m is
  /// nonzero; the result has order N - m.
  Series shift_down(int m) const;
  /// Multiplies by x^m, keeping the order.
  Series shift_up(int m) const;

  /// Index of the first nonzero coefficient, or order() + 1 when all vanish.
  int valuation() const;

  /// Coefficients as integers; throws Errc::NonIntegral otherwise.
  std::vector<BigInt> integers() const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> coef_;
};

/// Number of leading coefficients on which a and b agree.
int agreement(const Series& a, const Series& b);

/// Square root with constant term 1 (Newton iteration).
/// Throws Errc::NonUnitConstantTerm when a_0 != 1.
Series series_sqrt(const Series& s);

std::string to_string(const Series& s);

}  // namespace lukas
