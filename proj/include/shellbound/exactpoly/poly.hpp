#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shellbound/exactpoly/rational.hpp"

namespace shellbound {

// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of u^i;
// the leading coefficient is nonzero unless the polynomial is zero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);
  // c0 + c1 u
  static Poly linear(const Rational& c0, const Rational& c1);

  // nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const;

  Rational operator()(const Rational& u) const;

  // p(-u)
  Poly reflected() const;
  bool is_odd() const;
  bool is_even() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator-(const Poly& p);
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly p, const Rational& s) { return p *= s; }
  friend Poly operator*(const Rational& s, Poly p) { return p *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  // Human-readable, highest degree first, e.g. "160/1*u^3 + -40/1*u".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace shellbound
