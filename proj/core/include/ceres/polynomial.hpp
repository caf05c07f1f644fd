#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ceres {

/// Exact rational over checked 64-bit integers, always in lowest terms with
/// positive denominator.
struct Rational {
  std::int64_t num{0};
  std::int64_t den{1};

  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);
Rational operator/(const Rational& a, const Rational& b);
bool operator<=(const Rational& a, const Rational& b);
bool operator<(const Rational& a, const Rational& b);
std::string toString(const Rational& r);

// Polynomial over Q in the parameter n; coefficients c0..cd with trailing
// zeros trimmed.
struct Polynomial {
  std::vector<Rational> coeffs;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  static Polynomial constant(Rational c);
  static Polynomial var();

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool isZero() const { return coeffs.empty(); }
};

Polynomial trim(Polynomial p);
Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Rational evalPoly(const Polynomial& p, const Rational& x);
Rational evalPoly(const Polynomial& p, std::uint64_t n);

// Compose p with the linear expression cn+d, exactly.
Polynomial composeLinear(const Polynomial& p, std::uint64_t c, std::uint64_t d);

// Unique polynomial of degree < points.size() through the given nodes
// (exact Lagrange interpolation).
Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

// Lemma-6 closed form: the q with q(0) = k and q(n+1) = q(n) + p(n), i.e.
// q(n) = k + sum_{i<n} p(i). Built by interpolation at deg(p)+2 nodes.
Polynomial iterateSum(const Rational& k, const Polynomial& p);

std::string toString(const Polynomial& p);

} // namespace ceres
