#include "ceres/polynomial.hpp"

#include <numeric>

#include "ceres/error.hpp"

namespace ceres {

namespace {

std::int64_t checkedMul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("rational overflow (mul)");
  return r;
}

std::int64_t checkedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("rational overflow (add)");
  return r;
}

} // namespace

Rational::Rational(std::int64_t n) : num(n), den(1) {}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  return {checkedAdd(checkedMul(a.num, b.den), checkedMul(b.num, a.den)),
          checkedMul(a.den, b.den)};
}
Rational operator-(const Rational& a, const Rational& b) {
  return a + Rational{-b.num, b.den};
}
Rational operator*(const Rational& a, const Rational& b) {
  return {checkedMul(a.num, b.num), checkedMul(a.den, b.den)};
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.num == 0) throw Error("rational division by zero");
  return {checkedMul(a.num, b.den), checkedMul(a.den, b.num)};
}

bool operator<=(const Rational& a, const Rational& b) { return (a - b).num <= 0; }
bool operator<(const Rational& a, const Rational& b) { return (a - b).num < 0; }

std::string toString(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Polynomial trim(Polynomial p) {
  while (!p.coeffs.empty() && p.coeffs.back() == Rational{0}) p.coeffs.pop_back();
  return p;
}

Polynomial Polynomial::constant(Rational c) {
  return trim(Polynomial{{c}});
}

Polynomial Polynomial::var() { return Polynomial{{Rational{0}, Rational{1}}}; }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Rational{0});
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = r.coeffs[i] + a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] = r.coeffs[i] + b.coeffs[i];
  return trim(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  Polynomial r;
  r.coeffs.resize(a.coeffs.size() + b.coeffs.size() - 1, Rational{0});
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] = r.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
  return trim(std::move(r));
}

Rational evalPoly(const Polynomial& p, const Rational& x) {
  Rational acc{0};
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational evalPoly(const Polynomial& p, std::uint64_t n) {
  if (n > static_cast<std::uint64_t>(INT64_MAX)) throw OverflowError("polynomial argument too large");
  return evalPoly(p, Rational{static_cast<std::int64_t>(n)});
}

Polynomial composeLinear(const Polynomial& p, std::uint64_t c, std::uint64_t d) {
  Polynomial lin{{Rational{static_cast<std::int64_t>(d)}, Rational{static_cast<std::int64_t>(c)}}};
  lin = trim(std::move(lin));
  Polynomial acc;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
    acc = acc * lin + Polynomial::constant(*it);
  return acc;
}

Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  Polynomial acc;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Polynomial term = Polynomial::constant(points[i].second);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      Rational dx = points[i].first - points[j].first;
      Polynomial lin{{Rational{0} - points[j].first / dx, Rational{1} / dx}};
      term = term * trim(std::move(lin));
    }
    acc = acc + term;
  }
  return acc;
}

Polynomial iterateSum(const Rational& k, const Polynomial& p) {
  std::size_t nodes = p.coeffs.size() + 2;
  std::vector<std::pair<Rational, Rational>> pts;
  Rational acc = k;
  for (std::size_t i = 0; i < nodes; ++i) {
    pts.push_back({Rational{static_cast<std::int64_t>(i)}, acc});
    acc = acc + evalPoly(p, Rational{static_cast<std::int64_t>(i)});
  }
  return interpolate(pts);
}

std::string toString(const Polynomial& p) {
  if (p.coeffs.empty()) return "0";
  std::string out;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    const auto& c = p.coeffs[i];
    if (c == Rational{0}) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += toString(c);
    } else {
      if (!(c == Rational{1})) out += toString(c) + "*";
      out += i == 1 ? "n" : "n^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

} // namespace ceres
