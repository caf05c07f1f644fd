#pragma once

#include <cstdint>
#include <string>

namespace ceres {

/// Linear arithmetic expression coeff*n + offset over naturals.
struct ArithExpr {
  std::uint64_t coeff{0};
  std::uint64_t offset{0};

  friend bool operator==(const ArithExpr&, const ArithExpr&) = default;
  friend auto operator<=>(const ArithExpr&, const ArithExpr&) = default;

  static ArithExpr constant(std::uint64_t c) { return {0, c}; }
  static ArithExpr var() { return {1, 0}; }

  bool isConstant() const { return coeff == 0; }
};

// Substitution a[n -> b]: (a1*b1)*n + (a1*b2 + a2). Total on naturals;
// throws OverflowError on 64-bit overflow.
ArithExpr subst(const ArithExpr& a, const ArithExpr& b);

// a | N = coeff*N + offset, overflow-checked.
std::uint64_t evalArith(const ArithExpr& a, std::uint64_t n);

// Componentwise max; dominates both arguments pointwise.
ArithExpr maxExpr(const ArithExpr& a, const ArithExpr& b);

// Rendering: "c*n+d", with "d" when c=0, "n+d" when c=1, "c*n" when d=0.
std::string toString(const ArithExpr& a);

} // namespace ceres
