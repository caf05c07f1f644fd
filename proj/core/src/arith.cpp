#include "ceres/arith.hpp"

#include "ceres/error.hpp"

namespace ceres {

namespace {

std::uint64_t checkedMul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("arithmetic overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return r;
}

std::uint64_t checkedAdd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("arithmetic overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return r;
}

} // namespace

ArithExpr subst(const ArithExpr& a, const ArithExpr& b) {
  return {checkedMul(a.coeff, b.coeff),
          checkedAdd(checkedMul(a.coeff, b.offset), a.offset)};
}

std::uint64_t evalArith(const ArithExpr& a, std::uint64_t n) {
  return checkedAdd(checkedMul(a.coeff, n), a.offset);
}

ArithExpr maxExpr(const ArithExpr& a, const ArithExpr& b) {
  return {std::max(a.coeff, b.coeff), std::max(a.offset, b.offset)};
}

std::string toString(const ArithExpr& a) {
  if (a.coeff == 0) return std::to_string(a.offset);
  std::string head = a.coeff == 1 ? "n" : std::to_string(a.coeff) + "*n";
  if (a.offset == 0) return head;
  return head + "+" + std::to_string(a.offset);
}

} // namespace ceres
