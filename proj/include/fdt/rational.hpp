#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>

namespace fdt {

// Exact nonnegative rational kept in lowest terms. Derivative orders,
// monomial exponents and the series grid step all live on a rational
// grid; deciding "is this an integer multiple of alpha" must be exact,
// so no floating point is allowed in here.
class RationalOrder {
 public:
  constexpr RationalOrder() = default;

  RationalOrder(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("invalid order: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ < 0) throw std::invalid_argument("invalid order: negative value");
    const std::int64_t g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  constexpr bool is_zero() const { return num_ == 0; }
  constexpr bool is_integer() const { return den_ == 1; }

  RationalOrder times(std::int64_t k) const { return RationalOrder(num_ * k, den_); }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend constexpr bool operator==(const RationalOrder& a, const RationalOrder& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr bool operator<(const RationalOrder& a, const RationalOrder& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend constexpr bool operator<=(const RationalOrder& a, const RationalOrder& b) {
    return a.num_ * b.den_ <= b.num_ * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline RationalOrder normalize(std::int64_t num, std::int64_t den) {
  return RationalOrder(num, den);
}

// Grid step shared by a set of orders: alpha = 1/L with L the least common
// multiple of all denominators and of 1, so 1/alpha is always an integer
// and every input order sits on the grid.
inline RationalOrder select_alpha(std::span<const RationalOrder> orders) {
  if (orders.empty()) throw std::invalid_argument("select_alpha: empty order list");
  std::int64_t l = 1;
  for (const auto& o : orders) {
    if (o.is_zero()) throw std::invalid_argument("select_alpha: nonpositive order");
    l = std::lcm(l, o.den());
  }
  return RationalOrder(1, l);
}

inline RationalOrder select_alpha(std::initializer_list<RationalOrder> orders) {
  return select_alpha(std::span<const RationalOrder>(orders.begin(), orders.size()));
}

// k with k*alpha == order, exact.
inline std::int64_t index_of(const RationalOrder& order, const RationalOrder& alpha) {
  if (alpha.is_zero()) throw std::invalid_argument("index_of: zero grid step");
  const std::int64_t num = order.num() * alpha.den();
  const std::int64_t den = order.den() * alpha.num();
  if (num % den != 0) throw std::invalid_argument("order not on grid: " + order.str() + " vs alpha " + alpha.str());
  return num / den;
}

}  // namespace fdt
