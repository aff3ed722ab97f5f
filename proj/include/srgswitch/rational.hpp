#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>

#include "srgswitch/error.hpp"

namespace srgsw {

namespace detail {

template <class Int>
Int checked_mul(Int a, Int b) {
  if constexpr (std::is_integral_v<Int>) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("rational arithmetic overflow");
    return r;
  } else {
    return a * b;
  }
}

template <class Int>
Int checked_add(Int a, Int b) {
  if constexpr (std::is_integral_v<Int>) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw ResourceError("rational arithmetic overflow");
    return r;
  } else {
    return a + b;
  }
}

template <class Int>
Int gcd_abs(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

/// Exact rational number in lowest terms with a positive denominator.
///
/// Built-in integer instantiations detect overflow and throw ResourceError;
/// arbitrary precision integer types (boost cpp_int) never overflow.
template <class Int>
class BasicRational {
 public:
  BasicRational() = default;
  BasicRational(Int n) : num_(std::move(n)) {}  // NOLINT: implicit from integers is intended
  BasicRational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw ParameterError("rational with zero denominator");
    normalize();
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  BasicRational operator-() const { return BasicRational(-num_, den_, raw_tag{}); }

  friend BasicRational operator+(const BasicRational& a, const BasicRational& b) {
    const Int g = detail::gcd_abs(a.den_, b.den_);
    const Int da = a.den_ / g;
    const Int db = b.den_ / g;
    return {detail::checked_add(detail::checked_mul(a.num_, db), detail::checked_mul(b.num_, da)),
            detail::checked_mul(a.den_, db)};
  }
  friend BasicRational operator-(const BasicRational& a, const BasicRational& b) { return a + (-b); }
  friend BasicRational operator*(const BasicRational& a, const BasicRational& b) {
    const Int g1 = detail::gcd_abs(a.num_, b.den_);
    const Int g2 = detail::gcd_abs(b.num_, a.den_);
    const Int s1 = g1 == 0 ? Int(1) : g1;
    const Int s2 = g2 == 0 ? Int(1) : g2;
    return {detail::checked_mul(Int(a.num_ / s1), Int(b.num_ / s2)),
            detail::checked_mul(Int(a.den_ / s2), Int(b.den_ / s1))};
  }
  friend BasicRational operator/(const BasicRational& a, const BasicRational& b) {
    if (b.num_ == 0) throw ParameterError("rational division by zero");
    return a * BasicRational(b.den_, b.num_);
  }
  BasicRational& operator+=(const BasicRational& o) { return *this = *this + o; }
  BasicRational& operator-=(const BasicRational& o) { return *this = *this - o; }
  BasicRational& operator*=(const BasicRational& o) { return *this = *this * o; }
  BasicRational& operator/=(const BasicRational& o) { return *this = *this / o; }

  friend bool operator==(const BasicRational& a, const BasicRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const BasicRational& a, const BasicRational& b) {
    const Int l = detail::checked_mul(a.num_, b.den_);
    const Int r = detail::checked_mul(b.num_, a.den_);
    if (l < r) return std::strong_ordering::less;
    if (r < l) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicRational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  struct raw_tag {};
  BasicRational(Int n, Int d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const Int g = detail::gcd_abs(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_{0};
  Int den_{1};
};

using Rational = BasicRational<std::int64_t>;

}  // namespace srgsw
