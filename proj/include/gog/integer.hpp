#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace gog {

/// Arbitrary-precision integer usable as an Eigen scalar.
///
/// Wraps a cpp_int with expression templates disabled; the wrapper keeps
/// Boost's container detection away from Eigen's iterator-bearing types.
class Integer {
 public:
  using Raw = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                            boost::multiprecision::et_off>;

  Integer() = default;
  Integer(int x) : v_(x) {}
  Integer(long x) : v_(x) {}
  Integer(long long x) : v_(x) {}
  Integer(unsigned x) : v_(x) {}
  Integer(unsigned long x) : v_(x) {}
  Integer(Raw x) : v_(std::move(x)) {}

  static Integer from_string(const std::string& digits) { return Integer(Raw(digits)); }

  const Raw& raw() const { return v_; }

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(a.v_ + b.v_); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(a.v_ - b.v_); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(a.v_ * b.v_); }
  // Truncating division, as for built-in integers.
  friend Integer operator/(const Integer& a, const Integer& b) { return Integer(a.v_ / b.v_); }
  friend Integer operator%(const Integer& a, const Integer& b) { return Integer(a.v_ % b.v_); }
  Integer operator-() const { return Integer(-v_); }
  Integer& operator+=(const Integer& b) { v_ += b.v_; return *this; }
  Integer& operator-=(const Integer& b) { v_ -= b.v_; return *this; }
  Integer& operator*=(const Integer& b) { v_ *= b.v_; return *this; }

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    return a.v_.compare(b.v_) <=> 0;
  }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  std::int64_t to_int64() const { return v_.convert_to<std::int64_t>(); }
  std::string str() const { return v_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.v_; }

 private:
  Raw v_{0};
};

inline Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

inline Integer gcd(Integer a, Integer b) {
  return Integer(boost::multiprecision::gcd(abs(a).raw(), abs(b).raw()));
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(a * b) / gcd(a, b);
}

/// Floor division (rounds toward negative infinity).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (!(q * b == a) && ((a.sign() < 0) != (b.sign() < 0))) q -= Integer(1);
  return q;
}

using Rational = boost::rational<Integer::Raw>;

/// Renders a rational as "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return r.numerator().str();
  return r.numerator().str() + "/" + r.denominator().str();
}

}  // namespace gog

namespace Eigen {
template <>
struct NumTraits<gog::Integer> : GenericNumTraits<gog::Integer> {
  using Real = gog::Integer;
  using NonInteger = gog::Integer;
  using Nested = gog::Integer;
  using Literal = gog::Integer;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
