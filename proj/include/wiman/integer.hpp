#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

namespace wiman {

/// Arbitrary-precision signed integer.
///
/// A thin value wrapper around boost's cpp_int. The wrapper exists so the
/// type can serve as an Eigen scalar: Eigen's scalar-promotion traits trip
/// over cpp_int's byte-container constructor when used directly.
class Integer {
 public:
  using Big = boost::multiprecision::cpp_int;

  Integer() = default;
  Integer(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(long v) : v_(v) {}       // NOLINT(google-explicit-constructor)
  Integer(int v) : v_(v) {}        // NOLINT(google-explicit-constructor)
  explicit Integer(Big v) : v_(std::move(v)) {}

  const Big& big() const { return v_; }

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(Big(a.v_ + b.v_)); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(Big(a.v_ - b.v_)); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(Big(a.v_ * b.v_)); }
  /// Truncating division, as for built-in integers.
  friend Integer operator/(const Integer& a, const Integer& b) { return Integer(Big(a.v_ / b.v_)); }
  /// Remainder with the sign of the dividend.
  friend Integer operator%(const Integer& a, const Integer& b) { return Integer(Big(a.v_ % b.v_)); }
  Integer operator-() const { return Integer(Big(-v_)); }

  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c == 0 ? std::strong_ordering::equal : std::strong_ordering::greater);
  }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  bool is_even() const { return !boost::multiprecision::bit_test(abs_big(), 0); }

  /// Narrowing conversion; throws std::overflow_error when out of range.
  std::int64_t to_int64() const;
  std::string str() const { return v_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.v_; }

 private:
  Big abs_big() const { return v_ < 0 ? Big(-v_) : v_; }
  Big v_;
};

Integer abs(const Integer& a);
/// Floor division (rounds toward negative infinity).
Integer floor_div(const Integer& a, const Integer& b);
/// Remainder in [0, |m|).
Integer mod(const Integer& a, const Integer& m);
Integer gcd(const Integer& a, const Integer& b);
std::int64_t mod_small(const Integer& a, std::int64_t m);

/// Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0.
struct ExtendedGcd {
  Integer g, x, y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// Exact rational number; used for the real embeddings and for change-of-basis matrices.
class Rational {
 public:
  using Big = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}       // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(v) {}        // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : v_(v.big()) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(Big v) : v_(std::move(v)) {}

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Big(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Big(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Big(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { return Rational(Big(a.v_ / b.v_)); }
  Rational operator-() const { return Rational(Big(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.v_ < b.v_ ? std::strong_ordering::less
                       : (a.v_ == b.v_ ? std::strong_ordering::equal : std::strong_ordering::greater);
  }

  Integer numerator() const { return Integer(boost::multiprecision::numerator(v_)); }
  Integer denominator() const { return Integer(boost::multiprecision::denominator(v_)); }
  bool is_integer() const { return denominator() == Integer(1); }
  int sign() const { return v_.sign(); }
  std::string str() const { return v_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.v_; }

 private:
  Big v_;
};

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<Integer>;
using IntVector = VectorX<Integer>;
using RatMatrix = MatrixX<Rational>;

/// Entrywise conversion of an integer matrix to rationals.
template <typename Derived>
auto to_rational(const Eigen::MatrixBase<Derived>& m) {
  return m.template cast<Rational>().eval();
}

}  // namespace wiman

namespace Eigen {

template <>
struct NumTraits<wiman::Integer> : GenericNumTraits<wiman::Integer> {
  using Real = wiman::Integer;
  using NonInteger = wiman::Rational;
  using Nested = wiman::Integer;
  using Literal = wiman::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 16
  };
  static wiman::Integer epsilon() { return 0; }
  static wiman::Integer dummy_precision() { return 0; }
  static wiman::Integer highest() { return 0; }
  static wiman::Integer lowest() { return 0; }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<wiman::Rational> : GenericNumTraits<wiman::Rational> {
  using Real = wiman::Rational;
  using NonInteger = wiman::Rational;
  using Nested = wiman::Rational;
  using Literal = wiman::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 16,
    MulCost = 32
  };
  static wiman::Rational epsilon() { return 0; }
  static wiman::Rational dummy_precision() { return 0; }
  static wiman::Rational highest() { return 0; }
  static wiman::Rational lowest() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen

template <>
struct std::hash<wiman::Integer> {
  std::size_t operator()(const wiman::Integer& v) const noexcept {
    return std::hash<std::string>{}(v.str());
  }
};
