#pragma once

// Arithmetic in the golden-ratio order O = Z[X]/(X^2 - X - 1), its index-two
// subring O0 = Z + Z*2X, and the finite residue rings used for level structures.

#include "wiman/errors.hpp"
#include "wiman/integer.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace wiman {

/// a + bX with X^2 = X + 1.
class OrderElement {
 public:
  OrderElement() = default;
  OrderElement(int a) : a_(a) {}        // NOLINT(google-explicit-constructor)
  OrderElement(long long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  OrderElement(long a) : a_(a) {}       // NOLINT(google-explicit-constructor)
  OrderElement(Integer a, Integer b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT

  static OrderElement X() { return {0, 1}; }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool in_O0() const { return b_.is_even(); }

  friend OrderElement operator+(const OrderElement& x, const OrderElement& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend OrderElement operator-(const OrderElement& x, const OrderElement& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend OrderElement operator*(const OrderElement& x, const OrderElement& y) {
    const Integer bd = x.b_ * y.b_;
    return {x.a_ * y.a_ + bd, x.a_ * y.b_ + x.b_ * y.a_ + bd};
  }
  OrderElement operator-() const { return {-a_, -b_}; }
  OrderElement& operator+=(const OrderElement& o) { return *this = *this + o; }
  OrderElement& operator-=(const OrderElement& o) { return *this = *this - o; }
  OrderElement& operator*=(const OrderElement& o) { return *this = *this * o; }

  friend bool operator==(const OrderElement&, const OrderElement&) = default;
  friend auto operator<=>(const OrderElement&, const OrderElement&) = default;

 private:
  Integer a_ = 0;
  Integer b_ = 0;
};

/// a^2 + ab - b^2.
Integer norm(const OrderElement& x);
/// 2a + b.
Integer trace(const OrderElement& x);
/// X -> 1 - X.
OrderElement galois_conj(const OrderElement& x);
bool is_unit(const OrderElement& x);
/// Throws NotAUnit unless |norm| = 1.
OrderElement inverse(const OrderElement& x);
/// x^k; negative k requires a unit.
OrderElement power(const OrderElement& x, long long k);

/// Rendering "a+bX": zero terms omitted, "X" rather than "1X", "0" for zero.
std::string to_string(const OrderElement& x);
std::ostream& operator<<(std::ostream& os, const OrderElement& x);
/// Parses the grammar produced by to_string (whitespace tolerated). Throws ParseError.
OrderElement parse_order_element(std::string_view text);

/// Quotient and remainder for the norm-Euclidean division in O: |norm(r)| < |norm(b)|.
struct DivMod {
  OrderElement quotient, remainder;
};
DivMod divmod(const OrderElement& a, const OrderElement& b);
/// A greatest common divisor in O, defined up to a unit.
OrderElement gcd(const OrderElement& a, const OrderElement& b);
/// Exact quotient a / b; throws when b does not divide a in O.
OrderElement exact_div(const OrderElement& a, const OrderElement& b);

// ---------------------------------------------------------------------------
// Residue rings

enum class ResidueKind {
  F4,      // O / 2O
  F2Y,     // O0 / 2O0 = F2[Y]/(Y^2), Y = 2X
  F5,      // O0 / (2X - 1)
  ZnPair,  // O0 / nO0 in the basis (1, Y), Y^2 = 2Y + 4
};

struct ResidueRing {
  ResidueKind kind = ResidueKind::F5;
  std::int64_t modulus = 5;  // n for ZnPair; the characteristic otherwise

  static ResidueRing f4() { return {ResidueKind::F4, 2}; }
  static ResidueRing f2y() { return {ResidueKind::F2Y, 2}; }
  static ResidueRing f5() { return {ResidueKind::F5, 5}; }
  static ResidueRing zn(std::int64_t n);

  /// Number of elements.
  std::int64_t size() const;
  bool needs_O0() const { return kind != ResidueKind::F4; }
  std::string name() const;

  friend bool operator==(const ResidueRing&, const ResidueRing&) = default;
};

/// c0 + c1 * t where t = X (F4), Y (F2Y, ZnPair); F5 uses c0 only.
struct ResidueElement {
  ResidueRing ring;
  std::int64_t c0 = 0;
  std::int64_t c1 = 0;

  /// Dense index in [0, ring.size()).
  std::int64_t index() const { return c0 + c1 * ring.modulus; }
  static ResidueElement from_index(const ResidueRing& ring, std::int64_t index);
  bool is_zero() const { return c0 == 0 && c1 == 0; }

  friend bool operator==(const ResidueElement&, const ResidueElement&) = default;
};

ResidueElement operator+(const ResidueElement& x, const ResidueElement& y);
ResidueElement operator-(const ResidueElement& x, const ResidueElement& y);
ResidueElement operator-(const ResidueElement& x);
ResidueElement operator*(const ResidueElement& x, const ResidueElement& y);
std::string to_string(const ResidueElement& x);

ResidueElement residue_zero(const ResidueRing& ring);
ResidueElement residue_one(const ResidueRing& ring);
std::vector<ResidueElement> residue_elements(const ResidueRing& ring);

/// Ring homomorphism O (or O0) -> residue ring. Throws NotInSubring for O0-only targets.
ResidueElement reduce(const OrderElement& x, const ResidueRing& target);

// ---------------------------------------------------------------------------
// Exact real embeddings

/// r + s*sqrt(5), exact.
class RealEmbeddingValue {
 public:
  RealEmbeddingValue() = default;
  RealEmbeddingValue(Rational rational_part, Rational sqrt5_part)
      : r_(std::move(rational_part)), s_(std::move(sqrt5_part)) {}

  const Rational& rational_part() const { return r_; }
  const Rational& sqrt5_part() const { return s_; }

  friend RealEmbeddingValue operator+(const RealEmbeddingValue& x, const RealEmbeddingValue& y) {
    return {x.r_ + y.r_, x.s_ + y.s_};
  }
  friend RealEmbeddingValue operator-(const RealEmbeddingValue& x, const RealEmbeddingValue& y) {
    return {x.r_ - y.r_, x.s_ - y.s_};
  }
  friend RealEmbeddingValue operator*(const RealEmbeddingValue& x, const RealEmbeddingValue& y) {
    return {x.r_ * y.r_ + Rational(5) * x.s_ * y.s_, x.r_ * y.s_ + x.s_ * y.r_};
  }
  friend bool operator==(const RealEmbeddingValue&, const RealEmbeddingValue&) = default;

  /// Sign of the real number, decided without floating point.
  int sign() const;

 private:
  Rational r_;
  Rational s_;
};

bool operator<(const RealEmbeddingValue& x, const RealEmbeddingValue& y);

/// X -> (1 + sqrt5)/2.
RealEmbeddingValue sigma(const OrderElement& x);
/// X -> (1 - sqrt5)/2.
RealEmbeddingValue sigma_prime(const OrderElement& x);
bool is_totally_positive(const OrderElement& x);

}  // namespace wiman

namespace Eigen {

template <>
struct NumTraits<wiman::OrderElement> : GenericNumTraits<wiman::OrderElement> {
  using Real = wiman::OrderElement;
  using NonInteger = wiman::OrderElement;
  using Nested = wiman::OrderElement;
  using Literal = wiman::OrderElement;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static wiman::OrderElement epsilon() { return 0; }
  static wiman::OrderElement dummy_precision() { return 0; }
  static wiman::OrderElement highest() { return 0; }
  static wiman::OrderElement lowest() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen
