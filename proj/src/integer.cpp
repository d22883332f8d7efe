#include "wiman/integer.hpp"

#include <limits>
#include <stdexcept>

namespace wiman {

std::int64_t Integer::to_int64() const {
  if (v_ > std::numeric_limits<std::int64_t>::max() || v_ < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + v_.str());
  }
  return v_.convert_to<std::int64_t>();
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (!(q * b == a) && ((a.sign() < 0) != (b.sign() < 0))) q -= 1;
  return q;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r.sign() < 0) r += abs(m);
  return r;
}

std::int64_t mod_small(const Integer& a, std::int64_t m) { return mod(a, Integer(m)).to_int64(); }

Integer gcd(const Integer& a, const Integer& b) {
  return Integer(Integer::Big(boost::multiprecision::gcd(a.big(), b.big())));
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    const Integer q = floor_div(old_r, r);
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r.sign() < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Rational::Rational(const Integer& num, const Integer& den) : v_(num.big(), den.big()) {}

}  // namespace wiman
