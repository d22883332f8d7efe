#include "wiman/qring.hpp"

#include <cctype>
#include <sstream>

namespace wiman {

Integer norm(const OrderElement& x) { return x.a() * x.a() + x.a() * x.b() - x.b() * x.b(); }

Integer trace(const OrderElement& x) { return Integer(2) * x.a() + x.b(); }

OrderElement galois_conj(const OrderElement& x) { return {x.a() + x.b(), -x.b()}; }

bool is_unit(const OrderElement& x) { return abs(norm(x)) == Integer(1); }

OrderElement inverse(const OrderElement& x) {
  const Integer n = norm(x);
  if (!(abs(n) == Integer(1))) throw NotAUnit(to_string(x) + " is not a unit (norm " + n.str() + ")");
  // x * conj(x) = n = +-1
  const OrderElement c = galois_conj(x);
  return {c.a() * n, c.b() * n};
}

OrderElement power(const OrderElement& x, long long k) {
  OrderElement base = k < 0 ? inverse(x) : x;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
  OrderElement result = 1;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::string to_string(const OrderElement& x) {
  std::ostringstream os;
  const bool has_a = !x.a().is_zero();
  if (has_a) os << x.a();
  if (!x.b().is_zero()) {
    const bool negative = x.b().sign() < 0;
    if (negative) {
      os << '-';
    } else if (has_a) {
      os << '+';
    }
    const Integer mag = abs(x.b());
    if (!(mag == Integer(1))) os << mag;
    os << 'X';
  }
  if (!has_a && x.b().is_zero()) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const OrderElement& x) { return os << to_string(x); }

OrderElement parse_order_element(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  Integer a = 0, b = 0;
  bool first = true;
  skip_ws();
  if (pos == text.size()) throw ParseError("empty ring element", pos);
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    const bool has_digits = pos > start;
    Integer coefficient = has_digits ? Integer(Integer::Big(std::string(text.substr(start, pos - start)))) : Integer(1);
    skip_ws();
    if (pos < text.size() && text[pos] == '*' && has_digits) {
      ++pos;
      skip_ws();
      if (pos == text.size() || text[pos] != 'X') throw ParseError("expected 'X' after '*'", pos);
    }
    if (pos < text.size() && text[pos] == 'X') {
      ++pos;
      b += coefficient * Integer(sign);
    } else if (has_digits) {
      a += coefficient * Integer(sign);
    } else {
      throw ParseError("expected an integer or 'X'", pos);
    }
    first = false;
    skip_ws();
  }
  return {a, b};
}

namespace {

Integer round_div(const Integer& p, const Integer& n) {
  // nearest integer to p / n, ties toward +infinity
  if (n.sign() < 0) return round_div(-p, -n);
  return floor_div(Integer(2) * p + n, Integer(2) * n);
}

}  // namespace

DivMod divmod(const OrderElement& a, const OrderElement& b) {
  if (b.is_zero()) throw Error("division by zero in O");
  const Integer n = norm(b);
  const OrderElement num = a * galois_conj(b);
  const OrderElement q{round_div(num.a(), n), round_div(num.b(), n)};
  return {q, a - q * b};
}

OrderElement gcd(const OrderElement& a, const OrderElement& b) {
  OrderElement x = a, y = b;
  while (!y.is_zero()) {
    OrderElement r = divmod(x, y).remainder;
    x = y;
    y = r;
  }
  return x;
}

OrderElement exact_div(const OrderElement& a, const OrderElement& b) {
  const auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(to_string(b) + " does not divide " + to_string(a));
  return q;
}

// ---------------------------------------------------------------------------

ResidueRing ResidueRing::zn(std::int64_t n) {
  if (n < 2) throw Error("residue modulus must be at least 2");
  return {ResidueKind::ZnPair, n};
}

std::int64_t ResidueRing::size() const {
  switch (kind) {
    case ResidueKind::F4:
    case ResidueKind::F2Y:
      return 4;
    case ResidueKind::F5:
      return 5;
    case ResidueKind::ZnPair:
      return modulus * modulus;
  }
  return 0;
}

std::string ResidueRing::name() const {
  switch (kind) {
    case ResidueKind::F4:
      return "F4";
    case ResidueKind::F2Y:
      return "F2[Y]/(Y^2)";
    case ResidueKind::F5:
      return "F5";
    case ResidueKind::ZnPair:
      return "O0/" + std::to_string(modulus) + "O0";
  }
  return "?";
}

namespace {

std::int64_t md(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

void require_same(const ResidueElement& x, const ResidueElement& y) {
  if (!(x.ring == y.ring)) throw Error("residue ring mismatch: " + x.ring.name() + " vs " + y.ring.name());
}

}  // namespace

ResidueElement ResidueElement::from_index(const ResidueRing& ring, std::int64_t index) {
  return {ring, index % ring.modulus, index / ring.modulus};
}

ResidueElement operator+(const ResidueElement& x, const ResidueElement& y) {
  require_same(x, y);
  const std::int64_t m = x.ring.modulus;
  return {x.ring, md(x.c0 + y.c0, m), md(x.c1 + y.c1, m)};
}

ResidueElement operator-(const ResidueElement& x, const ResidueElement& y) {
  require_same(x, y);
  const std::int64_t m = x.ring.modulus;
  return {x.ring, md(x.c0 - y.c0, m), md(x.c1 - y.c1, m)};
}

ResidueElement operator-(const ResidueElement& x) { return residue_zero(x.ring) - x; }

ResidueElement operator*(const ResidueElement& x, const ResidueElement& y) {
  require_same(x, y);
  const std::int64_t m = x.ring.modulus;
  switch (x.ring.kind) {
    case ResidueKind::F4: {
      const std::int64_t bd = x.c1 * y.c1;
      return {x.ring, md(x.c0 * y.c0 + bd, m), md(x.c0 * y.c1 + x.c1 * y.c0 + bd, m)};
    }
    case ResidueKind::F5:
      return {x.ring, md(x.c0 * y.c0, m), 0};
    case ResidueKind::F2Y:
    case ResidueKind::ZnPair: {
      const std::int64_t bd = md(x.c1 * y.c1, m);
      return {x.ring, md(x.c0 * y.c0 + 4 * bd, m), md(x.c0 * y.c1 + x.c1 * y.c0 + 2 * bd, m)};
    }
  }
  return x;
}

std::string to_string(const ResidueElement& x) {
  const char* t = x.ring.kind == ResidueKind::F4 ? "X" : "Y";
  if (x.ring.kind == ResidueKind::F5) return std::to_string(x.c0);
  if (x.c1 == 0) return std::to_string(x.c0);
  const std::string coeff = x.c1 == 1 ? "" : std::to_string(x.c1);
  if (x.c0 == 0) return coeff + t;
  return std::to_string(x.c0) + "+" + coeff + t;
}

ResidueElement residue_zero(const ResidueRing& ring) { return {ring, 0, 0}; }
ResidueElement residue_one(const ResidueRing& ring) { return {ring, 1, 0}; }

std::vector<ResidueElement> residue_elements(const ResidueRing& ring) {
  std::vector<ResidueElement> out;
  out.reserve(static_cast<std::size_t>(ring.size()));
  for (std::int64_t i = 0; i < ring.size(); ++i) out.push_back(ResidueElement::from_index(ring, i));
  return out;
}

ResidueElement reduce(const OrderElement& x, const ResidueRing& target) {
  if (target.needs_O0() && !x.in_O0()) {
    throw NotInSubring(to_string(x) + " is not in O0; cannot reduce to " + target.name());
  }
  const std::int64_t m = target.modulus;
  switch (target.kind) {
    case ResidueKind::F4:
      return {target, mod_small(x.a(), 2), mod_small(x.b(), 2)};
    case ResidueKind::F5:
      // X -> 3, since 2*3 - 1 = 5
      return {target, mod_small(x.a() + Integer(3) * x.b(), 5), 0};
    case ResidueKind::F2Y:
    case ResidueKind::ZnPair:
      return {target, mod_small(x.a(), m), mod_small(x.b() / Integer(2), m)};
  }
  return residue_zero(target);
}

// ---------------------------------------------------------------------------

int RealEmbeddingValue::sign() const {
  const int rs = r_.sign(), ss = s_.sign();
  if (ss == 0) return rs;
  if (rs == 0 || rs == ss) return ss;
  // opposite signs: compare r^2 with 5 s^2 (never equal, sqrt5 is irrational)
  return r_ * r_ > Rational(5) * s_ * s_ ? rs : ss;
}

bool operator<(const RealEmbeddingValue& x, const RealEmbeddingValue& y) { return (y - x).sign() > 0; }

RealEmbeddingValue sigma(const OrderElement& x) {
  return {Rational(x.a()) + Rational(x.b(), 2), Rational(x.b(), 2)};
}

RealEmbeddingValue sigma_prime(const OrderElement& x) {
  return {Rational(x.a()) + Rational(x.b(), 2), -Rational(x.b(), 2)};
}

bool is_totally_positive(const OrderElement& x) { return sigma(x).sign() > 0 && sigma_prime(x).sign() > 0; }

}  // namespace wiman
