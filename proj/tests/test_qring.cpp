#include "wiman/qring.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace wiman;

namespace {

// Oracle: a + bX as (a + b/2) + (b/2) sqrt5, multiplied out by hand.
struct Sqrt5 {
  Rational r, s;
};
Sqrt5 embed(const OrderElement& x) { return {Rational(x.a()) + Rational(x.b(), 2), Rational(x.b(), 2)}; }
Sqrt5 mul(const Sqrt5& x, const Sqrt5& y) { return {x.r * y.r + Rational(5) * x.s * y.s, x.r * y.s + x.s * y.r}; }

OrderElement random_element(std::mt19937_64& rng, long long bound) {
  std::uniform_int_distribution<long long> d(-bound, bound);
  return {Integer(d(rng)), Integer(d(rng))};
}

}  // namespace

TEST_CASE("multiplication follows X^2 = X + 1") {
  const OrderElement x = OrderElement::X();
  CHECK(x * x == OrderElement(1, 1));
  CHECK(OrderElement(1, 2) * OrderElement(-3, 2) == OrderElement(1));
  CHECK(OrderElement(-1, 2) * OrderElement(-1, 2) == OrderElement(5));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const OrderElement a = random_element(rng, 1000), b = random_element(rng, 1000);
    const Sqrt5 p = embed(a * b), q = mul(embed(a), embed(b));
    CHECK(p.r == q.r);
    CHECK(p.s == q.s);
  }
}

TEST_CASE("powers and inverses") {
  const OrderElement x = OrderElement::X();
  CHECK(power(x, 0) == OrderElement(1));
  CHECK(power(x, 3) == OrderElement(1, 2));
  CHECK(power(x, 6) == OrderElement(5, 8));
  CHECK(power(x, -3) == OrderElement(-3, 2));
  CHECK(power(x, -1) == OrderElement(-1, 1));
  CHECK(power(x, 40) * power(x, -40) == OrderElement(1));
  CHECK_THROWS_AS(power(OrderElement(2), -1), NotAUnit);
  CHECK_THROWS_AS(inverse(OrderElement(-1, 2)), NotAUnit);
  // the value 3-2X is the negative of the inverse of X^3
  CHECK(OrderElement(1, 2) * OrderElement(3, -2) == OrderElement(-1));
}

TEST_CASE("big integers do not overflow") {
  const OrderElement big = power(OrderElement::X(), 200);
  CHECK(norm(big) == Integer(1));
  CHECK(big * power(OrderElement::X(), -200) == OrderElement(1));
}

TEST_CASE("galois conjugation") {
  CHECK(galois_conj(OrderElement::X()) == OrderElement(1, -1));
  CHECK(galois_conj(OrderElement(5)) == OrderElement(5));
  CHECK(galois_conj(OrderElement(1, 2)) == OrderElement(3, -2));
  CHECK(galois_conj(OrderElement(1, 2)) == -power(OrderElement::X(), -3));
}

TEST_CASE("norm and trace") {
  CHECK(norm(OrderElement::X()) == Integer(-1));
  CHECK(norm(OrderElement(-1, 2)) == Integer(-5));
  CHECK(norm(OrderElement(1)) == Integer(1));
  CHECK(trace(OrderElement(3, 4)) == Integer(10));
  CHECK(is_unit(OrderElement(1, 2)));
  CHECK_FALSE(is_unit(OrderElement(2)));
}

TEST_CASE("exact real embeddings") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const OrderElement x = random_element(rng, 10000);
    CHECK(sigma(x) * sigma_prime(x) == RealEmbeddingValue(Rational(norm(x)), 0));
    CHECK(sigma(x) + sigma_prime(x) == RealEmbeddingValue(Rational(trace(x)), 0));
  }
  CHECK(sigma(OrderElement::X()).sign() > 0);
  CHECK(sigma_prime(OrderElement::X()).sign() < 0);
  CHECK(is_totally_positive(OrderElement(3, 4)));
  CHECK_FALSE(is_totally_positive(OrderElement(-3, 2)));
  // 2X - 1 = sqrt5 under sigma
  CHECK(sigma(OrderElement(-1, 2)) == RealEmbeddingValue(0, 1));
}

TEST_CASE("units of O0 in a box are the powers of 1+2X up to sign") {
  std::set<OrderElement> expected;
  for (int k = -6; k <= 6; ++k) {
    const OrderElement u = power(OrderElement(1, 2), k);
    expected.insert(u);
    expected.insert(-u);
  }
  for (int a = -50; a <= 50; ++a) {
    for (int b = -50; b <= 50; b += 2) {
      const OrderElement x(a, b);
      if (!is_unit(x)) continue;
      CHECK_MESSAGE(expected.count(x) == 1, to_string(x));
    }
  }
}

TEST_CASE("euclidean division and gcd") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const OrderElement a = random_element(rng, 500), b = random_element(rng, 500);
    if (b.is_zero()) continue;
    const DivMod qr = divmod(a, b);
    CHECK(qr.quotient * b + qr.remainder == a);
    CHECK(abs(norm(qr.remainder)) < abs(norm(b)));
    const OrderElement g = gcd(a, b);
    CHECK(exact_div(a, g) * g == a);
    CHECK(exact_div(b, g) * g == b);
  }
  CHECK(is_unit(gcd(OrderElement(2), OrderElement(0, 1))));
  CHECK_THROWS(exact_div(OrderElement(1), OrderElement(2)));
}

TEST_CASE("text form") {
  CHECK(to_string(OrderElement(0)) == "0");
  CHECK(to_string(OrderElement(0, 1)) == "X");
  CHECK(to_string(OrderElement(-3, 2)) == "-3+2X");
  CHECK(to_string(OrderElement(1, -1)) == "1-X");
  CHECK(parse_order_element("2X") == OrderElement(0, 2));
  CHECK(parse_order_element(" -1 + 2*X ") == OrderElement(-1, 2));
  CHECK(parse_order_element("X-3") == OrderElement(-3, 1));
  try {
    parse_order_element("1+");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_order_element("2Y"), ParseError);
  CHECK_THROWS_AS(parse_order_element(""), ParseError);
}

TEST_CASE("residue reductions") {
  const ResidueRing f5 = ResidueRing::f5(), f2y = ResidueRing::f2y(), f4 = ResidueRing::f4();
  CHECK(reduce(OrderElement(-1, 2), f5).is_zero());
  CHECK(reduce(OrderElement(1, 2), f2y) == ResidueElement{f2y, 1, 1});
  CHECK(reduce(OrderElement(0, 1), f4) == ResidueElement{f4, 0, 1});
  CHECK_THROWS_AS(reduce(OrderElement(0, 1), f5), NotInSubring);
  CHECK(ResidueRing::zn(7).size() == 49);

  // Y^2 = 0 in F2[Y]/(Y^2); X^2 = X + 1 in F4
  const ResidueElement y{f2y, 0, 1};
  CHECK((y * y).is_zero());
  const ResidueElement x{f4, 0, 1};
  CHECK(x * x == ResidueElement{f4, 1, 1});

  std::mt19937_64 rng(5);
  for (const ResidueRing& ring : {f4, f2y, f5, ResidueRing::zn(6)}) {
    for (int i = 0; i < 100; ++i) {
      OrderElement a = random_element(rng, 300), b = random_element(rng, 300);
      if (ring.needs_O0()) {
        a = {a.a(), Integer(2) * a.b()};
        b = {b.a(), Integer(2) * b.b()};
      }
      CHECK(reduce(a * b, ring) == reduce(a, ring) * reduce(b, ring));
      CHECK(reduce(a - b, ring) == reduce(a, ring) - reduce(b, ring));
    }
    for (const auto& e : residue_elements(ring)) CHECK(ResidueElement::from_index(ring, e.index()) == e);
  }
}
