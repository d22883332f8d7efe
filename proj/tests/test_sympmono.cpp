#include "wiman/sympmono.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace wiman;

namespace {

// Oracle: 2x2 matrices over F5 as plain integers.
using M5 = std::array<int, 4>;
M5 mul5(const M5& x, const M5& y) {
  return {(x[0] * y[0] + x[1] * y[2]) % 5, (x[0] * y[1] + x[1] * y[3]) % 5, (x[2] * y[0] + x[3] * y[2]) % 5,
          (x[2] * y[1] + x[3] * y[3]) % 5};
}

OrderElement random_o0(std::mt19937_64& rng, long long bound) {
  std::uniform_int_distribution<long long> d(-bound, bound);
  return {Integer(d(rng)), Integer(2 * d(rng))};
}

LatticeVector random_e0(std::mt19937_64& rng, long long bound) {
  std::uniform_int_distribution<long long> d(-bound, bound);
  std::array<long long, 6> c{};
  for (auto& x : c) x = d(rng);
  c[0] *= 2;
  return LatticeVector::of(c);
}

}  // namespace

TEST_CASE("generator matrices") {
  const auto g = generators();
  CHECK(g[0](0, 1) == OrderElement(-1, 2));
  CHECK(g[1](1, 0) == OrderElement(1, -2));
  CHECK(g[2] == symp({2, 2}, {1, 2}, {-1, -2}, {0, -2}));
  CHECK(g[3] == symp({-2, 2}, {-3, 2}, {3, -2}, {4, -2}));
  for (const SympMat& m : g) {
    CHECK(det(m) == OrderElement(1));
    CHECK(in_O0(m));
    CHECK(is_unipotent_transvection(m));
    CHECK(inverse(m) * m == symp_identity());
  }
  CHECK(to_string(g[0]) == "[[1,-1+2X],[0,1]]");
}

TEST_CASE("iota conjugation") {
  CHECK(iota_conj(generator_matrix(Generator::Alpha)) == generator_matrix(Generator::AlphaPrime));
  CHECK(iota_conj(generator_matrix(Generator::Beta)) == generator_matrix(Generator::BetaPrime));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const SympMat m = symp(random_o0(rng, 9), random_o0(rng, 9), random_o0(rng, 9), random_o0(rng, 9));
    const SympMat n = symp(random_o0(rng, 9), random_o0(rng, 9), random_o0(rng, 9), random_o0(rng, 9));
    CHECK(iota_conj(iota_conj(m)) == m);
    // an anti-automorphism composed with conjugation: iota(MN) = iota(M) iota(N)
    CHECK(iota_conj(m * n) == iota_conj(m) * iota_conj(n));
  }
}

TEST_CASE("the pairing on E0 + E0") {
  CHECK(pairing_is_unimodular());
  CHECK(h1_basis().size() == 12);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const H1Vector x{random_e0(rng, 9), random_e0(rng, 9)}, y{random_e0(rng, 9), random_e0(rng, 9)};
    CHECK(pairing(x, y) == -pairing(y, x));
    CHECK(pairing(x, x) == Integer(0));
    for (const SympMat& m : generators()) CHECK(pairing(apply(m, x), apply(m, y)) == pairing(x, y));
  }
}

TEST_CASE("multitwists induce the generator matrices") {
  CHECK(multitwist_matrix(VanishingSet::Alpha) == generator_matrix(Generator::Alpha));
  CHECK(multitwist_matrix(VanishingSet::AlphaPrime) == generator_matrix(Generator::AlphaPrime));
  CHECK(multitwist_matrix(VanishingSet::Beta) == generator_matrix(Generator::Beta));
  CHECK(multitwist_matrix(VanishingSet::BetaPrime) == generator_matrix(Generator::BetaPrime));
  CHECK(vanishing_set(VanishingSet::Alpha).size() == 10);
  CHECK(vanishing_set(VanishingSet::Beta).size() == 6);
  CHECK(vanishing_set(VanishingSet::CInfinity).size() == 15);

  // the off-diagonal of the alpha twist is (3+4X) X^-3
  CHECK(OrderElement(3, 4) * x_inv_cubed() == OrderElement(-1, 2));
}

TEST_CASE("induced_matrix") {
  CHECK(induced_matrix([](const H1Vector& x) { return x; }) == symp_identity());
  const SympMat m = symp({1, 2}, {0, 2}, 4, {-3, 2});
  CHECK(induced_matrix([&m](const H1Vector& x) { return apply(m, x); }) == m);
  // a twist along a single vanishing cycle is not A5-equivariant
  const std::vector<H1Vector> one{{lv::e(), {}}};
  CHECK_THROWS_AS(induced_matrix([&one](const H1Vector& x) { return multitwist(one, x); }), NotEquivariant);
  // X is equivariant but not O0-linear as an entry
  CHECK_THROWS_AS(induced_matrix([](const H1Vector& x) { return H1Vector{apply_X(x.first), x.second}; }),
                  NotO0Linear);
}

TEST_CASE("product identity") {
  const ProductReport r = product_check();
  CHECK(r.b == symp({-1, -2}, -3, {-1, -2}, {0, -2}));
  CHECK(r.iota_b == symp({-2, 2}, {-3, 2}, -3, {-3, 2}));
  CHECK(r.product == symp({7, -2}, {8, -6}, {-2, 4}, {-5, 2}));
  CHECK(r.product(1, 0) == OrderElement(-2) * OrderElement(2, 1) * -power(OrderElement::X(), -1));
  CHECK(multitwist_matrix(VanishingSet::CInfinity) == inverse(r.product));
  const SympMat n = r.nilpotent;
  CHECK((n * n)(0, 0).is_zero());
}

TEST_CASE("fixed vectors and the level-5 functional") {
  const auto r = fixed_vector_check();
  CHECK(r.beta_fixes_v_minus_v_prime);
  CHECK(r.beta_prime_fixes_v_minus_v_prime);
  CHECK_FALSE(r.beta_fixes_v_plus_v_prime);
  CHECK(r.functional_preserved);
  CHECK(r.mod5[2] == std::array<std::int64_t, 4>{3, 2, 3, 4});
  CHECK(r.mod5[3] == std::array<std::int64_t, 4>{4, 3, 2, 3});
  CHECK(r.mod5[0] == std::array<std::int64_t, 4>{1, 0, 0, 1});
  CHECK(r.mod5[1] == std::array<std::int64_t, 4>{1, 0, 0, 1});
}

TEST_CASE("Benoist-Oh data") {
  const auto r = benoist_oh_check();
  CHECK(r.beta_upper_unipotent);
  CHECK(r.beta_prime_upper_unipotent);
  CHECK(r.conjugated[2](0, 1) == OrderElement(1, 2));
  CHECK(r.omega_index == Integer(4));
  CHECK(r.alpha_lower_left == OrderElement(1, -2));
  CHECK(r.alpha_matches);
}

TEST_CASE("congruence images") {
  const auto f5 = congruence_image(ResidueRing::f5());
  CHECK(f5.order() == 5);
  CHECK(f5.group_order == 120);
  CHECK(f5.index() == 24);

  // oracle: powers of beta mod 5 contain beta' mod 5 and close up after 5 steps
  const M5 beta{3, 2, 3, 4}, beta_p{4, 3, 2, 3};
  std::set<M5> powers;
  M5 p{1, 0, 0, 1};
  for (int k = 0; k < 5; ++k) {
    powers.insert(p);
    p = mul5(beta, p);
  }
  CHECK(p == M5{1, 0, 0, 1});
  CHECK(powers.size() == 5);
  CHECK(powers.count(beta_p) == 1);

  const auto f2y = congruence_image(ResidueRing::f2y());
  CHECK(f2y.group_order == 48);
  CHECK(48 % f2y.order() == 0);

  const std::vector<SympMat> trivial(4, symp_identity());
  CHECK(congruence_image(ResidueRing::f5(), trivial).order() == 1);
  CHECK_THROWS_AS(congruence_image(ResidueRing::zn(3), 10), BudgetExceeded);
  CHECK_FALSE(sl2_order(ResidueRing::zn(100)).has_value());
}

TEST_CASE("SL2(F4) and the projective line") {
  const auto r = p1_f4_report();
  CHECK(r.sl2_order == 60);
  CHECK(r.image_order == 60);
  CHECK(r.image_alternating);
  CHECK(r.sl2_f2_orbits_match);
  std::multiset<std::size_t> sizes;
  for (const auto& o : r.sl2_f2_orbits) sizes.insert(o.size());
  CHECK(sizes == std::multiset<std::size_t>{2, 3});
  CHECK(p1_f4_points().size() == 5);
}

TEST_CASE("cyclic submodules mod 2") {
  const auto r = cyclic_submodules_mod2();
  CHECK(r.listed.size() == 7);
  CHECK(r.listed_distinct);
  CHECK(r.swap_matches);

  // oracle: count the submodules R(a, b) of (F2[Y]/Y^2)^2 directly, elements as 2-bit masks
  auto mul = [](int x, int y) { return ((x & 1) * y ^ ((x >> 1) & (y & 1)) << 1) & 3; };
  std::set<std::set<int>> subs;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      if (a == 0 && b == 0) continue;
      std::set<int> s;
      for (int r2 = 0; r2 < 4; ++r2) s.insert(mul(r2, a) * 4 + mul(r2, b));
      subs.insert(s);
    }
  }
  CHECK(subs.size() == 9);
  CHECK(r.exhaustive_count == 9);
  CHECK(r.unlisted.size() == 2);
}

TEST_CASE("cusp classification") {
  CHECK(classify_cusp(1, 0) == CuspType::InfinityZero);
  CHECK(classify_cusp(2, {0, 2}) == CuspType::InfinityX);
  CHECK(classify_cusp(1, 1) == CuspType::InfinityZero);
  CHECK(classify_cusp(0, 1) == CuspType::InfinityZero);
  CHECK(classify_cusp({0, 2}, {2, 2}) == CuspType::InfinityX);  // 2X * (1, X)
  CHECK_THROWS_AS(classify_cusp(0, 0), ZeroVector);
  CHECK_THROWS_AS(classify_cusp({0, 1}, 0), NotInSubring);
  CHECK(to_string(CuspType::InfinityX) == "infinity_X");

  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> coin(0, 1);
  const std::vector<std::pair<OrderElement, OrderElement>> inputs{{1, 0}, {2, {0, 2}}, {1, 1}, {3, {1, 2}}};
  for (int t = 0; t < 20; ++t) {
    SympMat g = symp_identity();
    for (int s = 0; s < 8; ++s) {
      const OrderElement l = random_o0(rng, 3);
      g = g * (coin(rng) ? symp(1, l, 0, 1) : symp(1, 0, l, 1));
    }
    for (const auto& [p, q] : inputs) {
      CHECK(classify_cusp(g(0, 0) * p + g(0, 1) * q, g(1, 0) * p + g(1, 1) * q) == classify_cusp(p, q));
    }
  }
}
