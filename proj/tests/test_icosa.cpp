#include "wiman/icosa.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

using namespace wiman;

namespace {

// Oracle: all 120 permutations by std::next_permutation.
std::vector<Permutation> all_permutations() {
  std::array<int, 5> p{0, 1, 2, 3, 4};
  std::vector<Permutation> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Oracle: parity by counting inversions.
int inversion_sign(const Permutation& g) {
  int inv = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) inv += g(i) > g(j);
  }
  return inv % 2 ? -1 : 1;
}

}  // namespace

TEST_CASE("composition is right to left") {
  using namespace perms;
  CHECK(sigma2() * sigma3() * sigma5() == Permutation::identity());
  CHECK(tau6() * tau4() * tau2() == Permutation::identity());
  CHECK(power(tau4(), 2) == parse_cycles("(03)(24)"));
  CHECK(sigma5() * Permutation::identity() == sigma5());
  const Permutation g = parse_cycles("(01)"), h = parse_cycles("(12)");
  CHECK((g * h)(2) == g(h(2)));
}

TEST_CASE("parity and order") {
  CHECK(perms::sigma5().is_even());
  CHECK(perms::sigma5().order() == 5);
  CHECK_FALSE(perms::tau4().is_even());
  CHECK(perms::tau4().order() == 4);
  CHECK(perms::sigma2().is_even());
  CHECK(perms::sigma2().order() == 2);
  for (const Permutation& g : all_permutations()) CHECK(g.sign() == inversion_sign(g));
}

TEST_CASE("cycle notation round trip") {
  for (const Permutation& g : all_permutations()) CHECK(parse_cycles(to_cycles(g)) == g);
  CHECK(to_cycles(Permutation::identity()) == "()");
  CHECK_THROWS_AS(parse_cycles("(0 1"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(05)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(011)"), ParseError);
}

TEST_CASE("rank is a bijection onto 0..119") {
  std::set<int> ranks;
  for (const Permutation& g : all_permutations()) ranks.insert(g.rank());
  CHECK(ranks.size() == 120);
  CHECK(*ranks.begin() == 0);
  CHECK(*ranks.rbegin() == 119);
}

TEST_CASE("the groups") {
  const auto a5 = enumerate_group(GroupKind::A5);
  const auto s5 = enumerate_group(GroupKind::S5);
  CHECK(a5.size() == 60);
  CHECK(s5.size() == 120);
  std::vector<Permutation> even;
  for (const Permutation& g : all_permutations()) {
    if (inversion_sign(g) > 0) even.push_back(g);
  }
  std::sort(even.begin(), even.end());
  CHECK(a5 == even);
}

TEST_CASE("conjugacy classes") {
  auto sizes = [](GroupKind k) {
    std::multiset<std::size_t> s;
    for (const auto& c : conjugacy_classes(k)) s.insert(c.size());
    return s;
  };
  CHECK(sizes(GroupKind::A5) == std::multiset<std::size_t>{1, 15, 20, 12, 12});
  CHECK(sizes(GroupKind::S5) == std::multiset<std::size_t>{1, 10, 15, 20, 20, 30, 24});
  CHECK(classify_a5(perms::sigma5()) == A5Class::FiveCycleA);
  CHECK(classify_a5(power(perms::sigma5(), 2)) == A5Class::FiveCycleB);
  CHECK(classify_a5(perms::sigma3()) == A5Class::ThreeCycle);
}

TEST_CASE("triangle identities") {
  const auto checks = verify_triangle_data();
  CHECK(checks.size() == 6);
  for (const auto& c : checks) CHECK_MESSAGE(c.pass(), c.name);
  using namespace perms;
  CHECK(power(tau4(), 2) * tau2() == sigma3());
  CHECK(sigma5().inverse() * sigma3() * sigma5() == parse_cycles("(031)"));
}

TEST_CASE("orbits and stabilizers on points, pairs and elements") {
  const auto gens = group_generators(GroupKind::A5);
  const auto a5 = enumerate_group(GroupKind::A5);
  auto on_points = [](const Permutation& g, int x) { return g(x); };
  CHECK(orbit(gens, 0, on_points).size() == 5);

  using Pair = std::pair<int, int>;
  auto on_pairs = [](const Permutation& g, const Pair& p) -> Pair {
    return std::minmax(g(p.first), g(p.second));
  };
  CHECK(orbit(gens, Pair{0, 4}, on_pairs).size() == 10);

  auto conj = [](const Permutation& g, const Permutation& h) { return g * h * g.inverse(); };
  const auto threes = orbit(gens, perms::sigma3(), conj);
  CHECK(threes.size() == 20);

  // orbit-stabilizer for all three actions
  CHECK(orbit(gens, 0, on_points).size() * stabilizer(a5, 0, on_points).size() == 60);
  CHECK(orbit(gens, Pair{0, 4}, on_pairs).size() * stabilizer(a5, Pair{0, 4}, on_pairs).size() == 60);
  CHECK(threes.size() * stabilizer(a5, perms::sigma3(), conj).size() == 60);

  CHECK_THROWS_AS(orbit(gens, perms::sigma3(), conj, 10), OrbitBudgetExceeded);
}

TEST_CASE("character table") {
  const auto& t = a5_character_table();
  CHECK(t.orthogonal());
  // the two-dimensional-over-Q(sqrt5) character E has norm 2, not 1
  CHECK(t.weighted_product_times_order(3, 3) == 120);
  int order = 0;
  for (int s : t.class_sizes) order += s;
  CHECK(order == 60);
}

TEST_CASE("K3 decomposition") {
  CHECK(solve_k3_decomposition() == std::array<int, 4>{3, 1, 2, 0});

  // brute-force oracle over the stated box
  std::vector<std::array<int, 4>> brute;
  for (int a = 0; a <= 17; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (int c = 0; c <= 3; ++c) {
        for (int d = 0; d <= 2; ++d) {
          if (a + 4 * b + 5 * c + 6 * d == 17 && a - b + d == 2 && a + b - c == 2) brute.push_back({a, b, c, d});
        }
      }
    }
  }
  auto candidates = k3_candidates();
  std::sort(candidates.begin(), candidates.end());
  CHECK(candidates == brute);
  CHECK(std::find(brute.begin(), brute.end(), std::array<int, 4>{3, 1, 2, 0}) != brute.end());

  CHECK(solve_multiplicities({0, 0, 0}, 0) == std::array<int, 4>{0, 0, 0, 0});
  CHECK_THROWS_AS(solve_multiplicities({17, 2, 2}, 0), NotUnique);
  CHECK_THROWS_AS(solve_multiplicities({17, 2, 2}, 10), NoSolution);
}
