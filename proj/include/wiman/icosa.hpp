#pragma once

// Permutations of {0,...,4}, the icosahedral group A5 inside S5, and the
// rational character arithmetic of A5.

#include "wiman/errors.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace wiman {

/// A bijection of {0,...,4}, stored by images.
///
/// Products compose right to left: (g * h)(x) = g(h(x)).
class Permutation {
 public:
  using Images = std::array<std::uint8_t, 5>;

  Permutation() : images_{0, 1, 2, 3, 4} {}
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(const std::array<int, 5>& images);

  static Permutation identity() { return {}; }

  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const Images& images() const { return images_; }

  friend Permutation operator*(const Permutation& g, const Permutation& h);
  Permutation inverse() const;

  /// +1 for even, -1 for odd.
  int sign() const;
  bool is_even() const { return sign() > 0; }
  int order() const;
  /// Sorted cycle lengths including fixed points, e.g. {1,2,2}.
  std::vector<int> cycle_type() const;
  /// Rank in lexicographic order of image arrays, in [0, 120).
  int rank() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Images images_;
};

Permutation power(const Permutation& g, int k);

/// Cycle notation such as "(01234)", "(04)(23)" or "()". Throws ParseError.
Permutation parse_cycles(std::string_view text);
std::string to_cycles(const Permutation& g);
std::ostream& operator<<(std::ostream& os, const Permutation& g);

namespace perms {

// Generators of the icosahedral group: sigma2 * sigma3 * sigma5 = 1.
inline Permutation sigma5() { return parse_cycles("(01234)"); }
inline Permutation sigma2() { return parse_cycles("(04)(23)"); }
inline Permutation sigma3() { return parse_cycles("(142)"); }

// Triangle data; tau6 * tau4 * tau2 = 1 and tau4 is odd.
inline Permutation tau6() { return parse_cycles("(012)(34)"); }
inline Permutation tau4() { return parse_cycles("(0432)"); }
inline Permutation tau2() { return parse_cycles("(03)(12)"); }

}  // namespace perms

enum class GroupKind { A5, S5 };

/// Generators used by the BFS routines: {sigma5, sigma2} for A5, plus tau4 for S5.
std::vector<Permutation> group_generators(GroupKind which);
/// All elements in increasing order.
std::vector<Permutation> enumerate_group(GroupKind which);

struct IdentityCheck {
  std::string name;
  Permutation computed;
  Permutation expected;
  bool pass() const { return computed == expected; }
};

/// The six permutation identities attached to the triangle data.
std::vector<IdentityCheck> verify_triangle_data();

// ---------------------------------------------------------------------------
// Orbits

inline constexpr std::size_t kDefaultOrbitBudget = 1'000'000;

/// Orbit of `seed` under the group generated by `generators`, sorted by `operator<`.
/// `act(g, p)` must define a group action. Throws OrbitBudgetExceeded past `budget` points.
template <typename Point, typename Action>
std::vector<Point> orbit(const std::vector<Permutation>& generators, const Point& seed, Action act,
                         std::size_t budget = kDefaultOrbitBudget) {
  std::map<Point, bool> seen;
  std::deque<Point> frontier;
  seen.emplace(seed, true);
  frontier.push_back(seed);
  while (!frontier.empty()) {
    Point p = std::move(frontier.front());
    frontier.pop_front();
    for (const Permutation& g : generators) {
      Point q = act(g, p);
      if (seen.emplace(q, true).second) {
        if (seen.size() > budget) {
          throw OrbitBudgetExceeded("orbit exceeds budget of " + std::to_string(budget) + " points");
        }
        frontier.push_back(std::move(q));
      }
    }
  }
  std::vector<Point> out;
  out.reserve(seen.size());
  for (auto& kv : seen) out.push_back(kv.first);
  return out;
}

/// Elements of `group` fixing `point`.
template <typename Point, typename Action>
std::vector<Permutation> stabilizer(const std::vector<Permutation>& group, const Point& point, Action act) {
  std::vector<Permutation> out;
  for (const Permutation& g : group) {
    if (act(g, point) == point) out.push_back(g);
  }
  return out;
}

/// Conjugacy classes, each sorted, ordered by their least element.
std::vector<std::vector<Permutation>> conjugacy_classes(GroupKind which);

// ---------------------------------------------------------------------------
// Rational characters of A5

/// Classes of A5: identity, double transpositions, 3-cycles, and the two
/// classes of 5-cycles (conjugates of sigma5 and of sigma5^2).
enum class A5Class { Identity = 0, DoubleTransposition, ThreeCycle, FiveCycleA, FiveCycleB };

A5Class classify_a5(const Permutation& g);

struct RationalCharacterTable {
  std::array<Permutation, 5> representatives;
  std::array<int, 5> class_sizes;
  std::array<std::string, 4> names;            // "1", "V", "W", "E"
  std::array<std::array<int, 5>, 4> values;     // values[character][class]

  /// 60 * <chi_i, chi_j>, the class-weighted sum of chi_i * chi_j.
  int weighted_product_times_order(std::size_t i, std::size_t j) const;
  /// <chi, chi> is 1 for 1, V, W and 2 for E, whose endomorphism ring is Q(sqrt5).
  static constexpr std::array<int, 4> kExpectedNorms{1, 1, 1, 2};
  /// Pairwise orthogonal, with self-products kExpectedNorms.
  bool orthogonal() const;
};

const RationalCharacterTable& a5_character_table();

/// Nonnegative integer solutions of rows * x = rhs, for four unknowns.
/// The first row must have positive entries; it bounds the search.
std::vector<std::array<int, 4>> nonnegative_solutions(const std::array<std::array<int, 4>, 3>& rows,
                                                      const std::array<int, 3>& rhs);

/// Multiplicities (a,b,c,d) of (1,V,W,E) in a representation with the given
/// traces at the identity, a 3-cycle and a 5-cycle, restricted to a >= min_trivial.
/// Throws NoSolution or NotUnique.
std::array<int, 4> solve_multiplicities(const std::array<int, 3>& traces, int min_trivial);

/// The K3 case: traces (17, 2, 2) and at least three trivial summands.
std::array<int, 4> solve_k3_decomposition();
/// All nonnegative solutions for traces (17, 2, 2) with no lower bound on a.
std::vector<std::array<int, 4>> k3_candidates();

}  // namespace wiman
