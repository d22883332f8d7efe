#include "wiman/icosa.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wiman {

Permutation::Permutation(const std::array<int, 5>& images) {
  std::array<bool, 5> hit{};
  for (std::size_t i = 0; i < 5; ++i) {
    const int v = images[i];
    if (v < 0 || v > 4 || hit[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of {0,...,4}");
    }
    hit[static_cast<std::size_t>(v)] = true;
    images_[i] = static_cast<std::uint8_t>(v);
  }
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  Permutation out;
  for (std::size_t x = 0; x < 5; ++x) out.images_[x] = g.images_[h.images_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  for (std::size_t x = 0; x < 5; ++x) out.images_[images_[x]] = static_cast<std::uint8_t>(x);
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::array<bool, 5> seen{};
  for (std::size_t x = 0; x < 5; ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

int Permutation::sign() const {
  int s = 1;
  for (int len : cycle_type()) {
    if (len % 2 == 0) s = -s;
  }
  return s;
}

int Permutation::order() const {
  int o = 1;
  for (int len : cycle_type()) o = std::lcm(o, len);
  return o;
}

int Permutation::rank() const {
  // Lehmer code
  static constexpr std::array<int, 5> kFactorial{24, 6, 2, 1, 1};
  int r = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    int smaller = 0;
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (images_[j] < images_[i]) ++smaller;
    }
    r += smaller * kFactorial[i];
  }
  return r;
}

Permutation power(const Permutation& g, int k) {
  const Permutation base = k < 0 ? g.inverse() : g;
  Permutation out;
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

Permutation parse_cycles(std::string_view text) {
  std::array<int, 5> images{0, 1, 2, 3, 4};
  std::array<bool, 5> used{};
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty permutation", pos);
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos == text.size()) throw ParseError("unterminated cycle", pos);
      const char c = text[pos];
      if (c == ')') {
        ++pos;
        break;
      }
      if (c < '0' || c > '4') throw ParseError("expected a point in 0..4", pos);
      const int v = c - '0';
      if (used[static_cast<std::size_t>(v)]) throw ParseError("repeated point", pos);
      used[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
      ++pos;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Permutation(images);
}

std::string to_cycles(const Permutation& g) {
  std::string out;
  std::array<bool, 5> seen{};
  for (int x = 0; x < 5; ++x) {
    if (seen[static_cast<std::size_t>(x)] || g(x) == x) continue;
    out += '(';
    for (int y = x; !seen[static_cast<std::size_t>(y)]; y = g(y)) {
      seen[static_cast<std::size_t>(y)] = true;
      out += static_cast<char>('0' + y);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& g) { return os << to_cycles(g); }

std::vector<Permutation> group_generators(GroupKind which) {
  std::vector<Permutation> gens{perms::sigma5(), perms::sigma2()};
  if (which == GroupKind::S5) gens.push_back(perms::tau4());
  return gens;
}

std::vector<Permutation> enumerate_group(GroupKind which) {
  std::array<int, 5> images{0, 1, 2, 3, 4};
  std::vector<Permutation> out;
  do {
    Permutation g(images);
    if (which == GroupKind::S5 || g.is_even()) out.push_back(g);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<IdentityCheck> verify_triangle_data() {
  using namespace perms;
  const Permutation t2p = tau4() * tau2() * tau4().inverse();
  const Permutation t4sq = tau4() * tau4();
  return {
      {"tau6*tau4*tau2 = 1", tau6() * tau4() * tau2(), Permutation::identity()},
      {"tau4^2*tau2 = sigma3", t4sq * tau2(), sigma3()},
      {"tau4*tau2*tau4^-1 = (01)(24)", t2p, parse_cycles("(01)(24)")},
      {"tau2*tau2' = sigma5^2", tau2() * t2p, sigma5() * sigma5()},
      {"sigma5^-1*sigma3*sigma5 = (031)", sigma5().inverse() * sigma3() * sigma5(), parse_cycles("(031)")},
      {"tau2'*tau4^2 = (031)", t2p * t4sq, parse_cycles("(031)")},
  };
}

std::vector<std::vector<Permutation>> conjugacy_classes(GroupKind which) {
  const auto gens = group_generators(which);
  auto conj = [](const Permutation& g, const Permutation& h) { return g * h * g.inverse(); };
  std::set<Permutation> assigned;
  std::vector<std::vector<Permutation>> classes;
  for (const Permutation& h : enumerate_group(which)) {
    if (assigned.count(h) != 0) continue;
    auto cls = orbit(gens, h, conj);
    assigned.insert(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

A5Class classify_a5(const Permutation& g) {
  const auto type = g.cycle_type();
  if (!g.is_even()) throw std::invalid_argument(to_cycles(g) + " is not in A5");
  if (type.size() == 5) return A5Class::Identity;
  if (type == std::vector<int>{1, 2, 2}) return A5Class::DoubleTransposition;
  if (type == std::vector<int>{1, 1, 3}) return A5Class::ThreeCycle;
  static const std::vector<Permutation> class_a = [] {
    auto conj = [](const Permutation& x, const Permutation& h) { return x * h * x.inverse(); };
    return orbit(group_generators(GroupKind::A5), perms::sigma5(), conj);
  }();
  return std::binary_search(class_a.begin(), class_a.end(), g) ? A5Class::FiveCycleA : A5Class::FiveCycleB;
}

int RationalCharacterTable::weighted_product_times_order(std::size_t i, std::size_t j) const {
  int sum = 0;
  for (std::size_t k = 0; k < 5; ++k) sum += class_sizes[k] * values[i][k] * values[j][k];
  return sum;
}

bool RationalCharacterTable::orthogonal() const {
  const int order = std::accumulate(class_sizes.begin(), class_sizes.end(), 0);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (weighted_product_times_order(i, j) != (i == j ? order * kExpectedNorms[i] : 0)) return false;
    }
  }
  return true;
}

const RationalCharacterTable& a5_character_table() {
  static const RationalCharacterTable table{
      {Permutation::identity(), parse_cycles("(01)(23)"), parse_cycles("(012)"), perms::sigma5(),
       perms::sigma5() * perms::sigma5()},
      {1, 15, 20, 12, 12},
      {"1", "V", "W", "E"},
      {{{1, 1, 1, 1, 1}, {4, 0, 1, -1, -1}, {5, 1, -1, 0, 0}, {6, -2, 0, 1, 1}}},
  };
  return table;
}

std::vector<std::array<int, 4>> nonnegative_solutions(const std::array<std::array<int, 4>, 3>& rows,
                                                      const std::array<int, 3>& rhs) {
  std::array<int, 4> bound{};
  for (std::size_t k = 0; k < 4; ++k) {
    if (rows[0][k] <= 0) throw std::invalid_argument("first constraint row must be positive");
    bound[k] = rhs[0] < 0 ? -1 : rhs[0] / rows[0][k];
  }
  std::vector<std::array<int, 4>> out;
  std::array<int, 4> x{};
  for (x[0] = 0; x[0] <= bound[0]; ++x[0]) {
    for (x[1] = 0; x[1] <= bound[1]; ++x[1]) {
      for (x[2] = 0; x[2] <= bound[2]; ++x[2]) {
        for (x[3] = 0; x[3] <= bound[3]; ++x[3]) {
          bool ok = true;
          for (std::size_t r = 0; r < 3 && ok; ++r) {
            int lhs = 0;
            for (std::size_t k = 0; k < 4; ++k) lhs += rows[r][k] * x[k];
            ok = lhs == rhs[r];
          }
          if (ok) out.push_back(x);
        }
      }
    }
  }
  return out;
}

namespace {

std::array<std::array<int, 4>, 3> trace_rows() {
  const auto& t = a5_character_table();
  std::array<std::array<int, 4>, 3> rows{};
  const std::array<A5Class, 3> classes{A5Class::Identity, A5Class::ThreeCycle, A5Class::FiveCycleA};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t k = 0; k < 4; ++k) rows[r][k] = t.values[k][static_cast<std::size_t>(classes[r])];
  }
  return rows;
}

}  // namespace

std::array<int, 4> solve_multiplicities(const std::array<int, 3>& traces, int min_trivial) {
  std::vector<std::array<int, 4>> hits;
  for (const auto& x : nonnegative_solutions(trace_rows(), traces)) {
    if (x[0] >= min_trivial) hits.push_back(x);
  }
  if (hits.empty()) throw NoSolution("no multiplicity vector matches the traces");
  if (hits.size() > 1) throw NotUnique(std::to_string(hits.size()) + " multiplicity vectors match the traces");
  return hits.front();
}

std::array<int, 4> solve_k3_decomposition() { return solve_multiplicities({17, 2, 2}, 3); }

std::vector<std::array<int, 4>> k3_candidates() { return nonnegative_solutions(trace_rows(), {17, 2, 2}); }

}  // namespace wiman
