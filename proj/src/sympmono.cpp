#include "wiman/sympmono.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace wiman {

SympMat symp(const OrderElement& a, const OrderElement& b, const OrderElement& c, const OrderElement& d) {
  SympMat m;
  m << a, b, c, d;
  return m;
}

SympMat symp_identity() { return symp(1, 0, 0, 1); }

OrderElement det(const SympMat& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

bool in_O0(const SympMat& m) {
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (!m(i).in_O0()) return false;
  }
  return true;
}

SympMat inverse(const SympMat& m) {
  if (!(det(m) == OrderElement(1))) throw NotAUnit("matrix " + to_string(m) + " does not have determinant 1");
  return symp(m(1, 1), -m(0, 1), -m(1, 0), m(0, 0));
}

bool is_unipotent_transvection(const SympMat& m) {
  const SympMat n = m - symp_identity();
  const SympMat sq = n * n;
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (!sq(i).is_zero()) return false;
  }
  return true;
}

std::string to_string(const SympMat& m) {
  return "[[" + to_string(m(0, 0)) + "," + to_string(m(0, 1)) + "],[" + to_string(m(1, 0)) + "," +
         to_string(m(1, 1)) + "]]";
}

OrderElement x_cubed() { return {1, 2}; }
OrderElement x_inv_cubed() { return {-3, 2}; }

std::string to_string(Generator g) {
  switch (g) {
    case Generator::Alpha:
      return "alpha";
    case Generator::AlphaPrime:
      return "alpha'";
    case Generator::Beta:
      return "beta";
    case Generator::BetaPrime:
      return "beta'";
  }
  return "?";
}

const std::array<Generator, 4>& all_generators() {
  static const std::array<Generator, 4> gens{Generator::Alpha, Generator::AlphaPrime, Generator::Beta,
                                             Generator::BetaPrime};
  return gens;
}

SympMat generator_matrix(Generator g) {
  const OrderElement t = x_cubed();
  const OrderElement s = x_inv_cubed();
  switch (g) {
    case Generator::Alpha:
      return symp(1, {-1, 2}, 0, 1);
    case Generator::AlphaPrime:
      return symp(1, 0, {1, -2}, 1);
    case Generator::Beta:
      return symp(OrderElement(1) + t, t, -t, OrderElement(1) - t);
    case Generator::BetaPrime:
      return symp(OrderElement(1) + s, s, -s, OrderElement(1) - s);
  }
  return symp_identity();
}

std::array<SympMat, 4> generators() {
  std::array<SympMat, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = generator_matrix(all_generators()[i]);
  return out;
}

SympMat iota_conj(const SympMat& m) {
  return symp(galois_conj(m(1, 1)), galois_conj(m(1, 0)), galois_conj(m(0, 1)), galois_conj(m(0, 0)));
}

// ---------------------------------------------------------------------------

namespace {

Integer to_integer_checked(const Rational& r) {
  if (!r.is_integer()) throw std::domain_error("pairing value " + r.str() + " is not integral");
  return r.numerator();
}

}  // namespace

Integer pairing(const H1Vector& x, const H1Vector& y) {
  const OrderElement k = x_inv_cubed();
  return to_integer_checked(inner(x.first, scalar_mul(k, y.second)) - inner(y.first, scalar_mul(k, x.second)));
}

std::vector<H1Vector> h1_basis() {
  const IntMatrix rows = lattice_rows(LatticeKind::E0);
  std::vector<H1Vector> out;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) out.push_back({LatticeVector(Vec6(rows.row(i).transpose())), {}});
  for (Eigen::Index i = 0; i < rows.rows(); ++i) out.push_back({{}, LatticeVector(Vec6(rows.row(i).transpose()))});
  return out;
}

IntMatrix h1_gram() {
  const auto basis = h1_basis();
  const auto n = static_cast<Eigen::Index>(basis.size());
  IntMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = pairing(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
  }
  return g;
}

bool pairing_is_unimodular() { return abs(linalg::determinant(h1_gram())) == Integer(1); }

H1Vector act(const Permutation& g, const H1Vector& x) { return {act(g, x.first), act(g, x.second)}; }

H1Vector scalar_mul(const OrderElement& lambda, const H1Vector& x) {
  return {scalar_mul(lambda, x.first), scalar_mul(lambda, x.second)};
}

H1Vector apply(const SympMat& m, const H1Vector& x) {
  return {scalar_mul(m(0, 0), x.first) + scalar_mul(m(0, 1), x.second),
          scalar_mul(m(1, 0), x.first) + scalar_mul(m(1, 1), x.second)};
}

H1Vector multitwist(const std::vector<H1Vector>& vanishing, const H1Vector& x) {
  H1Vector out = x;
  for (const H1Vector& d : vanishing) out = out + pairing(d, x) * d;
  return out;
}

namespace {

// lambda in O with lambda * u = y, if any.
std::optional<OrderElement> solve_scalar(const LatticeVector& u, const LatticeVector& y) {
  const Vec6& p = u.coords();
  const Vec6 q = apply_X(u).coords();
  const Vec6& r = y.coords();
  for (Eigen::Index i = 0; i < 6; ++i) {
    for (Eigen::Index j = i + 1; j < 6; ++j) {
      const Integer d = p(i) * q(j) - p(j) * q(i);
      if (d.is_zero()) continue;
      const Rational a = Rational(r(i) * q(j) - r(j) * q(i)) / Rational(d);
      const Rational b = Rational(p(i) * r(j) - p(j) * r(i)) / Rational(d);
      if (!a.is_integer() || !b.is_integer()) return std::nullopt;
      const OrderElement lambda(a.numerator(), b.numerator());
      if (!(scalar_mul(lambda, u) == y)) return std::nullopt;
      return lambda;
    }
  }
  return std::nullopt;
}

OrderElement solve_entry(const LatticeVector& u, const LatticeVector& y, const char* name) {
  const auto lambda = solve_scalar(u, y);
  if (!lambda) throw NotO0Linear(std::string("entry ") + name + " is not a scalar multiple");
  if (!lambda->in_O0()) throw NotO0Linear(std::string("entry ") + name + " = " + to_string(*lambda) + " is not in O0");
  return *lambda;
}

}  // namespace

SympMat induced_matrix(const H1Map& twist) {
  const auto basis = h1_basis();
  for (const Permutation& g : group_generators(GroupKind::A5)) {
    for (const H1Vector& h : basis) {
      if (!(twist(act(g, h)) == act(g, twist(h)))) throw NotEquivariant("twist does not commute with " + to_cycles(g));
    }
  }
  const LatticeVector u = lv::e();
  const H1Vector tv = twist({u, {}});
  const H1Vector tw = twist({{}, u});
  const SympMat m = symp(solve_entry(u, tv.first, "a"), solve_entry(u, tw.first, "b"), solve_entry(u, tv.second, "c"),
                         solve_entry(u, tw.second, "d"));
  for (const H1Vector& h : basis) {
    if (!(twist(h) == apply(m, h))) throw NotO0Linear("twist is not induced by " + to_string(m));
  }
  return m;
}

std::string to_string(VanishingSet which) {
  switch (which) {
    case VanishingSet::Alpha:
      return "Delta_c in the first summand";
    case VanishingSet::AlphaPrime:
      return "Delta_c in the second summand";
    case VanishingSet::Beta:
      return "(X^3 d, -X^3 d) over Delta_ir";
    case VanishingSet::BetaPrime:
      return "(d, -d) over Delta_ir";
    case VanishingSet::CInfinity:
      return "(d, Xd) over Delta_inf";
  }
  return "?";
}

std::vector<H1Vector> vanishing_set(VanishingSet which) {
  const auto& fx = orbit_fixtures();
  std::vector<H1Vector> out;
  switch (which) {
    case VanishingSet::Alpha:
      for (const auto& d : antipodal_representatives(fx.c.elements)) out.push_back({d, {}});
      break;
    case VanishingSet::AlphaPrime:
      for (const auto& d : antipodal_representatives(fx.c.elements)) out.push_back({{}, d});
      break;
    case VanishingSet::Beta:
      for (const auto& d : antipodal_representatives(fx.ir.elements)) {
        const LatticeVector w = scalar_mul(x_cubed(), d);
        out.push_back({w, -w});
      }
      break;
    case VanishingSet::BetaPrime:
      for (const auto& d : antipodal_representatives(fx.ir.elements)) out.push_back({d, -d});
      break;
    case VanishingSet::CInfinity:
      for (const auto& d : antipodal_representatives(fx.inf.elements)) out.push_back({d, apply_X(d)});
      break;
  }
  return out;
}

SympMat multitwist_matrix(VanishingSet which) {
  const auto set = vanishing_set(which);
  return induced_matrix([&set](const H1Vector& x) { return multitwist(set, x); });
}

// ---------------------------------------------------------------------------

namespace {

void expect_matrix(const std::string& name, const SympMat& got, const SympMat& want) {
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      if (!(got(i, j) == want(i, j))) {
        throw MatrixMismatch(name + " entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): expected " +
                             to_string(want(i, j)) + ", got " + to_string(got(i, j)));
      }
    }
  }
}

}  // namespace

ProductReport product_check() {
  ProductReport r;
  r.b = generator_matrix(Generator::Alpha) * generator_matrix(Generator::Beta);
  expect_matrix("B", r.b, symp({-1, -2}, -3, {-1, -2}, {0, -2}));
  r.iota_b = iota_conj(r.b);
  expect_matrix("iota B iota", r.iota_b, symp({-2, 2}, {-3, 2}, -3, {-3, 2}));
  r.product = r.b * r.iota_b;
  expect_matrix("B iota B iota", r.product, symp({7, -2}, {8, -6}, {-2, 4}, {-5, 2}));
  const OrderElement x = OrderElement::X();
  r.nilpotent = symp(-power(x, -2), power(x, -3), -power(x, -1), power(x, -2));
  r.scale = OrderElement(-2) * OrderElement(2, 1);
  expect_matrix("B iota B iota - I", r.product - symp_identity(), SympMat(r.nilpotent * r.scale));
  return r;
}

FixedVectorReport fixed_vector_check() {
  FixedVectorReport r;
  SympVec minus, plus;
  minus << 1, -1;
  plus << 1, 1;
  const SympMat beta = generator_matrix(Generator::Beta);
  const SympMat beta_p = generator_matrix(Generator::BetaPrime);
  r.beta_fixes_v_minus_v_prime = SympVec(beta * minus) == minus;
  r.beta_prime_fixes_v_minus_v_prime = SympVec(beta_p * minus) == minus;
  r.beta_fixes_v_plus_v_prime = SympVec(beta * plus) == plus;
  r.functional_preserved = true;
  const ResidueRing f5 = ResidueRing::f5();
  for (std::size_t k = 0; k < 4; ++k) {
    const ResidueMat m = reduce(generator_matrix(all_generators()[k]), f5);
    for (std::size_t i = 0; i < 4; ++i) r.mod5[k][i] = m[i].c0;
    if ((m[0] + m[2]).c0 != 1 || (m[1] + m[3]).c0 != 1) r.functional_preserved = false;
  }
  return r;
}

BenoistOhReport benoist_oh_check() {
  BenoistOhReport r;
  const SympMat c = symp(1, 0, -1, 1);
  const SympMat c_inv = inverse(c);
  for (std::size_t k = 0; k < 4; ++k) r.conjugated[k] = c_inv * generator_matrix(all_generators()[k]) * c;
  r.beta_upper_unipotent = r.conjugated[2] == symp(1, x_cubed(), 0, 1);
  r.beta_prime_upper_unipotent = r.conjugated[3] == symp(1, x_inv_cubed(), 0, 1);
  // coordinates in the Z-basis (1, 2X) of O0
  auto coords = [](const OrderElement& z) { return std::pair{z.a(), z.b() / Integer(2)}; };
  const auto [a1, b1] = coords(x_cubed());
  const auto [a2, b2] = coords(x_inv_cubed());
  r.omega_index = abs(a1 * b2 - a2 * b1);
  r.alpha_lower_left = r.conjugated[0](1, 0);
  r.alpha_matches = r.conjugated[0] == symp({2, -2}, {-1, 2}, {1, -2}, {0, 2});
  return r;
}

// ---------------------------------------------------------------------------

ResidueMat reduce(const SympMat& m, const ResidueRing& ring) {
  return {reduce(m(0, 0), ring), reduce(m(0, 1), ring), reduce(m(1, 0), ring), reduce(m(1, 1), ring)};
}

namespace {

ResidueMat mul(const ResidueMat& x, const ResidueMat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

ResidueMat residue_identity(const ResidueRing& ring) {
  return {residue_one(ring), residue_zero(ring), residue_zero(ring), residue_one(ring)};
}

constexpr std::int64_t kEnumerationLimit = 10'000'000;

}  // namespace

std::uint64_t key(const ResidueMat& m) {
  const auto s = static_cast<std::uint64_t>(m[0].ring.size());
  std::uint64_t k = 0;
  for (const ResidueElement& x : m) k = k * s + static_cast<std::uint64_t>(x.index());
  return k;
}

std::optional<std::int64_t> CongruenceImage::index() const {
  if (!group_order) return std::nullopt;
  return *group_order / order();
}

std::optional<std::int64_t> sl2_order(const ResidueRing& ring) {
  const std::int64_t s = ring.size();
  if (s > 0 && s * s * s * s > kEnumerationLimit) return std::nullopt;
  const auto elems = residue_elements(ring);
  const ResidueElement one = residue_one(ring);
  std::int64_t count = 0;
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      for (const auto& c : elems) {
        for (const auto& d : elems) {
          if (a * d - b * c == one) ++count;
        }
      }
    }
  }
  return count;
}

CongruenceImage congruence_image(const ResidueRing& ring, const std::vector<SympMat>& gens, std::size_t budget) {
  std::vector<ResidueMat> reduced;
  for (const SympMat& g : gens) reduced.push_back(reduce(g, ring));
  CongruenceImage image{ring, {}, sl2_order(ring)};
  std::deque<ResidueMat> frontier;
  const ResidueMat id = residue_identity(ring);
  image.elements.insert(key(id));
  frontier.push_back(id);
  while (!frontier.empty()) {
    const ResidueMat m = frontier.front();
    frontier.pop_front();
    for (const ResidueMat& g : reduced) {
      const ResidueMat next = mul(g, m);
      if (image.elements.insert(key(next)).second) {
        if (image.elements.size() > budget) {
          throw BudgetExceeded("congruence image over " + ring.name() + " exceeds " + std::to_string(budget) +
                               " elements");
        }
        frontier.push_back(next);
      }
    }
  }
  return image;
}

CongruenceImage congruence_image(const ResidueRing& ring, std::size_t budget) {
  const auto g = generators();
  return congruence_image(ring, std::vector<SympMat>(g.begin(), g.end()), budget);
}

// ---------------------------------------------------------------------------

namespace {

using Point = std::array<ResidueElement, 2>;

// Representative [1:0] or [x:1] of the line through a nonzero vector of F4^2.
Point normalize_f4(const Point& v) {
  const ResidueRing f4 = ResidueRing::f4();
  for (const auto& u : residue_elements(f4)) {
    if (u.is_zero()) continue;
    const Point w{u * v[0], u * v[1]};
    if (v[1].is_zero() ? w[0] == residue_one(f4) : w[1] == residue_one(f4)) return w;
  }
  throw std::invalid_argument("zero vector has no projective point");
}

int point_index(const std::vector<Point>& points, const Point& p) {
  const Point n = normalize_f4(p);
  return static_cast<int>(std::find(points.begin(), points.end(), n) - points.begin());
}

}  // namespace


std::vector<std::array<ResidueElement, 2>> p1_f4_points() {
  const ResidueRing f4 = ResidueRing::f4();
  std::vector<Point> out{{residue_one(f4), residue_zero(f4)}};
  for (const auto& x : residue_elements(f4)) out.push_back({x, residue_one(f4)});
  return out;
}

std::string to_string(const std::array<ResidueElement, 2>& point) {
  return "[" + to_string(point[0]) + ":" + to_string(point[1]) + "]";
}

P1F4Report p1_f4_report() {
  const ResidueRing f4 = ResidueRing::f4();
  const auto points = p1_f4_points();
  const auto elems = residue_elements(f4);
  const ResidueElement one = residue_one(f4);
  P1F4Report r;
  std::set<Permutation> image;
  std::vector<std::array<int, 5>> f2_perms;
  r.image_alternating = true;
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      for (const auto& c : elems) {
        for (const auto& d : elems) {
          if (!(a * d - b * c == one)) continue;
          ++r.sl2_order;
          std::array<int, 5> images{};
          for (std::size_t i = 0; i < 5; ++i) {
            const Point& p = points[i];
            images[i] = point_index(points, {a * p[0] + b * p[1], c * p[0] + d * p[1]});
          }
          const Permutation g(images);
          if (!g.is_even()) r.image_alternating = false;
          image.insert(g);
          if (a.c1 == 0 && b.c1 == 0 && c.c1 == 0 && d.c1 == 0) f2_perms.push_back(images);
        }
      }
    }
  }
  r.image_order = static_cast<std::int64_t>(image.size());
  r.image_alternating = r.image_alternating && r.image_order == 60;

  std::vector<int> component(5, -1);
  for (int i = 0; i < 5; ++i) {
    if (component[static_cast<std::size_t>(i)] >= 0) continue;
    std::vector<std::string> orbit;
    for (int j = 0; j < 5; ++j) {
      const bool reached = std::any_of(f2_perms.begin(), f2_perms.end(),
                                       [&](const auto& p) { return p[static_cast<std::size_t>(i)] == j; });
      if (reached) {
        component[static_cast<std::size_t>(j)] = i;
        orbit.push_back(to_string(points[static_cast<std::size_t>(j)]));
      }
    }
    r.sl2_f2_orbits.push_back(orbit);
  }
  const ResidueElement zero = residue_zero(f4);
  const ResidueElement x{f4, 0, 1};
  const std::vector<std::set<std::string>> expected{
      {to_string(Point{one, zero}), to_string(Point{one, one}), to_string(Point{zero, one})},
      {to_string(normalize_f4({x, one})), to_string(normalize_f4({one, x}))}};
  std::vector<std::set<std::string>> got;
  for (const auto& o : r.sl2_f2_orbits) got.emplace_back(o.begin(), o.end());
  r.sl2_f2_orbits_match = got.size() == 2 && std::is_permutation(got.begin(), got.end(), expected.begin());
  return r;
}

Mod2SubmoduleReport cyclic_submodules_mod2() {
  const ResidueRing r2 = ResidueRing::f2y();
  const auto ring = residue_elements(r2);
  using Pair = std::array<ResidueElement, 2>;
  auto span = [&](const Pair& v) {
    std::set<std::int64_t> s;
    for (const auto& r : ring) s.insert((r * v[0]).index() * 4 + (r * v[1]).index());
    return s;
  };
  auto name = [](const Pair& v) { return "(" + to_string(v[0]) + "," + to_string(v[1]) + ")"; };
  const ResidueElement one = residue_one(r2), zero = residue_zero(r2), y{r2, 0, 1}, one_y{r2, 1, 1};
  const std::vector<Pair> listed{{one, zero}, {one, y}, {one, one}, {one_y, one}, {y, y}, {y, one}, {zero, one}};

  Mod2SubmoduleReport rep;
  std::vector<std::set<std::int64_t>> spans;
  for (const Pair& v : listed) {
    rep.listed.push_back(name(v));
    spans.push_back(span(v));
  }
  rep.listed_distinct = std::set<std::set<std::int64_t>>(spans.begin(), spans.end()).size() == listed.size();

  // swap partner by position: 0<->6, 1<->5, the rest fixed
  const std::array<std::size_t, 7> partner{6, 5, 2, 3, 4, 1, 0};
  rep.swap_matches = true;
  for (std::size_t i = 0; i < listed.size(); ++i) {
    if (span({listed[i][1], listed[i][0]}) != spans[partner[i]]) rep.swap_matches = false;
  }

  std::map<std::set<std::int64_t>, Pair> all;
  for (const auto& a : ring) {
    for (const auto& b : ring) {
      if (a.is_zero() && b.is_zero()) continue;
      all.emplace(span({a, b}), Pair{a, b});
    }
  }
  rep.exhaustive_count = static_cast<int>(all.size());
  for (const auto& [s, v] : all) {
    if (std::find(spans.begin(), spans.end(), s) == spans.end()) rep.unlisted.push_back(name(v));
  }
  return rep;
}

std::string to_string(CuspType t) { return t == CuspType::InfinityZero ? "infinity_0" : "infinity_X"; }

CuspType classify_cusp(const OrderElement& p, const OrderElement& q) {
  if (p.is_zero() && q.is_zero()) throw ZeroVector("(0, 0) does not define a cusp");
  if (!p.in_O0() || !q.in_O0()) throw NotInSubring("(" + to_string(p) + ", " + to_string(q) + ") is not in O0^2");
  const OrderElement g = gcd(p, q);
  const ResidueRing f4 = ResidueRing::f4();
  const Point v{reduce(exact_div(p, g), f4), reduce(exact_div(q, g), f4)};
  if (v[0].is_zero() && v[1].is_zero()) throw Error("normalization of (" + to_string(p) + ", " + to_string(q) + ") failed");
  const ResidueElement one = residue_one(f4), zero = residue_zero(f4);
  const Point n = normalize_f4(v);
  const bool three_point = n == Point{one, zero} || n == Point{one, one} || n == Point{zero, one};
  return three_point ? CuspType::InfinityZero : CuspType::InfinityX;
}

}  // namespace wiman
