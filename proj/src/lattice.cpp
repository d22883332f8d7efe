#include "wiman/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wiman {

namespace {

int pair_index(int i, int j) {
  // i < j
  static constexpr std::array<int, 5> kStart{0, 4, 7, 9, 10};
  return kStart[static_cast<std::size_t>(i)] + (j - i - 1);
}

int triple_index(int i, int j, int k) {
  const auto& t = triples();
  for (int n = 0; n < 10; ++n) {
    const auto& x = t[static_cast<std::size_t>(n)];
    if (x[0] == i && x[1] == j && x[2] == k) return n;
  }
  throw std::logic_error("bad triple");
}

// Canonical coordinates are indexed by the pairs i<j<=3.
int canonical_index(int i, int j) {
  static constexpr std::array<std::array<int, 4>, 4> kIdx{{{-1, 0, 1, 2}, {-1, -1, 3, 4}, {-1, -1, -1, 5}, {-1, -1, -1, -1}}};
  return kIdx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

Vec6 canonical_f(int i, int j) {
  Vec6 v = Vec6::Zero();
  if (i == j) return v;
  Integer sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  if (j < 4) {
    v(canonical_index(i, j)) = sign;
    return v;
  }
  // f_i4 = -sum_{k<=3, k!=i} f_ik
  for (int k = 0; k < 4; ++k) {
    if (k != i) v -= canonical_f(i, k) * sign;
  }
  return v;
}

RatVec6 to_rational(const Vec6& v) { return v.cast<Rational>(); }

struct Geometry {
  RatMat6 eps_from_wedge;   // epsilon coordinates from canonical wedge coordinates
  RatMat6 wedge_from_eps;
  RatMat6 orthonormal_from_eps;
  RatMat6 eps_from_orthonormal;
  std::array<Mat6, 120> action;  // indexed by Permutation::rank
  Mat6 x;
  RatMat6 x_orthonormal;
};

Mat6 wedge_action(const Permutation& g) {
  Mat6 w;
  for (const auto& p : pairs()) {
    const int i = p[0], j = p[1];
    if (j > 3) continue;
    w.col(canonical_index(i, j)) = canonical_f(g(i), g(j));
  }
  return w;
}

Mat6 to_integer6(const RatMat6& m) {
  Mat6 out;
  for (Eigen::Index i = 0; i < 6; ++i)
    for (Eigen::Index j = 0; j < 6; ++j) {
      if (!m(i, j).is_integer()) throw std::domain_error("non-integral entry " + m(i, j).str());
      out(i, j) = m(i, j).numerator();
    }
  return out;
}

const Geometry& geometry() {
  static const Geometry g = [] {
    Geometry out;
    // Orthonormal basis inside the wedge model: e = sum f_{i,i+1}, e0 = sigma2(e), e_k = sigma5^k(e0).
    Wedge2Vector e;
    for (int i = 0; i < 5; ++i) e = e + Wedge2Vector::f(i, (i + 1) % 5);
    std::array<Wedge2Vector, 6> basis;
    basis[0] = e;
    basis[1] = act(perms::sigma2(), e);
    for (std::size_t k = 2; k < 6; ++k) basis[k] = act(perms::sigma5(), basis[k - 1]);
    RatMat6 p;
    for (Eigen::Index k = 0; k < 6; ++k) p.col(k) = to_rational(basis[static_cast<std::size_t>(k)].canonical());

    // c = 2 p_e, c_i = p_i - p_e
    RatMat6 q = RatMat6::Zero();
    q(0, 0) = 2;
    for (Eigen::Index i = 1; i < 6; ++i) {
      q(i, 0) = -1;
      q(i, i) = 1;
    }
    const RatMat6 q_inv = linalg::inverse(q);
    const RatMat6 p_inv = linalg::inverse(p);
    out.eps_from_orthonormal = q;
    out.orthonormal_from_eps = q_inv;
    out.eps_from_wedge = q * p_inv;
    out.wedge_from_eps = p * q_inv;

    for (const Permutation& h : enumerate_group(GroupKind::S5)) {
      const RatMat6 w = wedge_action(h).cast<Rational>();
      out.action[static_cast<std::size_t>(h.rank())] = to_integer6(out.eps_from_wedge * w * out.wedge_from_eps);
    }

    out.x = Mat6::Zero();
    out.x(0, 0) = 3;
    for (Eigen::Index i = 1; i < 6; ++i) out.x(i, 0) = -1;
    for (int i = 0; i < 5; ++i) {
      const Eigen::Index col = i + 1;
      out.x(0, col) = 1;
      out.x((i + 2) % 5 + 1, col) = -1;
      out.x((i + 3) % 5 + 1, col) = -1;
    }
    out.x_orthonormal = q_inv * out.x.cast<Rational>() * q;
    return out;
  }();
  return g;
}

std::string coefficient_prefix(const std::string& magnitude, bool negative, bool first) {
  std::string s;
  if (negative) {
    s = "-";
  } else if (!first) {
    s = "+";
  }
  if (magnitude != "1") s += magnitude;
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

LatticeVector LatticeVector::of(const std::array<long long, 6>& coords) {
  Vec6 v;
  for (Eigen::Index i = 0; i < 6; ++i) v(i) = Integer(coords[static_cast<std::size_t>(i)]);
  return LatticeVector(v);
}

LatticeVector LatticeVector::from_orthonormal(const RatVec6& p) {
  const RatVec6 c = geometry().eps_from_orthonormal * p;
  Vec6 out;
  for (Eigen::Index i = 0; i < 6; ++i) {
    if (!c(i).is_integer()) throw std::invalid_argument("vector is not in E^");
    out(i) = c(i).numerator();
  }
  return LatticeVector(out);
}

Vec6 LatticeVector::doubled_orthonormal() const {
  Vec6 p;
  p(0) = c_(0);
  for (Eigen::Index i = 1; i < 6; ++i) p(i) = Integer(2) * c_(i) + c_(0);
  return p;
}

RatVec6 LatticeVector::orthonormal() const {
  RatVec6 out;
  const Vec6 p = doubled_orthonormal();
  for (Eigen::Index i = 0; i < 6; ++i) out(i) = Rational(p(i), Integer(2));
  return out;
}

bool LatticeVector::in_E() const {
  Integer sum = 0;
  for (Eigen::Index i = 1; i < 6; ++i) sum += c_(i);
  return c_(0).is_even() && sum.is_even();
}

bool LatticeVector::is_zero() const {
  for (Eigen::Index i = 0; i < 6; ++i) {
    if (!c_(i).is_zero()) return false;
  }
  return true;
}

bool operator<(const LatticeVector& x, const LatticeVector& y) {
  for (Eigen::Index i = 0; i < 6; ++i) {
    if (x.c_(i) != y.c_(i)) return x.c_(i) < y.c_(i);
  }
  return false;
}

std::string to_string(const LatticeVector& v) {
  static const std::array<std::string, 6> names{"eps", "e0", "e1", "e2", "e3", "e4"};
  std::string out;
  for (Eigen::Index i = 0; i < 6; ++i) {
    const Integer& c = v[i];
    if (c.is_zero()) continue;
    out += coefficient_prefix(abs(c).str(), c.sign() < 0, out.empty()) + names[static_cast<std::size_t>(i)];
  }
  return out.empty() ? "0" : out;
}

std::string to_orthonormal_string(const LatticeVector& v) {
  static const std::array<std::string, 6> names{"e", "e0", "e1", "e2", "e3", "e4"};
  const RatVec6 p = v.orthonormal();
  std::string out;
  for (Eigen::Index i = 0; i < 6; ++i) {
    const Rational& c = p(i);
    if (c.sign() == 0) continue;
    const Rational mag = c.sign() < 0 ? -c : c;
    out += coefficient_prefix(mag.str(), c.sign() < 0, out.empty()) + names[static_cast<std::size_t>(i)];
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << to_string(v); }

namespace lv {

LatticeVector e() { return LatticeVector::of({2, -1, -1, -1, -1, -1}); }

LatticeVector e(int i) {
  std::array<long long, 6> c{};
  c[static_cast<std::size_t>(((i % 5) + 5) % 5 + 1)] = 1;
  return LatticeVector::of(c);
}

LatticeVector eps() { return LatticeVector::of({1, 0, 0, 0, 0, 0}); }

}  // namespace lv

// ---------------------------------------------------------------------------

IntMatrix lattice_rows(LatticeKind kind) {
  IntMatrix r = IntMatrix::Zero(6, 6);
  switch (kind) {
    case LatticeKind::EDual:
      for (Eigen::Index i = 0; i < 6; ++i) r(i, i) = 1;
      break;
    case LatticeKind::E0:
      r(0, 0) = 2;
      for (Eigen::Index i = 1; i < 6; ++i) r(i, i) = 1;
      break;
    case LatticeKind::E:
      r(0, 0) = 2;
      for (Eigen::Index i = 1; i < 5; ++i) {
        r(i, i) = 1;
        r(i, i + 1) = 1;
      }
      r(5, 5) = 2;
      break;
  }
  return r;
}

IntMatrix rows_of(const std::vector<LatticeVector>& vectors) {
  IntMatrix m(static_cast<Eigen::Index>(vectors.size()), 6);
  for (std::size_t k = 0; k < vectors.size(); ++k) m.row(static_cast<Eigen::Index>(k)) = vectors[k].coords().transpose();
  return m;
}

bool spans(const std::vector<LatticeVector>& vectors, LatticeKind kind) {
  return linalg::same_lattice(rows_of(vectors), lattice_rows(kind));
}

Vec6 e0_coords(const LatticeVector& v) {
  if (!v.in_E0()) throw NotInE0(to_string(v) + " is not in E0");
  Vec6 y = v.coords();
  y(0) = y(0) / Integer(2);
  return y;
}

LatticeVector from_e0_coords(const Vec6& y) {
  Vec6 c = y;
  c(0) = Integer(2) * y(0);
  return LatticeVector(c);
}

// ---------------------------------------------------------------------------

const std::array<std::array<int, 2>, 10>& pairs() {
  static const std::array<std::array<int, 2>, 10> p = [] {
    std::array<std::array<int, 2>, 10> out{};
    std::size_t n = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) out[n++] = {i, j};
    return out;
  }();
  return p;
}

const std::array<std::array<int, 3>, 10>& triples() {
  static const std::array<std::array<int, 3>, 10> t = [] {
    std::array<std::array<int, 3>, 10> out{};
    std::size_t n = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        for (int k = j + 1; k < 5; ++k) out[n++] = {i, j, k};
    return out;
  }();
  return t;
}

Wedge2Vector Wedge2Vector::f(int i, int j) {
  Wedge2Vector w;
  if (i == j) return w;
  if (i < j) {
    w.c_[static_cast<std::size_t>(pair_index(i, j))] = 1;
  } else {
    w.c_[static_cast<std::size_t>(pair_index(j, i))] = -1;
  }
  return w;
}

Vec6 Wedge2Vector::canonical() const {
  Vec6 v = Vec6::Zero();
  const auto& p = pairs();
  for (std::size_t n = 0; n < 10; ++n) {
    if (!c_[n].is_zero()) v += canonical_f(p[n][0], p[n][1]) * c_[n];
  }
  return v;
}

LatticeVector Wedge2Vector::to_lattice() const {
  const RatVec6 c = geometry().eps_from_wedge * to_rational(canonical());
  Vec6 out;
  for (Eigen::Index i = 0; i < 6; ++i) {
    if (!c(i).is_integer()) throw std::domain_error("wedge element is not in E^");
    out(i) = c(i).numerator();
  }
  return LatticeVector(out);
}

Wedge2Vector operator+(const Wedge2Vector& x, const Wedge2Vector& y) {
  Wedge2Vector out;
  for (std::size_t n = 0; n < 10; ++n) out.c_[n] = x.c_[n] + y.c_[n];
  return out;
}

Wedge2Vector operator*(const Integer& k, const Wedge2Vector& x) {
  Wedge2Vector out;
  for (std::size_t n = 0; n < 10; ++n) out.c_[n] = k * x.c_[n];
  return out;
}

Wedge3Vector Wedge3Vector::f(int i, int j, int k) {
  Wedge3Vector w;
  std::array<int, 3> idx{i, j, k};
  if (i == j || j == k || i == k) return w;
  int sign = 1;
  // bubble sort, counting swaps
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 2 - a; ++b)
      if (idx[static_cast<std::size_t>(b)] > idx[static_cast<std::size_t>(b + 1)]) {
        std::swap(idx[static_cast<std::size_t>(b)], idx[static_cast<std::size_t>(b + 1)]);
        sign = -sign;
      }
  w.c_[static_cast<std::size_t>(triple_index(idx[0], idx[1], idx[2]))] = sign;
  return w;
}

Wedge3Vector operator+(const Wedge3Vector& x, const Wedge3Vector& y) {
  Wedge3Vector out;
  for (std::size_t n = 0; n < 10; ++n) out.c_[n] = x.c_[n] + y.c_[n];
  return out;
}

Wedge3Vector operator*(const Integer& k, const Wedge3Vector& x) {
  Wedge3Vector out;
  for (std::size_t n = 0; n < 10; ++n) out.c_[n] = k * x.c_[n];
  return out;
}

Wedge2Vector act(const Permutation& g, const Wedge2Vector& w) {
  Wedge2Vector out;
  const auto& p = pairs();
  for (std::size_t n = 0; n < 10; ++n) {
    if (!w.raw()[n].is_zero()) out = out + w.raw()[n] * Wedge2Vector::f(g(p[n][0]), g(p[n][1]));
  }
  return out;
}

Wedge3Vector act(const Permutation& g, const Wedge3Vector& w) {
  Wedge3Vector out;
  const auto& t = triples();
  for (std::size_t n = 0; n < 10; ++n) {
    if (!w.raw()[n].is_zero()) out = out + w.raw()[n] * Wedge3Vector::f(g(t[n][0]), g(t[n][1]), g(t[n][2]));
  }
  return out;
}

LatticeVector delta(const Wedge3Vector& w) {
  Wedge2Vector sum;
  const auto& t = triples();
  for (std::size_t n = 0; n < 10; ++n) {
    const Integer& c = w.raw()[n];
    if (c.is_zero()) continue;
    const int i = t[n][0], j = t[n][1], k = t[n][2];
    sum = sum + c * (Wedge2Vector::f(i, j) + Wedge2Vector::f(j, k) + Wedge2Vector::f(k, i));
  }
  return sum.to_lattice();
}

// ---------------------------------------------------------------------------

const Mat6& action_matrix(const Permutation& g) { return geometry().action[static_cast<std::size_t>(g.rank())]; }

LatticeVector act(const Permutation& g, const LatticeVector& v) { return LatticeVector(action_matrix(g) * v.coords()); }

Integer inner2(const LatticeVector& x, const LatticeVector& y) {
  const Vec6 p = x.doubled_orthonormal(), q = y.doubled_orthonormal();
  Integer sum = 0;
  for (Eigen::Index i = 0; i < 6; ++i) sum += p(i) * q(i);
  // sum of products of doubled coordinates is 4 s; it is always even on E^
  return sum / Integer(2);
}

Rational inner(const LatticeVector& x, const LatticeVector& y) { return Rational(inner2(x, y), Integer(2)); }

const Mat6& x_matrix() { return geometry().x; }
const RatMat6& x_matrix_orthonormal() { return geometry().x_orthonormal; }

LatticeVector apply_X(const LatticeVector& v) { return LatticeVector(x_matrix() * v.coords()); }

LatticeVector scalar_mul(const OrderElement& lambda, const LatticeVector& v) {
  return LatticeVector(v.coords() * lambda.a() + x_matrix() * v.coords() * lambda.b());
}

IntMatrix to_basis(const Mat6& eps_matrix, const IntMatrix& rows) {
  const RatMatrix b = rows.transpose().cast<Rational>();
  const RatMatrix m = eps_matrix.cast<Rational>();
  return linalg::to_integer(RatMatrix(linalg::inverse(b) * m * b));
}

// ---------------------------------------------------------------------------

std::vector<LatticeVector> a5_orbit(const LatticeVector& seed, std::size_t budget) {
  return orbit(group_generators(GroupKind::A5), seed,
               [](const Permutation& g, const LatticeVector& v) { return act(g, v); }, budget);
}

std::vector<LatticeVector> s5_orbit(const LatticeVector& seed, std::size_t budget) {
  return orbit(group_generators(GroupKind::S5), seed,
               [](const Permutation& g, const LatticeVector& v) { return act(g, v); }, budget);
}

const OrbitFixtures& orbit_fixtures() {
  static const OrbitFixtures fixtures = [] {
    const auto a5 = enumerate_group(GroupKind::A5);
    auto make = [&](std::string name, const LatticeVector& seed, LatticeKind span) {
      OrbitFixture f{std::move(name), seed, a5_orbit(seed), {}, span};
      f.stabilizer = stabilizer(a5, seed, [](const Permutation& g, const LatticeVector& v) { return act(g, v); });
      return f;
    };
    return OrbitFixtures{
        make("Delta_ir", lv::e(), LatticeKind::E0),
        make("Delta_inf", lv::e() + lv::e(0), LatticeKind::E),
        make("Delta_c", lv::e() + lv::e(0) + lv::e(1), LatticeKind::E0),
    };
  }();
  return fixtures;
}

std::vector<LatticeVector> antipodal_representatives(const std::vector<LatticeVector>& vectors) {
  std::vector<LatticeVector> out;
  for (const auto& v : vectors) {
    const LatticeVector w = -v;
    if (v < w || v == w) out.push_back(v);
  }
  return out;
}

LatticeVector orbit_contraction(const std::vector<LatticeVector>& representatives, const LatticeVector& z) {
  LatticeVector sum;
  for (const auto& d : representatives) {
    const Integer t = inner2(z, d);
    if (!t.is_even()) throw std::domain_error("s(z, d) is not integral");
    sum += (t / Integer(2)) * d;
  }
  return sum;
}

// ---------------------------------------------------------------------------

CommutantResult commutant(LatticeKind kind) {
  const IntMatrix rows = lattice_rows(kind);
  std::vector<IntMatrix> actions;
  for (const Permutation& g : group_generators(GroupKind::A5)) actions.push_back(to_basis(action_matrix(g), rows));

  IntMatrix eqs = IntMatrix::Zero(static_cast<Eigen::Index>(36 * actions.size()), 36);
  Eigen::Index r = 0;
  for (const IntMatrix& a : actions) {
    for (Eigen::Index i = 0; i < 6; ++i) {
      for (Eigen::Index j = 0; j < 6; ++j, ++r) {
        // (M A - A M)_ij
        for (Eigen::Index k = 0; k < 6; ++k) {
          eqs(r, i * 6 + k) += a(k, j);
          eqs(r, k * 6 + j) -= a(i, k);
        }
      }
    }
  }
  CommutantResult out{kind, linalg::integer_kernel(eqs), {}, false};
  if (out.basis_rows.rows() != 2) {
    throw RankMismatch("commutant has rank " + std::to_string(out.basis_rows.rows()) + ", expected 2");
  }
  for (Eigen::Index k = 0; k < out.basis_rows.rows(); ++k) {
    IntMatrix m(6, 6);
    for (Eigen::Index i = 0; i < 6; ++i)
      for (Eigen::Index j = 0; j < 6; ++j) m(i, j) = out.basis_rows(k, i * 6 + j);
    out.basis.push_back(m);
  }

  const Mat6 scalar = kind == LatticeKind::E0 ? Mat6(x_matrix() * Integer(2)) : x_matrix();
  const IntMatrix x_in_basis = to_basis(scalar, rows);
  IntMatrix expected(2, 36);
  for (Eigen::Index i = 0; i < 6; ++i)
    for (Eigen::Index j = 0; j < 6; ++j) {
      expected(0, i * 6 + j) = i == j ? 1 : 0;
      expected(1, i * 6 + j) = x_in_basis(i, j);
    }
  out.matches_expected = linalg::same_lattice(out.basis_rows, expected);
  return out;
}

Mat6 conjugate_x(const Permutation& g) { return action_matrix(g) * x_matrix() * action_matrix(g.inverse()); }

// ---------------------------------------------------------------------------

int dual_class(const LatticeVector& v) {
  Integer sum = 0;
  for (Eigen::Index i = 1; i < 6; ++i) sum += v[i];
  const int a = v[0].is_even() ? 0 : 1;
  const int b = sum.is_even() ? 0 : 1;
  static constexpr std::array<std::array<int, 2>, 2> kClass{{{0, 1}, {2, 3}}};
  return kClass[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

DualQuotientReport dual_quotient_report() {
  DualQuotientReport r{{LatticeVector(), lv::e(), lv::eps(), lv::eps() + lv::e()}, true, true, 0, 0};
  // [e] -> [eps] -> [eps+e] -> [e]
  static constexpr std::array<int, 4> kNext{0, 2, 3, 1};
  for (int k = 0; k < 4; ++k) {
    if (dual_class(apply_X(r.representatives[static_cast<std::size_t>(k)])) != kNext[static_cast<std::size_t>(k)]) {
      r.x_cycles_nonzero_classes = false;
    }
    for (const Permutation& g : enumerate_group(GroupKind::A5)) {
      if (dual_class(act(g, r.representatives[static_cast<std::size_t>(k)])) != k) r.a5_acts_trivially = false;
    }
  }
  r.index_E_in_E0 = linalg::lattice_index(lattice_rows(LatticeKind::E), lattice_rows(LatticeKind::E0));
  r.index_E0_in_EDual = linalg::lattice_index(lattice_rows(LatticeKind::E0), lattice_rows(LatticeKind::EDual));
  return r;
}

// ---------------------------------------------------------------------------

N5Vector N5Vector::from_raw(const std::array<long long, 5>& v) {
  long long sum = 0;
  for (long long x : v) sum += x;
  if (linalg::mod_p(sum, 5) != 0) throw std::invalid_argument("coordinate sum is not 0 mod 5");
  N5Vector out;
  const std::int64_t shift = linalg::mod_p(v[4], 5);
  for (std::size_t i = 0; i < 5; ++i) out.v_[i] = linalg::mod_p(v[i] - shift, 5);
  return out;
}

N5Vector N5Vector::difference(int l, int m) {
  std::array<long long, 5> raw{};
  raw[static_cast<std::size_t>(l)] += 1;
  raw[static_cast<std::size_t>(m)] -= 1;
  return from_raw(raw);
}

N5Vector N5Vector::from_coords(const std::array<std::int64_t, 3>& c) {
  return from_raw({c[0], c[1], c[2], -(c[0] + c[1] + c[2]), 0});
}

bool N5Vector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](std::int64_t x) { return x == 0; });
}

N5Vector operator+(const N5Vector& x, const N5Vector& y) {
  std::array<long long, 5> raw{};
  for (std::size_t i = 0; i < 5; ++i) raw[i] = x.v_[i] + y.v_[i];
  return N5Vector::from_raw(raw);
}

N5Vector operator*(std::int64_t k, const N5Vector& x) {
  std::array<long long, 5> raw{};
  for (std::size_t i = 0; i < 5; ++i) raw[i] = linalg::mod_p(k, 5) * x.v_[i];
  return N5Vector::from_raw(raw);
}

N5Vector act(const Permutation& g, const N5Vector& v) {
  std::array<long long, 5> raw{};
  const int s = g.sign();
  for (int i = 0; i < 5; ++i) raw[static_cast<std::size_t>(g(i))] = s * v.representative()[static_cast<std::size_t>(i)];
  return N5Vector::from_raw(raw);
}

linalg::ModMatrix n5_action_matrix(const Permutation& g) {
  linalg::ModMatrix m(3, 3);
  for (Eigen::Index k = 0; k < 3; ++k) {
    std::array<std::int64_t, 3> unit{};
    unit[static_cast<std::size_t>(k)] = 1;
    const auto c = act(g, N5Vector::from_coords(unit)).coords();
    for (Eigen::Index r = 0; r < 3; ++r) m(r, k) = c[static_cast<std::size_t>(r)];
  }
  return m;
}

N5Vector psi_tilde(const Wedge3Vector& w) {
  N5Vector out;
  const auto& t = triples();
  for (std::size_t n = 0; n < 10; ++n) {
    const Integer& c = w.raw()[n];
    if (c.is_zero()) continue;
    std::array<int, 5> arrangement{t[n][0], t[n][1], t[n][2], 0, 0};
    std::size_t slot = 3;
    for (int x = 0; x < 5; ++x) {
      if (x != t[n][0] && x != t[n][1] && x != t[n][2]) arrangement[slot++] = x;
    }
    const bool even = Permutation(arrangement).is_even();
    const N5Vector term = even ? N5Vector::difference(arrangement[3], arrangement[4])
                               : N5Vector::difference(arrangement[4], arrangement[3]);
    out = out + mod_small(c, 5) * term;
  }
  return out;
}

const linalg::ModMatrix& psi_matrix() {
  static const linalg::ModMatrix m = [] {
    IntMatrix d(10, 6);
    for (std::size_t n = 0; n < 10; ++n) {
      const auto& t = triples()[n];
      d.row(static_cast<Eigen::Index>(n)) = e0_coords(delta(Wedge3Vector::f(t[0], t[1], t[2]))).transpose();
    }
    auto psi_of = [](const IntVector& w) {
      Wedge3Vector x;
      for (std::size_t n = 0; n < 10; ++n) {
        const auto& t = triples()[n];
        x = x + w(static_cast<Eigen::Index>(n)) * Wedge3Vector::f(t[0], t[1], t[2]);
      }
      return psi_tilde(x);
    };
    // psi_tilde must vanish on the kernel of delta
    const IntMatrix kernel = linalg::integer_kernel(IntMatrix(d.transpose()));
    for (Eigen::Index r = 0; r < kernel.rows(); ++r) {
      if (!psi_of(kernel.row(r).transpose()).is_zero()) {
        throw InconsistentExtension("psi_tilde does not vanish on the kernel of delta");
      }
    }
    linalg::ModMatrix out(3, 6);
    for (Eigen::Index k = 0; k < 6; ++k) {
      IntVector unit = IntVector::Zero(6);
      unit(k) = 1;
      const auto w = linalg::express_in_rows(d, unit);
      if (!w) throw InconsistentExtension("delta does not reach an E0 basis vector");
      const auto c = psi_of(*w).coords();
      for (Eigen::Index r = 0; r < 3; ++r) out(r, k) = c[static_cast<std::size_t>(r)];
    }
    return out;
  }();
  return m;
}

N5Vector psi(const LatticeVector& v) {
  const Vec6 y = e0_coords(v);
  std::array<std::int64_t, 3> c{};
  const auto& m = psi_matrix();
  for (Eigen::Index r = 0; r < 3; ++r) {
    std::int64_t s = 0;
    for (Eigen::Index k = 0; k < 6; ++k) s = linalg::mod_p(s + m(r, k) * mod_small(y(k), 5), 5);
    c[static_cast<std::size_t>(r)] = s;
  }
  return N5Vector::from_coords(c);
}

IntMatrix e0_action_matrix(const Permutation& g) { return to_basis(action_matrix(g), lattice_rows(LatticeKind::E0)); }

EquivariantHomResult equivariant_homs_to_N5() {
  constexpr std::int64_t p = 5;
  const auto gens = group_generators(GroupKind::A5);
  linalg::ModMatrix eqs = linalg::ModMatrix::Zero(static_cast<Eigen::Index>(18 * gens.size()), 18);
  Eigen::Index row = 0;
  for (const Permutation& g : gens) {
    const IntMatrix a = e0_action_matrix(g);
    const linalg::ModMatrix n = n5_action_matrix(g);
    for (Eigen::Index r = 0; r < 3; ++r) {
      for (Eigen::Index k = 0; k < 6; ++k, ++row) {
        // (H A - N H)_rk
        for (Eigen::Index j = 0; j < 6; ++j) eqs(row, r * 6 + j) += mod_small(a(j, k), p);
        for (Eigen::Index s = 0; s < 3; ++s) eqs(row, s * 6 + k) -= n(r, s);
      }
    }
  }
  for (Eigen::Index i = 0; i < eqs.rows(); ++i)
    for (Eigen::Index j = 0; j < eqs.cols(); ++j) eqs(i, j) = linalg::mod_p(eqs(i, j), p);

  EquivariantHomResult out;
  out.basis = linalg::nullspace_mod(eqs, p);
  out.dimension = out.basis.cols();
  if (out.dimension != 1) {
    throw DimensionMismatch("equivariant maps to N5 form a space of dimension " + std::to_string(out.dimension));
  }
  linalg::ModMatrix both(18, 2);
  both.col(0) = out.basis.col(0);
  const auto& m = psi_matrix();
  for (Eigen::Index r = 0; r < 3; ++r)
    for (Eigen::Index k = 0; k < 6; ++k) both(r * 6 + k, 1) = m(r, k);
  const bool psi_nonzero = linalg::rank_mod(both.col(1), p) == 1;
  out.psi_in_span = psi_nonzero && linalg::rank_mod(both, p) == 1;
  return out;
}

// ---------------------------------------------------------------------------

std::vector<OrderElement> lemma_classification_scan(ScanCase which, int bound) {
  if (bound < 0) throw std::invalid_argument("scan bound must be nonnegative");
  const auto& fx = orbit_fixtures();
  const auto targets = antipodal_representatives(fx.c.elements);
  const auto sources = antipodal_representatives(which == ScanCase::Dc ? fx.c.elements : fx.ir.elements);
  const OrderElement x_inv3 = OrderElement(-3, 2);

  std::vector<OrderElement> out;
  for (int p = -bound; p <= bound; ++p) {
    for (int q = -bound; q <= bound; ++q) {
      const OrderElement lambda = OrderElement(p) + OrderElement(q) * x_inv3;
      if (lambda.is_zero()) continue;
      std::vector<LatticeVector> image;
      for (const auto& d : sources) image.push_back(scalar_mul(lambda, d));
      bool ok = true;
      for (const auto& y : targets) {
        int nonzero = 0;
        for (const auto& d : image) {
          const Integer t = inner2(d, y);
          if (t.is_zero()) continue;
          if (!(abs(t) == Integer(2))) {
            ok = false;
            break;
          }
          ++nonzero;
        }
        if (!ok) break;
        if (which == ScanCase::Dir && nonzero > 3) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(lambda);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> roots_norm2() {
  std::vector<LatticeVector> out;
  std::array<long long, 6> c{};
  for (int n = 0; n < 15625; ++n) {
    int r = n;
    for (std::size_t i = 0; i < 6; ++i) {
      c[i] = r % 5 - 2;
      r /= 5;
    }
    const LatticeVector v = LatticeVector::of(c);
    if (v.in_E() && inner2(v, v) == Integer(4)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

SymTensor SymTensor::square(const LatticeVector& v) {
  const RatVec6 p = v.orthonormal();
  return SymTensor(RatMat6(p * p.transpose()));
}

SymTensor SymTensor::sum_of_squares(const std::vector<LatticeVector>& vectors) {
  SymTensor t;
  for (const auto& v : vectors) t = t + square(v);
  return t;
}

SymTensor SymTensor::inverse_form() { return SymTensor(RatMat6::Identity()); }

SymTensor SymTensor::scaled_inverse_form(const OrderElement& lambda) {
  const RatMat6 m = RatMat6::Identity() * Rational(lambda.a()) + x_matrix_orthonormal() * Rational(lambda.b());
  return SymTensor(RatMat6(m.transpose()));
}

bool SymTensor::is_symmetric() const { return m_ == m_.transpose(); }

Mat6 SymTensor::doubled() const { return to_integer6(RatMat6(m_ * Rational(2))); }

}  // namespace wiman
