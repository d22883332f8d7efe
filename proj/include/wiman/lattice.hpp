#pragma once

// The rank-6 lattices E ⊂ E0 ⊂ E^ with the icosahedral action, the form s,
// the endomorphism X and the mod-5 quotient module N5.
//
// Vectors are stored in the epsilon basis (eps, e0, ..., e4) of E^, where
// eps = (e + e0 + ... + e4) / 2. The basis (e, e0, ..., e4) is orthonormal
// for s and is called the orthonormal basis below.

#include "wiman/errors.hpp"
#include "wiman/icosa.hpp"
#include "wiman/integer.hpp"
#include "wiman/linalg.hpp"
#include "wiman/qring.hpp"

#include <Eigen/Core>

#include <array>
#include <ostream>
#include <string>
#include <vector>

namespace wiman {

using Vec6 = Eigen::Matrix<Integer, 6, 1>;
using Mat6 = Eigen::Matrix<Integer, 6, 6>;
using RatVec6 = Eigen::Matrix<Rational, 6, 1>;
using RatMat6 = Eigen::Matrix<Rational, 6, 6>;

class LatticeVector {
 public:
  LatticeVector() : c_(Vec6::Zero()) {}
  explicit LatticeVector(Vec6 coords) : c_(std::move(coords)) {}
  static LatticeVector of(const std::array<long long, 6>& coords);
  /// From coordinates in the orthonormal basis; throws std::invalid_argument outside E^.
  static LatticeVector from_orthonormal(const RatVec6& p);

  const Vec6& coords() const { return c_; }
  const Integer& operator[](Eigen::Index i) const { return c_(i); }

  /// Twice the orthonormal coordinates (always integral on E^).
  Vec6 doubled_orthonormal() const;
  RatVec6 orthonormal() const;

  bool in_E0() const { return c_(0).is_even(); }
  bool in_E() const;
  bool is_zero() const;

  friend LatticeVector operator+(const LatticeVector& x, const LatticeVector& y) { return LatticeVector(x.c_ + y.c_); }
  friend LatticeVector operator-(const LatticeVector& x, const LatticeVector& y) { return LatticeVector(x.c_ - y.c_); }
  friend LatticeVector operator*(const Integer& k, const LatticeVector& x) { return LatticeVector(x.c_ * k); }
  LatticeVector operator-() const { return LatticeVector(-c_); }
  LatticeVector& operator+=(const LatticeVector& o) { c_ += o.c_; return *this; }

  friend bool operator==(const LatticeVector& x, const LatticeVector& y) { return x.c_ == y.c_; }
  /// Lexicographic on epsilon coordinates.
  friend bool operator<(const LatticeVector& x, const LatticeVector& y);

 private:
  Vec6 c_;
};

/// "2eps-e2" style, epsilon basis.
std::string to_string(const LatticeVector& v);
/// "e+e0" style, orthonormal basis; half-integral coefficients are written as fractions.
std::string to_orthonormal_string(const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

namespace lv {

LatticeVector e();
LatticeVector e(int i);  // e_i, indices mod 5
LatticeVector eps();

}  // namespace lv

// ---------------------------------------------------------------------------
// Lattices as row-generated integer matrices in epsilon coordinates

enum class LatticeKind { E, E0, EDual };

IntMatrix lattice_rows(LatticeKind kind);
IntMatrix rows_of(const std::vector<LatticeVector>& vectors);
bool spans(const std::vector<LatticeVector>& vectors, LatticeKind kind);

/// Coordinates in the basis (2eps, e0, ..., e4) of E0. Throws NotInE0.
Vec6 e0_coords(const LatticeVector& v);
LatticeVector from_e0_coords(const Vec6& y);

// ---------------------------------------------------------------------------
// Exterior powers of Z^5

/// sum over i<j of c_ij f_i^f_j in the exterior square of Z^5 / Z(1,...,1).
class Wedge2Vector {
 public:
  Wedge2Vector() { c_.fill(0); }
  /// f_i^f_j, antisymmetric, zero on the diagonal.
  static Wedge2Vector f(int i, int j);

  const std::array<Integer, 10>& raw() const { return c_; }
  /// Coordinates on the pairs i<j<=3 after the relations sum_j f_ij = 0.
  Vec6 canonical() const;
  /// The element as a lattice vector; throws std::domain_error if it is not in E^.
  LatticeVector to_lattice() const;

  friend Wedge2Vector operator+(const Wedge2Vector& x, const Wedge2Vector& y);
  friend Wedge2Vector operator*(const Integer& k, const Wedge2Vector& x);
  friend bool operator==(const Wedge2Vector& x, const Wedge2Vector& y) { return x.canonical() == y.canonical(); }

 private:
  std::array<Integer, 10> c_;
};

/// sum over i<j<k of c_ijk f_i^f_j^f_k in the exterior cube of Z^5.
class Wedge3Vector {
 public:
  Wedge3Vector() { c_.fill(0); }
  /// f_i^f_j^f_k, alternating.
  static Wedge3Vector f(int i, int j, int k);

  const std::array<Integer, 10>& raw() const { return c_; }
  friend Wedge3Vector operator+(const Wedge3Vector& x, const Wedge3Vector& y);
  friend Wedge3Vector operator*(const Integer& k, const Wedge3Vector& x);
  friend bool operator==(const Wedge3Vector&, const Wedge3Vector&) = default;

 private:
  std::array<Integer, 10> c_;
};

/// The ten triples i<j<k in lexicographic order, and their complements.
const std::array<std::array<int, 3>, 10>& triples();
const std::array<std::array<int, 2>, 10>& pairs();

Wedge2Vector act(const Permutation& g, const Wedge2Vector& w);
Wedge3Vector act(const Permutation& g, const Wedge3Vector& w);

/// Contraction: f_i^f_j^f_k -> f_ij + f_jk + f_ki, landing in E0.
LatticeVector delta(const Wedge3Vector& w);

// ---------------------------------------------------------------------------
// Group action, form and X

/// Matrix of g on epsilon coordinates (cached for all of S5).
const Mat6& action_matrix(const Permutation& g);
LatticeVector act(const Permutation& g, const LatticeVector& v);

/// 2 s(x, y); integral on E^ x E^.
Integer inner2(const LatticeVector& x, const LatticeVector& y);
Rational inner(const LatticeVector& x, const LatticeVector& y);

/// Matrix of X on epsilon coordinates: X(eps) = eps + e, X(e_i) = eps - e_{i+2} - e_{i-2}.
const Mat6& x_matrix();
/// X in the orthonormal basis (half-integral entries).
const RatMat6& x_matrix_orthonormal();
LatticeVector apply_X(const LatticeVector& v);
/// (a + bX) v.
LatticeVector scalar_mul(const OrderElement& lambda, const LatticeVector& v);

/// Change of coordinates from the lattice basis given by `rows` to epsilon coordinates and back.
IntMatrix to_basis(const Mat6& eps_matrix, const IntMatrix& rows);

// ---------------------------------------------------------------------------
// Orbits

struct OrbitFixture {
  std::string name;
  LatticeVector seed;
  std::vector<LatticeVector> elements;        // sorted
  std::vector<Permutation> stabilizer;        // in A5
  LatticeKind expected_span;
};

struct OrbitFixtures {
  OrbitFixture ir;    // orbit of e
  OrbitFixture inf;   // orbit of e + e0
  OrbitFixture c;     // orbit of e + e0 + e1
};

const OrbitFixtures& orbit_fixtures();
std::vector<LatticeVector> a5_orbit(const LatticeVector& seed, std::size_t budget = kDefaultOrbitBudget);
std::vector<LatticeVector> s5_orbit(const LatticeVector& seed, std::size_t budget = kDefaultOrbitBudget);
/// One vector from each pair {v, -v}: the lexicographically smaller one.
std::vector<LatticeVector> antipodal_representatives(const std::vector<LatticeVector>& vectors);

/// sum over representatives d of s(z, d) d. Requires integral s(z, d).
LatticeVector orbit_contraction(const std::vector<LatticeVector>& representatives, const LatticeVector& z);

// ---------------------------------------------------------------------------
// Commutant

struct CommutantResult {
  LatticeKind kind;
  IntMatrix basis_rows;          // Z-basis of the solution lattice, each row a vectorised 6x6 matrix
  std::vector<IntMatrix> basis;  // the same, as matrices in the lattice's own basis
  bool matches_expected;         // equals span{1, X} for E, span{1, 2X} for E0
};

/// Integer matrices commuting with sigma5 and sigma2 on `kind`. Throws RankMismatch unless rank 2.
CommutantResult commutant(LatticeKind kind);

/// g X g^-1 on epsilon coordinates.
Mat6 conjugate_x(const Permutation& g);

// ---------------------------------------------------------------------------
// E^ / E

struct DualQuotientReport {
  std::array<LatticeVector, 4> representatives;  // 0, e, eps, eps + e
  bool x_cycles_nonzero_classes;                 // [e] -> [eps] -> [eps+e] -> [e]
  bool a5_acts_trivially;
  Integer index_E_in_E0;
  Integer index_E0_in_EDual;
};

/// Class in E^/E as an index into the representatives: 0, 1 = [e], 2 = [eps], 3 = [eps+e].
int dual_class(const LatticeVector& v);
DualQuotientReport dual_quotient_report();

// ---------------------------------------------------------------------------
// N5 = { v in F5^5 : sum v = 0 } / F5 (1,1,1,1,1)

class N5Vector {
 public:
  N5Vector() { v_.fill(0); }
  /// Throws std::invalid_argument when the coordinate sum is nonzero mod 5.
  static N5Vector from_raw(const std::array<long long, 5>& v);
  /// f_l - f_m.
  static N5Vector difference(int l, int m);
  /// Coordinates on the basis f_k - f_3, k = 0, 1, 2.
  static N5Vector from_coords(const std::array<std::int64_t, 3>& c);

  /// Canonical representative, last entry zero.
  const std::array<std::int64_t, 5>& representative() const { return v_; }
  std::array<std::int64_t, 3> coords() const { return {v_[0], v_[1], v_[2]}; }
  bool is_zero() const;

  friend N5Vector operator+(const N5Vector& x, const N5Vector& y);
  friend N5Vector operator*(std::int64_t k, const N5Vector& x);
  friend bool operator==(const N5Vector&, const N5Vector&) = default;

 private:
  std::array<std::int64_t, 5> v_;
};

/// S5 acts by permuting coordinates, twisted by the sign character; on A5 this is the plain permutation action.
N5Vector act(const Permutation& g, const N5Vector& v);
linalg::ModMatrix n5_action_matrix(const Permutation& g);

/// f_i^f_j^f_k -> f_l - f_m, with (i,j,k,l,m) an even arrangement.
N5Vector psi_tilde(const Wedge3Vector& w);
/// The induced map on E0. Throws NotInE0.
N5Vector psi(const LatticeVector& v);
/// Matrix (3 x 6 over F5) of psi from E0 coordinates to N5 coordinates.
const linalg::ModMatrix& psi_matrix();
/// Matrix of g on E0 coordinates.
IntMatrix e0_action_matrix(const Permutation& g);

struct EquivariantHomResult {
  linalg::ModMatrix basis;  // 18 x dim, each column a row-major 3x6 matrix
  Eigen::Index dimension;
  bool psi_in_span;
};

/// F5A5-equivariant maps E0/5E0 -> N5. Throws DimensionMismatch unless one-dimensional.
EquivariantHomResult equivariant_homs_to_N5();

// ---------------------------------------------------------------------------
// Scans

enum class ScanCase { Dc, Dir };

/// lambda = p + q(2X - 3) with |p|, |q| <= bound such that lambda * (Delta_c or Delta_ir)
/// pairs with Delta_c in {-1, 0, 1}; the Dir case also requires at most three
/// non-perpendicular antipodal pairs against each member of Delta_c. Sorted.
std::vector<OrderElement> lemma_classification_scan(ScanCase which, int bound);

/// v in E with 2 s(v, v) = 4 and every epsilon coordinate in [-2, 2].
std::vector<LatticeVector> roots_norm2();

// ---------------------------------------------------------------------------
// Symmetric tensors in the orthonormal basis

class SymTensor {
 public:
  SymTensor() : m_(RatMat6::Zero()) {}
  explicit SymTensor(RatMat6 m) : m_(std::move(m)) {}

  /// v (x) v.
  static SymTensor square(const LatticeVector& v);
  static SymTensor sum_of_squares(const std::vector<LatticeVector>& vectors);
  /// The inverse form of s: e(x)e + sum e_i (x) e_i.
  static SymTensor inverse_form();
  /// (1 (x) lambda) applied to the inverse form.
  static SymTensor scaled_inverse_form(const OrderElement& lambda);

  const RatMat6& matrix() const { return m_; }
  bool is_symmetric() const;
  /// Twice the entries; throws std::domain_error if that is not integral.
  Mat6 doubled() const;

  friend SymTensor operator+(const SymTensor& x, const SymTensor& y) { return SymTensor(x.m_ + y.m_); }
  friend bool operator==(const SymTensor& x, const SymTensor& y) { return x.m_ == y.m_; }

 private:
  RatMat6 m_;
};

}  // namespace wiman
