#pragma once

// The rank-two symplectic O0-module of the curve homology, the monodromy
// generators, Picard-Lefschetz multitwists on E0 + E0, level structures and cusps.

#include "wiman/lattice.hpp"
#include "wiman/qring.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace wiman {

/// Columns are the (v, v')-coordinates of the images of v and v'.
using SympMat = Eigen::Matrix<OrderElement, 2, 2>;
using SympVec = Eigen::Matrix<OrderElement, 2, 1>;

SympMat symp(const OrderElement& a, const OrderElement& b, const OrderElement& c, const OrderElement& d);
SympMat symp_identity();
OrderElement det(const SympMat& m);
bool in_O0(const SympMat& m);
/// Inverse of a determinant-one matrix.
SympMat inverse(const SympMat& m);
/// (M - I)^2 = 0.
bool is_unipotent_transvection(const SympMat& m);
/// "[[a,b],[c,d]]".
std::string to_string(const SympMat& m);

/// X^3 = 1 + 2X and X^-3 = -3 + 2X.
OrderElement x_cubed();
OrderElement x_inv_cubed();

enum class Generator { Alpha, AlphaPrime, Beta, BetaPrime };
std::string to_string(Generator g);
const std::array<Generator, 4>& all_generators();

SympMat generator_matrix(Generator g);
/// In the order alpha, alpha', beta, beta'.
std::array<SympMat, 4> generators();

/// [[a,b],[c,d]] -> [[d',c'],[b',a']], ' being Galois conjugation.
SympMat iota_conj(const SympMat& m);

// ---------------------------------------------------------------------------
// H1 = E0 + E0

struct H1Vector {
  LatticeVector first;
  LatticeVector second;

  friend H1Vector operator+(const H1Vector& x, const H1Vector& y) { return {x.first + y.first, x.second + y.second}; }
  friend H1Vector operator-(const H1Vector& x, const H1Vector& y) { return {x.first - y.first, x.second - y.second}; }
  friend H1Vector operator*(const Integer& k, const H1Vector& x) { return {k * x.first, k * x.second}; }
  friend bool operator==(const H1Vector& x, const H1Vector& y) { return x.first == y.first && x.second == y.second; }
};

/// <x, y> = s(x1, X^-3 y2) - s(y1, X^-3 x2).
Integer pairing(const H1Vector& x, const H1Vector& y);
/// The twelve vectors (b, 0), (0, b) for b running over a Z-basis of E0.
std::vector<H1Vector> h1_basis();
/// Gram matrix of the pairing on h1_basis().
IntMatrix h1_gram();
bool pairing_is_unimodular();

H1Vector act(const Permutation& g, const H1Vector& x);
H1Vector scalar_mul(const OrderElement& lambda, const H1Vector& x);
/// (a x1 + b x2, c x1 + d x2).
H1Vector apply(const SympMat& m, const H1Vector& x);

/// x + sum over the representatives of <delta, x> delta.
H1Vector multitwist(const std::vector<H1Vector>& vanishing, const H1Vector& x);

using H1Map = std::function<H1Vector(const H1Vector&)>;

/// The 2x2 matrix over O0 inducing `twist` on E0 + E0.
/// Throws NotEquivariant when twist does not commute with A5, NotO0Linear when no such matrix exists.
SympMat induced_matrix(const H1Map& twist);

enum class VanishingSet { Alpha, AlphaPrime, Beta, BetaPrime, CInfinity };
std::string to_string(VanishingSet which);
/// Alpha {(d,0)}, AlphaPrime {(0,d)} over Delta_c; Beta {(X^3 d, -X^3 d)}, BetaPrime {(d,-d)} over Delta_ir;
/// CInfinity {(d, Xd)} over Delta_inf. One representative per antipodal pair.
std::vector<H1Vector> vanishing_set(VanishingSet which);
SympMat multitwist_matrix(VanishingSet which);

// ---------------------------------------------------------------------------
// Matrix identities

struct ProductReport {
  SympMat b;           // rho(alpha) rho(beta)
  SympMat iota_b;      // iota B iota
  SympMat product;     // B iota B iota
  SympMat nilpotent;   // [[-X^-2, X^-3], [-X^-1, X^-2]] with entries in O
  OrderElement scale;  // -2(2+X)
};
/// Throws MatrixMismatch naming the offending entry.
ProductReport product_check();

/// The generators act on the F5-valued functional x -> reduce(x_v + x_v').
struct FixedVectorReport {
  bool beta_fixes_v_minus_v_prime = false;
  bool beta_prime_fixes_v_minus_v_prime = false;
  bool beta_fixes_v_plus_v_prime = false;
  bool functional_preserved = false;  // column sums = (1, 1) mod 5 for all four
  std::array<std::array<std::int64_t, 4>, 4> mod5{};  // row-major reductions
};
FixedVectorReport fixed_vector_check();

struct BenoistOhReport {
  std::array<SympMat, 4> conjugated;
  bool beta_upper_unipotent = false;  // [[1, X^3], [0, 1]]
  bool beta_prime_upper_unipotent = false;  // [[1, X^-3], [0, 1]]
  Integer omega_index;  // [O0 : Z X^3 + Z X^-3]
  OrderElement alpha_lower_left;
  bool alpha_matches = false;  // [[2-2X, -1+2X], [1-2X, 2X]]
};
/// Conjugation by C = [[1,0],[-1,1]].
BenoistOhReport benoist_oh_check();

// ---------------------------------------------------------------------------
// Congruence images

using ResidueMat = std::array<ResidueElement, 4>;  // row-major

ResidueMat reduce(const SympMat& m, const ResidueRing& ring);

struct CongruenceImage {
  ResidueRing ring;
  std::set<std::uint64_t> elements;         // canonical keys
  std::optional<std::int64_t> group_order;  // |SL2(R)| when enumerable
  std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
  std::optional<std::int64_t> index() const;
};

inline constexpr std::size_t kDefaultCongruenceBudget = 10'000'000;

std::uint64_t key(const ResidueMat& m);
/// Closure of the reduced generators under multiplication. Throws BudgetExceeded.
CongruenceImage congruence_image(const ResidueRing& ring, std::size_t budget = kDefaultCongruenceBudget);
CongruenceImage congruence_image(const ResidueRing& ring, const std::vector<SympMat>& gens,
                                 std::size_t budget = kDefaultCongruenceBudget);
/// Brute-force |SL2(R)|, or nullopt when |R|^4 is above the enumeration limit.
std::optional<std::int64_t> sl2_order(const ResidueRing& ring);

// ---------------------------------------------------------------------------
// Cusps

struct P1F4Report {
  std::int64_t sl2_order = 0;
  std::int64_t image_order = 0;
  bool image_alternating = false;  // all even and of order 60
  std::vector<std::vector<std::string>> sl2_f2_orbits;
  bool sl2_f2_orbits_match = false;  // {[1:0],[1:1],[0:1]} and {[X:1],[1:X]}
};
/// Points of P1(F4) as "[a:b]" in the normal form [1:0], [x:1].
std::vector<std::array<ResidueElement, 2>> p1_f4_points();
std::string to_string(const std::array<ResidueElement, 2>& point);
P1F4Report p1_f4_report();

struct Mod2SubmoduleReport {
  std::vector<std::string> listed;  // the seven generators
  bool listed_distinct = false;
  bool swap_matches = false;  // exchanges [1:0]<->[0:1], [Y:1]<->[1:Y], fixes the rest
  int exhaustive_count = 0;   // all nonzero cyclic submodules
  std::vector<std::string> unlisted;
};
Mod2SubmoduleReport cyclic_submodules_mod2();

enum class CuspType { InfinityZero, InfinityX };
std::string to_string(CuspType t);
/// Throws ZeroVector for (0, 0) and NotInSubring outside O0.
CuspType classify_cusp(const OrderElement& p, const OrderElement& q);

}  // namespace wiman
