#pragma once

// Exact linear algebra over the integers and over prime fields.
//
// All lattice routines use the row convention: the rows of a matrix generate
// the lattice. Hermite forms are canonical, so two generator sets span the same
// lattice iff their Hermite forms agree.

#include "wiman/errors.hpp"
#include "wiman/integer.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace wiman::linalg {

template <typename Scalar>
struct HermiteResult {
  MatrixX<Scalar> form;       // rank rows, echelon, positive pivots, reduced above pivots
  MatrixX<Scalar> transform;  // unimodular, transform * input = [form; 0]
  std::vector<Eigen::Index> pivots;
};

template <typename Scalar>
HermiteResult<Scalar> hermite(const MatrixX<Scalar>& input) {
  const Eigen::Index m = input.rows();
  const Eigen::Index n = input.cols();
  MatrixX<Scalar> h = input;
  MatrixX<Scalar> u = MatrixX<Scalar>::Identity(m, m);
  std::vector<Eigen::Index> pivots;

  auto combine = [&](Eigen::Index r, Eigen::Index s, const Scalar& x, const Scalar& y, const Scalar& a,
                     const Scalar& b) {
    // [r; s] <- [[x, y], [-b, a]] * [r; s], determinant x*a + y*b = 1
    const auto hr = h.row(r).eval(), hs = h.row(s).eval();
    h.row(r) = hr * x + hs * y;
    h.row(s) = hs * a - hr * b;
    const auto ur = u.row(r).eval(), us = u.row(s).eval();
    u.row(r) = ur * x + us * y;
    u.row(s) = us * a - ur * b;
  };

  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    for (Eigen::Index i = row + 1; i < m; ++i) {
      if (h(i, col).is_zero()) continue;
      const auto eg = extended_gcd(h(row, col), h(i, col));
      const Scalar a = h(row, col) / eg.g;
      const Scalar b = h(i, col) / eg.g;
      combine(row, i, eg.x, eg.y, a, b);
    }
    if (h(row, col).is_zero()) continue;
    if (h(row, col).sign() < 0) {
      h.row(row) = -h.row(row);
      u.row(row) = -u.row(row);
    }
    for (Eigen::Index i = 0; i < row; ++i) {
      const Scalar q = floor_div(h(i, col), h(row, col));
      if (q.is_zero()) continue;
      h.row(i) -= h.row(row) * q;
      u.row(i) -= u.row(row) * q;
    }
    pivots.push_back(col);
    ++row;
  }
  return {h.topRows(row), u, pivots};
}

/// Canonical basis (Hermite form rows) of the lattice generated by the rows.
template <typename Scalar>
MatrixX<Scalar> lattice_basis(const MatrixX<Scalar>& generators) {
  return hermite(generators).form;
}

template <typename Scalar>
bool same_lattice(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  const auto ha = lattice_basis(a), hb = lattice_basis(b);
  return ha.rows() == hb.rows() && ha.cols() == hb.cols() && ha == hb;
}

/// Coefficients c with c^T * generators = target, if the target lies in the row lattice.
template <typename Scalar>
std::optional<VectorX<Scalar>> express_in_rows(const MatrixX<Scalar>& generators, const VectorX<Scalar>& target) {
  const auto hr = hermite(generators);
  VectorX<Scalar> residual = target;
  VectorX<Scalar> y = VectorX<Scalar>::Zero(hr.form.rows());
  for (Eigen::Index i = 0; i < hr.form.rows(); ++i) {
    const Eigen::Index p = hr.pivots[static_cast<std::size_t>(i)];
    const Scalar& pivot = hr.form(i, p);
    if (!(residual(p) % pivot).is_zero()) return std::nullopt;
    y(i) = residual(p) / pivot;
    residual -= hr.form.row(i).transpose() * y(i);
  }
  for (Eigen::Index j = 0; j < residual.size(); ++j) {
    if (!residual(j).is_zero()) return std::nullopt;
  }
  return (y.transpose() * hr.transform.topRows(hr.form.rows())).transpose().eval();
}

template <typename Scalar>
bool lattice_contains(const MatrixX<Scalar>& generators, const VectorX<Scalar>& v) {
  return express_in_rows(generators, v).has_value();
}

/// Z-basis (as rows, Hermite form) of { x : a * x = 0 }.
template <typename Scalar>
MatrixX<Scalar> integer_kernel(const MatrixX<Scalar>& a) {
  const auto hr = hermite(MatrixX<Scalar>(a.transpose()));
  const Eigen::Index rank = hr.form.rows();
  const Eigen::Index n = a.cols();
  if (rank == n) return MatrixX<Scalar>(0, n);
  return lattice_basis(MatrixX<Scalar>(hr.transform.bottomRows(n - rank)));
}

/// Fraction-free (Bareiss) determinant.
template <typename Scalar>
Scalar determinant(MatrixX<Scalar> m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k).is_zero()) ++swap;
      if (swap == n) return Scalar(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Index [super : sub] of full-rank lattices of equal dimension given by generator rows.
template <typename Scalar>
Scalar lattice_index(const MatrixX<Scalar>& sub, const MatrixX<Scalar>& super) {
  const auto hs = lattice_basis(sub), hp = lattice_basis(super);
  if (hs.rows() != hs.cols() || hp.rows() != hp.cols() || hs.rows() != hp.rows()) {
    throw RankMismatch("lattice_index needs two full-rank lattices of equal dimension");
  }
  for (Eigen::Index i = 0; i < hs.rows(); ++i) {
    if (!lattice_contains(hp, VectorX<Scalar>(hs.row(i).transpose()))) {
      throw RankMismatch("lattice_index: first lattice is not contained in the second");
    }
  }
  Scalar ds = 1, dp = 1;
  for (Eigen::Index i = 0; i < hs.rows(); ++i) {
    ds *= hs(i, i);
    dp *= hp(i, i);
  }
  return ds / dp;
}

/// Nonzero invariant factors d1 | d2 | ... of the Smith form.
template <typename Scalar>
std::vector<Scalar> smith_invariants(const MatrixX<Scalar>& a) {
  MatrixX<Scalar> m = a;
  auto is_diagonal = [](const MatrixX<Scalar>& x) {
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index j = 0; j < x.cols(); ++j)
        if (i != j && !x(i, j).is_zero()) return false;
    return true;
  };
  for (;;) {
    m = hermite(m).form;
    if (is_diagonal(m)) break;
    m = hermite(MatrixX<Scalar>(m.transpose())).form;
    if (is_diagonal(m)) break;
  }
  std::vector<Scalar> d;
  for (Eigen::Index i = 0; i < std::min(m.rows(), m.cols()); ++i) {
    if (!m(i, i).is_zero()) d.push_back(abs(m(i, i)));
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const Scalar g = gcd(d[i], d[j]);
      const Scalar l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  return d;
}

/// Inverse over the rationals (Gauss-Jordan); throws RankMismatch when singular.
inline RatMatrix inverse(const RatMatrix& a) {
  const Eigen::Index n = a.rows();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && m(p, c) == Rational(0)) ++p;
    if (p == n) throw RankMismatch("matrix is singular");
    m.row(c).swap(m.row(p));
    inv.row(c).swap(inv.row(p));
    const Rational pivot = m(c, c);
    for (Eigen::Index j = 0; j < n; ++j) {
      m(c, j) = m(c, j) / pivot;
      inv(c, j) = inv(c, j) / pivot;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || m(i, c) == Rational(0)) continue;
      const Rational f = m(i, c);
      m.row(i) -= m.row(c) * f;
      inv.row(i) -= inv.row(c) * f;
    }
  }
  return inv;
}

/// Rational matrix with integral entries converted back; throws when an entry is fractional.
inline IntMatrix to_integer(const RatMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_integer()) throw RankMismatch("matrix entry is not integral: " + a(i, j).str());
      out(i, j) = a(i, j).numerator();
    }
  return out;
}

// ---------------------------------------------------------------------------
// Prime fields. Entries are kept in [0, p).

using ModMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

inline std::int64_t mod_p(std::int64_t v, std::int64_t p) {
  const std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  const auto eg = extended_gcd(Integer(mod_p(a, p)), Integer(p));
  if (!(eg.g == Integer(1))) throw NotAUnit("no inverse modulo " + std::to_string(p));
  return mod_p(eg.x.to_int64(), p);
}

/// Reduced row echelon form modulo p; returns the pivot columns.
inline std::vector<Eigen::Index> rref_mod(ModMatrix& m, std::int64_t p) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < m.cols() && row < m.rows(); ++c) {
    Eigen::Index r = row;
    while (r < m.rows() && mod_p(m(r, c), p) == 0) ++r;
    if (r == m.rows()) continue;
    m.row(row).swap(m.row(r));
    const std::int64_t inv = inverse_mod(m(row, c), p);
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(row, j) = mod_p(m(row, j) * inv, p);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const std::int64_t f = mod_p(m(i, c), p);
      if (f == 0) continue;
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = mod_p(m(i, j) - f * m(row, j), p);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline Eigen::Index rank_mod(ModMatrix m, std::int64_t p) { return static_cast<Eigen::Index>(rref_mod(m, p).size()); }

/// Basis of { x : a x = 0 } over F_p, one basis vector per column.
inline ModMatrix nullspace_mod(ModMatrix a, std::int64_t p) {
  const auto pivots = rref_mod(a, p);
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.push_back(c);
  }
  ModMatrix basis = ModMatrix::Zero(a.cols(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Eigen::Index f = free[k];
    const auto col = static_cast<Eigen::Index>(k);
    basis(f, col) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis(pivots[r], col) = mod_p(-a(static_cast<Eigen::Index>(r), f), p);
    }
  }
  return basis;
}

}  // namespace wiman::linalg
