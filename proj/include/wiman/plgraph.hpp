#pragma once

// Dual graphs of the three singular fibre types, their first cohomology and
// the variation tensors obtained by transporting edges into the lattice.

#include "wiman/icosa.hpp"
#include "wiman/integer.hpp"
#include "wiman/lattice.hpp"

#include <map>
#include <string>
#include <vector>

namespace wiman {

enum class GraphKind { Bouquet6, K5, Petersen };

std::string to_string(GraphKind kind);

struct Edge {
  int tail;
  int head;
};

struct OrientedGraph {
  GraphKind kind;
  std::vector<std::string> vertex_labels;
  std::vector<Edge> edges;

  int vertex_count() const { return static_cast<int>(vertex_labels.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int component_count() const;
  /// edges - vertices + components.
  int betti_number() const;
};

/// Bouquet6: one vertex, six loops. K5: vertices 0..4, edges i<j.
/// Petersen: vertices are the 2-subsets of {0..4} (in lexicographic order), edges join disjoint subsets.
OrientedGraph build_graph(GraphKind kind);

/// Edge label with orientation: +1 follows the stored (tail, head), -1 reverses it.
struct OrientedEdge {
  int edge;
  int sign;
  friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
  OrientedEdge reversed() const { return {edge, -sign}; }
};

/// The A5 action on oriented edges. On the bouquet the loops are the antipodal pairs
/// {+-e, +-e0, ..., +-e4}, loop 0 being e, and g permutes them as it permutes that set.
OrientedEdge act(const Permutation& g, const OrientedGraph& graph, const OrientedEdge& edge);

/// Rows: a Z-basis of the coboundaries of 0-cochains, as 1-cochains.
IntMatrix coboundary_lattice(const OrientedGraph& graph);
/// Rank of the cohomology group Z^E / B^1 and whether it is torsion free.
struct CohomologyRank {
  int rank;
  bool torsion_free;
};
CohomologyRank first_cohomology(const OrientedGraph& graph);

/// Oriented K5 edge [tail, head].
struct K5Edge {
  int tail;
  int head;
  friend auto operator<=>(const K5Edge&, const K5Edge&) = default;
};

/// Three-cycle (t1 t2 t3) -> [t4, t5] with i -> t_i an even arrangement.
K5Edge edge_for_threecycle(const Permutation& h);
std::map<Permutation, K5Edge> edge_threecycle_bijection();

struct EquivariantIdentification {
  GraphKind kind;
  OrientedEdge base_edge;
  LatticeVector base_value;
  std::vector<LatticeVector> assignment;  // value on each edge in its stored orientation

  LatticeVector value(const OrientedEdge& e) const;
};

/// The base pairing for each kind: K5 [3,0] -> e+e0+e1, Petersen {0,4}->{2,3} -> e+e0, Bouquet6 loop 0 -> e.
EquivariantIdentification equivariant_identification(GraphKind kind);
/// Extends an arbitrary base pairing by BFS over `generators`. Throws InconsistentExtension.
EquivariantIdentification equivariant_identification(const OrientedGraph& graph, const OrientedEdge& base_edge,
                                                     const LatticeVector& base_value,
                                                     const std::vector<Permutation>& generators);

/// Rows: the images of the edge indicator cochains.
IntMatrix identification_matrix(const EquivariantIdentification& id);
/// Kernel of the map Z^E -> E^ induced by the identification equals the coboundaries.
bool kernel_is_coboundaries(const OrientedGraph& graph, const EquivariantIdentification& id);
/// Lattice spanned by the image.
bool image_spans(const EquivariantIdentification& id, LatticeKind kind);
/// g * value(e) = value(g * e) for every g in A5 and every edge.
bool is_equivariant(const OrientedGraph& graph, const EquivariantIdentification& id);

/// Sum over edges of value(edge) (x) value(edge).
SymTensor variation_tensor(const EquivariantIdentification& id);
SymTensor variation_tensor(GraphKind kind);
/// The scalar lambda with t = lambda * inverse form: 1, 3+4X, 4+2X.
OrderElement expected_variation_scalar(GraphKind kind);

/// Explicit vanishing vectors written out in the orthonormal basis, one per antipodal pair:
/// e, e_i (Bouquet6); e+e_i+e_{i+1}, e_i-e_{i-2}-e_{i+2} (K5);
/// e+e_i, e_i+e_{i+1}, e_{i-1}-e_{i+1} (Petersen).
std::vector<LatticeVector> explicit_vanishing_vectors(GraphKind kind);

/// Edge list, one "label -> label" per line.
std::string describe(const OrientedGraph& graph);

}  // namespace wiman
