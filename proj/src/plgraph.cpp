#include "wiman/plgraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace wiman {

namespace {

std::array<LatticeVector, 6> bouquet_loops() { return {lv::e(), lv::e(0), lv::e(1), lv::e(2), lv::e(3), lv::e(4)}; }

int pair_vertex(int a, int b) {
  if (a > b) std::swap(a, b);
  const auto& p = pairs();
  for (int n = 0; n < 10; ++n) {
    if (p[static_cast<std::size_t>(n)][0] == a && p[static_cast<std::size_t>(n)][1] == b) return n;
  }
  throw std::logic_error("not a 2-subset");
}

OrientedEdge find_edge(const OrientedGraph& graph, int tail, int head) {
  for (int n = 0; n < graph.edge_count(); ++n) {
    const Edge& e = graph.edges[static_cast<std::size_t>(n)];
    if (e.tail == tail && e.head == head) return {n, 1};
    if (e.tail == head && e.head == tail) return {n, -1};
  }
  throw std::logic_error("no such edge");
}

}  // namespace

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Bouquet6:
      return "bouquet6";
    case GraphKind::K5:
      return "K5";
    case GraphKind::Petersen:
      return "petersen";
  }
  return "?";
}

int OrientedGraph::component_count() const {
  std::vector<int> parent(vertex_labels.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const Edge& e : edges) parent[static_cast<std::size_t>(find(e.tail))] = find(e.head);
  int count = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    if (find(v) == v) ++count;
  }
  return count;
}

int OrientedGraph::betti_number() const { return edge_count() - vertex_count() + component_count(); }

OrientedGraph build_graph(GraphKind kind) {
  OrientedGraph g{kind, {}, {}};
  switch (kind) {
    case GraphKind::Bouquet6:
      g.vertex_labels = {"*"};
      g.edges.assign(6, Edge{0, 0});
      break;
    case GraphKind::K5:
      for (int i = 0; i < 5; ++i) g.vertex_labels.push_back(std::to_string(i));
      for (const auto& p : pairs()) g.edges.push_back({p[0], p[1]});
      break;
    case GraphKind::Petersen: {
      const auto& p = pairs();
      for (const auto& s : p) g.vertex_labels.push_back("{" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "}");
      for (int a = 0; a < 10; ++a) {
        for (int b = a + 1; b < 10; ++b) {
          const auto& x = p[static_cast<std::size_t>(a)];
          const auto& y = p[static_cast<std::size_t>(b)];
          if (x[0] != y[0] && x[0] != y[1] && x[1] != y[0] && x[1] != y[1]) g.edges.push_back({a, b});
        }
      }
      break;
    }
  }
  return g;
}

OrientedEdge act(const Permutation& g, const OrientedGraph& graph, const OrientedEdge& edge) {
  switch (graph.kind) {
    case GraphKind::Bouquet6: {
      const auto loops = bouquet_loops();
      const LatticeVector image = act(g, loops[static_cast<std::size_t>(edge.edge)]);
      for (int n = 0; n < 6; ++n) {
        if (image == loops[static_cast<std::size_t>(n)]) return {n, edge.sign};
        if (image == -loops[static_cast<std::size_t>(n)]) return {n, -edge.sign};
      }
      throw std::logic_error("loop image outside the orbit of e");
    }
    case GraphKind::K5: {
      const Edge& e = graph.edges[static_cast<std::size_t>(edge.edge)];
      OrientedEdge out = find_edge(graph, g(e.tail), g(e.head));
      out.sign *= edge.sign;
      return out;
    }
    case GraphKind::Petersen: {
      const Edge& e = graph.edges[static_cast<std::size_t>(edge.edge)];
      const auto& p = pairs();
      const auto& t = p[static_cast<std::size_t>(e.tail)];
      const auto& h = p[static_cast<std::size_t>(e.head)];
      OrientedEdge out = find_edge(graph, pair_vertex(g(t[0]), g(t[1])), pair_vertex(g(h[0]), g(h[1])));
      out.sign *= edge.sign;
      return out;
    }
  }
  return edge;
}

IntMatrix coboundary_lattice(const OrientedGraph& graph) {
  IntMatrix d = IntMatrix::Zero(graph.vertex_count(), graph.edge_count());
  for (int n = 0; n < graph.edge_count(); ++n) {
    const Edge& e = graph.edges[static_cast<std::size_t>(n)];
    if (e.tail == e.head) continue;
    d(e.head, n) += 1;
    d(e.tail, n) -= 1;
  }
  return linalg::lattice_basis(d);
}

CohomologyRank first_cohomology(const OrientedGraph& graph) {
  const IntMatrix b = coboundary_lattice(graph);
  bool torsion_free = true;
  for (const Integer& d : linalg::smith_invariants(b)) {
    if (!(d == Integer(1))) torsion_free = false;
  }
  return {graph.edge_count() - static_cast<int>(b.rows()), torsion_free};
}

K5Edge edge_for_threecycle(const Permutation& h) {
  const auto type = h.cycle_type();
  if (type != std::vector<int>{1, 1, 3}) throw std::invalid_argument(to_cycles(h) + " is not a 3-cycle");
  int a = 0;
  while (h(a) == a) ++a;
  std::array<int, 5> arrangement{a, h(a), h(h(a)), 0, 0};
  std::size_t slot = 3;
  for (int x = 0; x < 5; ++x) {
    if (h(x) == x) arrangement[slot++] = x;
  }
  if (!Permutation(arrangement).is_even()) std::swap(arrangement[3], arrangement[4]);
  return {arrangement[3], arrangement[4]};
}

std::map<Permutation, K5Edge> edge_threecycle_bijection() {
  std::map<Permutation, K5Edge> out;
  for (const Permutation& h : enumerate_group(GroupKind::A5)) {
    if (h.order() == 3) out.emplace(h, edge_for_threecycle(h));
  }
  return out;
}

LatticeVector EquivariantIdentification::value(const OrientedEdge& e) const {
  const LatticeVector& v = assignment[static_cast<std::size_t>(e.edge)];
  return e.sign > 0 ? v : -v;
}

EquivariantIdentification equivariant_identification(const OrientedGraph& graph, const OrientedEdge& base_edge,
                                                     const LatticeVector& base_value,
                                                     const std::vector<Permutation>& generators) {
  std::vector<std::optional<LatticeVector>> values(static_cast<std::size_t>(graph.edge_count()));
  std::deque<std::pair<OrientedEdge, LatticeVector>> queue;
  auto assign = [&](const OrientedEdge& e, const LatticeVector& v) {
    const LatticeVector stored = e.sign > 0 ? v : -v;
    auto& slot = values[static_cast<std::size_t>(e.edge)];
    if (slot) {
      if (!(*slot == stored)) {
        throw InconsistentExtension("edge " + std::to_string(e.edge) + " reached with " + to_string(stored) +
                                    " and " + to_string(*slot));
      }
      return;
    }
    slot = stored;
    queue.emplace_back(e, v);
  };
  assign(base_edge, base_value);
  while (!queue.empty()) {
    const auto [e, v] = queue.front();
    queue.pop_front();
    for (const Permutation& g : generators) assign(act(g, graph, e), act(g, v));
  }
  EquivariantIdentification id{graph.kind, base_edge, base_value, {}};
  for (const auto& v : values) {
    if (!v) throw InconsistentExtension("A5 does not act transitively on the edges");
    id.assignment.push_back(*v);
  }
  return id;
}

EquivariantIdentification equivariant_identification(GraphKind kind) {
  const OrientedGraph graph = build_graph(kind);
  const auto gens = group_generators(GroupKind::A5);
  switch (kind) {
    case GraphKind::Bouquet6:
      return equivariant_identification(graph, {0, 1}, lv::e(), gens);
    case GraphKind::K5:
      return equivariant_identification(graph, find_edge(graph, 3, 0), lv::e() + lv::e(0) + lv::e(1), gens);
    case GraphKind::Petersen:
      return equivariant_identification(graph, find_edge(graph, pair_vertex(0, 4), pair_vertex(2, 3)),
                                        lv::e() + lv::e(0), gens);
  }
  throw std::logic_error("unknown graph kind");
}

IntMatrix identification_matrix(const EquivariantIdentification& id) { return rows_of(id.assignment); }

bool kernel_is_coboundaries(const OrientedGraph& graph, const EquivariantIdentification& id) {
  const IntMatrix a = identification_matrix(id);
  const IntMatrix kernel = linalg::integer_kernel(IntMatrix(a.transpose()));
  return linalg::same_lattice(kernel, coboundary_lattice(graph));
}

bool image_spans(const EquivariantIdentification& id, LatticeKind kind) { return spans(id.assignment, kind); }

bool is_equivariant(const OrientedGraph& graph, const EquivariantIdentification& id) {
  for (const Permutation& g : enumerate_group(GroupKind::A5)) {
    for (int n = 0; n < graph.edge_count(); ++n) {
      const OrientedEdge e{n, 1};
      if (!(id.value(act(g, graph, e)) == act(g, id.value(e)))) return false;
    }
  }
  return true;
}

SymTensor variation_tensor(const EquivariantIdentification& id) { return SymTensor::sum_of_squares(id.assignment); }

SymTensor variation_tensor(GraphKind kind) { return variation_tensor(equivariant_identification(kind)); }

OrderElement expected_variation_scalar(GraphKind kind) {
  switch (kind) {
    case GraphKind::Bouquet6:
      return 1;
    case GraphKind::K5:
      return {3, 4};
    case GraphKind::Petersen:
      return {4, 2};
  }
  return 0;
}

std::vector<LatticeVector> explicit_vanishing_vectors(GraphKind kind) {
  using lv::e;
  std::vector<LatticeVector> out;
  switch (kind) {
    case GraphKind::Bouquet6:
      out.push_back(e());
      for (int i = 0; i < 5; ++i) out.push_back(e(i));
      break;
    case GraphKind::K5:
      for (int i = 0; i < 5; ++i) out.push_back(e() + e(i) + e(i + 1));
      for (int i = 0; i < 5; ++i) out.push_back(e(i) - e(i - 2) - e(i + 2));
      break;
    case GraphKind::Petersen:
      for (int i = 0; i < 5; ++i) out.push_back(e() + e(i));
      for (int i = 0; i < 5; ++i) out.push_back(e(i) + e(i + 1));
      for (int i = 0; i < 5; ++i) out.push_back(e(i - 1) - e(i + 1));
      break;
  }
  return out;
}

std::string describe(const OrientedGraph& graph) {
  std::ostringstream os;
  for (const Edge& e : graph.edges) {
    os << graph.vertex_labels[static_cast<std::size_t>(e.tail)] << " -> "
       << graph.vertex_labels[static_cast<std::size_t>(e.head)] << "\n";
  }
  return os.str();
}

}  // namespace wiman
