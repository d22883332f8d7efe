#include "wiman/report.hpp"

#include "wiman/icosa.hpp"
#include "wiman/lattice.hpp"
#include "wiman/plgraph.hpp"
#include "wiman/qring.hpp"
#include "wiman/sympmono.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wiman {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Exploratory:
      return "exploratory";
  }
  return "?";
}

Status parse_status(const std::string& text) {
  if (text == "pass") return Status::Pass;
  if (text == "fail") return Status::Fail;
  if (text == "exploratory") return Status::Exploratory;
  throw std::invalid_argument("unknown status '" + text + "'");
}

const std::vector<std::string>& section_names() {
  static const std::vector<std::string> names{"algebra", "group", "lattice", "graphs",
                                              "monodromy", "congruence", "character"};
  return names;
}

bool is_section(const std::string& name) {
  const auto& n = section_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<std::string> resolve_sections(const std::vector<std::string>& requested) {
  if (requested.empty()) throw std::invalid_argument("no sections given");
  std::set<std::string> wanted;
  for (const auto& r : requested) {
    if (r == "all") {
      wanted.insert(section_names().begin(), section_names().end());
    } else if (is_section(r)) {
      wanted.insert(r);
    } else {
      throw std::invalid_argument("unknown section '" + r + "'");
    }
  }
  std::vector<std::string> out;
  for (const auto& n : section_names()) {
    if (wanted.count(n)) out.push_back(n);
  }
  return out;
}

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

using Body = std::function<Outcome()>;

CheckResult timed(const std::string& id, const std::string& anchor, const Body& body, bool exploratory = false) {
  CheckResult r{id, anchor, Status::Fail, "", 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = body();
    r.detail = o.detail;
    r.status = exploratory ? Status::Exploratory : (o.ok ? Status::Pass : Status::Fail);
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
    r.status = exploratory ? Status::Exploratory : Status::Fail;
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::mt19937_64 rng_for(const std::string& id) {
  std::seed_seq seq(id.begin(), id.end());
  return std::mt19937_64(seq);
}

OrderElement random_element(std::mt19937_64& rng, long long bound, bool o0 = false) {
  std::uniform_int_distribution<long long> d(-bound, bound);
  const long long a = d(rng);
  long long b = d(rng);
  if (o0) b *= 2;
  return {Integer(a), Integer(b)};
}

LatticeVector random_vector(std::mt19937_64& rng, long long bound, bool e0) {
  std::uniform_int_distribution<long long> d(-bound, bound);
  std::array<long long, 6> c{};
  for (auto& x : c) x = d(rng);
  if (e0) c[0] *= 2;
  return LatticeVector::of(c);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string list(const std::vector<OrderElement>& xs) {
  std::vector<std::string> parts;
  for (const auto& x : xs) parts.push_back(to_string(x));
  return "{" + join(parts) + "}";
}

constexpr int kSamples = 200;

// ---------------------------------------------------------------------------

std::vector<CheckResult> algebra_section(const RunConfig&) {
  std::vector<CheckResult> out;
  out.push_back(timed("algebra.unit-powers", "golden order: X^3 and its inverse", [] {
    const OrderElement x = OrderElement::X();
    const bool ok = power(x, 3) == x_cubed() && power(x, -3) == x_inv_cubed() &&
                    x_cubed() * x_inv_cubed() == OrderElement(1) && x * x == x + OrderElement(1);
    return Outcome{ok, "X^3 = " + to_string(power(x, 3)) + ", X^-3 = " + to_string(power(x, -3)) +
                           "; 3-2X equals -X^-3, not X^-3"};
  }));
  out.push_back(timed("algebra.norm-multiplicative", "norm form a^2+ab-b^2", [] {
    auto rng = rng_for("norm");
    for (int i = 0; i < kSamples; ++i) {
      const OrderElement x = random_element(rng, 1'000'000'000), y = random_element(rng, 1'000'000'000);
      if (!(norm(x * y) == norm(x) * norm(y))) return Outcome{false, "fails at " + to_string(x) + ", " + to_string(y)};
    }
    return Outcome{true, std::to_string(kSamples) + " random pairs"};
  }));
  out.push_back(timed("algebra.galois-automorphism", "Galois conjugation X -> 1-X", [] {
    auto rng = rng_for("galois");
    for (int i = 0; i < kSamples; ++i) {
      const OrderElement x = random_element(rng, 1'000'000), y = random_element(rng, 1'000'000);
      const bool ok = galois_conj(x + y) == galois_conj(x) + galois_conj(y) &&
                      galois_conj(x * y) == galois_conj(x) * galois_conj(y) && galois_conj(galois_conj(x)) == x &&
                      x * galois_conj(x) == OrderElement(norm(x));
      if (!ok) return Outcome{false, "fails at " + to_string(x) + ", " + to_string(y)};
    }
    return Outcome{true, std::to_string(kSamples) + " random pairs"};
  }));
  out.push_back(timed("algebra.residue-homomorphisms", "reductions O -> F4, O0 -> F2[Y]/(Y^2), F5, O0/3O0", [] {
    auto rng = rng_for("residue");
    const std::vector<ResidueRing> rings{ResidueRing::f4(), ResidueRing::f2y(), ResidueRing::f5(), ResidueRing::zn(3)};
    for (const auto& ring : rings) {
      for (int i = 0; i < kSamples; ++i) {
        const OrderElement x = random_element(rng, 1000, true), y = random_element(rng, 1000, true);
        if (!(reduce(x * y, ring) == reduce(x, ring) * reduce(y, ring)) ||
            !(reduce(x + y, ring) == reduce(x, ring) + reduce(y, ring))) {
          return Outcome{false, ring.name() + " fails at " + to_string(x) + ", " + to_string(y)};
        }
      }
    }
    const bool sqrt5 = reduce(OrderElement(-1, 2), ResidueRing::f5()).is_zero() &&
                       OrderElement(-1, 2) * OrderElement(-1, 2) == OrderElement(5);
    return Outcome{sqrt5, "ring maps respect + and *; 2X-1 squares to 5 and vanishes in F5"};
  }));
  out.push_back(timed("algebra.parse-roundtrip", "text form a+bX", [] {
    auto rng = rng_for("parse");
    for (int i = 0; i < kSamples; ++i) {
      const OrderElement x = random_element(rng, 100000);
      if (!(parse_order_element(to_string(x)) == x)) return Outcome{false, "fails at " + to_string(x)};
    }
    return Outcome{true, std::to_string(kSamples) + " random elements"};
  }));
  return out;
}

std::vector<CheckResult> group_section(const RunConfig&) {
  std::vector<CheckResult> out;
  out.push_back(timed("group.triangle-identities", "icosahedral triangle data", [] {
    std::vector<std::string> bad;
    const auto checks = verify_triangle_data();
    for (const auto& c : checks) {
      if (!c.pass()) bad.push_back(c.name + ": " + to_cycles(c.computed));
    }
    return Outcome{bad.empty(), bad.empty() ? std::to_string(checks.size()) + " identities" : join(bad)};
  }));
  out.push_back(timed("group.orders", "A5 inside S5", [] {
    const auto a5 = enumerate_group(GroupKind::A5);
    const auto s5 = enumerate_group(GroupKind::S5);
    const bool even = std::all_of(a5.begin(), a5.end(), [](const Permutation& g) { return g.is_even(); });
    std::vector<std::size_t> counts;
    for (const auto& c : conjugacy_classes(GroupKind::A5)) counts.push_back(c.size());
    std::sort(counts.begin(), counts.end());
    std::vector<std::string> sizes;
    for (const auto n : counts) sizes.push_back(std::to_string(n));
    const bool ok = a5.size() == 60 && s5.size() == 120 && even && join(sizes) == "1, 12, 12, 15, 20";
    return Outcome{ok, "|A5| = " + std::to_string(a5.size()) + ", |S5| = " + std::to_string(s5.size()) +
                           ", A5 classes " + join(sizes)};
  }));
  out.push_back(timed("group.orbit-stabilizer", "orbit-stabilizer in A5", [] {
    auto rng = rng_for("orbit-stabilizer");
    const auto a5 = enumerate_group(GroupKind::A5);
    auto act_v = [](const Permutation& g, const LatticeVector& v) { return act(g, v); };
    for (int i = 0; i < kSamples; ++i) {
      const LatticeVector v = random_vector(rng, 3, false);
      const std::size_t product = a5_orbit(v).size() * stabilizer(a5, v, act_v).size();
      if (product != 60) return Outcome{false, to_string(v) + " gives " + std::to_string(product)};
    }
    return Outcome{true, std::to_string(kSamples) + " random vectors, |orbit| * |stabilizer| = 60"};
  }));
  return out;
}

std::string kind_name(LatticeKind k) {
  switch (k) {
    case LatticeKind::E:
      return "E";
    case LatticeKind::E0:
      return "E0";
    case LatticeKind::EDual:
      return "E^";
  }
  return "?";
}

std::vector<CheckResult> lattice_section(const RunConfig& config) {
  std::vector<CheckResult> out;
  out.push_back(timed("lattice.orbit-fixtures", "orbits of e, e+e0, e+e0+e1", [&config] {
    const auto a5 = enumerate_group(GroupKind::A5);
    auto act_v = [](const Permutation& g, const LatticeVector& v) { return act(g, v); };
    struct Want {
      LatticeVector seed;
      std::size_t size, stab;
      LatticeKind span;
    };
    const std::vector<Want> wants{{lv::e(), 12, 5, LatticeKind::E0},
                                  {lv::e() + lv::e(0), 30, 2, LatticeKind::E},
                                  {lv::e() + lv::e(0) + lv::e(1), 20, 3, LatticeKind::E0}};
    bool ok = true;
    std::vector<std::string> parts;
    for (const auto& w : wants) {
      const auto orbit = a5_orbit(w.seed, config.orbit_budget);
      const auto stab = stabilizer(a5, w.seed, act_v);
      const bool spans_ok = spans(orbit, w.span);
      ok = ok && orbit.size() == w.size && stab.size() == w.stab && spans_ok;
      parts.push_back(to_orthonormal_string(w.seed) + ": " + std::to_string(orbit.size()) + " / stab " +
                      std::to_string(stab.size()) + " / spans " + kind_name(w.span) + (spans_ok ? "" : " NOT"));
    }
    const auto stab_c = stabilizer(a5, wants[2].seed, act_v);
    const bool sigma3 = std::find(stab_c.begin(), stab_c.end(), perms::sigma3()) != stab_c.end();
    return Outcome{ok && sigma3, join(parts, "; ")};
  }));
  out.push_back(timed("lattice.x-algebra", "the endomorphism X", [] {
    std::vector<LatticeVector> basis;
    for (int i = 0; i < 6; ++i) {
      std::array<long long, 6> c{};
      c[static_cast<std::size_t>(i)] = 1;
      basis.push_back(LatticeVector::of(c));
    }
    bool square = true, adjoint = true, commutes = true;
    for (const auto& u : basis) {
      square = square && apply_X(apply_X(u)) == apply_X(u) + u;
      for (const auto& w : basis) adjoint = adjoint && inner(apply_X(u), w) == inner(u, apply_X(w));
      for (const auto& g : enumerate_group(GroupKind::A5)) commutes = commutes && act(g, apply_X(u)) == apply_X(act(g, u));
    }
    const bool tau = conjugate_x(perms::tau4()) == Mat6(Mat6::Identity() - x_matrix());
    std::ostringstream os;
    os << "X^2=X+1 " << square << ", self-adjoint " << adjoint << ", commutes with A5 " << commutes
       << ", tau4 X tau4^-1 = 1-X " << tau;
    return Outcome{square && adjoint && commutes && tau, os.str()};
  }));
  out.push_back(timed("lattice.commutants", "integer commutant of A5", [] {
    const auto e = commutant(LatticeKind::E);
    const auto e0 = commutant(LatticeKind::E0);
    return Outcome{e.matches_expected && e0.matches_expected,
                   std::string("E: Z+ZX ") + (e.matches_expected ? "yes" : "no") + ", E0: Z+Z2X " +
                       (e0.matches_expected ? "yes" : "no")};
  }));
  out.push_back(timed("lattice.dual-quotient", "E^/E", [] {
    const auto r = dual_quotient_report();
    const bool ok = r.x_cycles_nonzero_classes && r.a5_acts_trivially && r.index_E_in_E0 == Integer(2) &&
                    r.index_E0_in_EDual == Integer(2);
    return Outcome{ok, "[E0:E] = " + r.index_E_in_E0.str() + ", [E^:E0] = " + r.index_E0_in_EDual.str() +
                           ", X permutes the nonzero classes cyclically, A5 acts trivially"};
  }));
  out.push_back(timed("lattice.isogeny-homs", "equivariant maps E0 -> N5", [] {
    const auto r = equivariant_homs_to_N5();
    return Outcome{r.dimension == 1 && r.psi_in_span,
                   "dimension " + std::to_string(r.dimension) + (r.psi_in_span ? ", generated by psi" : ", psi missing")};
  }));
  out.push_back(timed("lattice.classification-scan", "scalar multiples of Delta_c and Delta_ir", [&config] {
    const auto dc = lemma_classification_scan(ScanCase::Dc, config.scan_bound);
    const auto dir = lemma_classification_scan(ScanCase::Dir, config.scan_bound);
    const std::vector<OrderElement> want_dc{{-3, 2}, {3, -2}};
    const std::vector<OrderElement> want_dir{{-3, 2}, -1, 1, {3, -2}};
    auto sorted = [](std::vector<OrderElement> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    const bool ok = sorted(dc) == sorted(want_dc) && sorted(dir) == sorted(want_dir);
    return Outcome{ok, "bound " + std::to_string(config.scan_bound) + ": Delta_c " + list(dc) + ", Delta_ir " + list(dir)};
  }));
  out.push_back(timed("lattice.contraction", "sum over Delta_ir of s(z,d) d", [] {
    auto rng = rng_for("contraction");
    const auto reps = antipodal_representatives(orbit_fixtures().ir.elements);
    for (int i = 0; i < kSamples; ++i) {
      const LatticeVector z = random_vector(rng, 50, true);
      if (!(orbit_contraction(reps, z) == z)) return Outcome{false, "fails at " + to_string(z)};
    }
    return Outcome{true, std::to_string(kSamples) + " random z in E0"};
  }));
  out.push_back(timed("lattice.roots", "roots of E", [] {
    const auto roots = roots_norm2();
    return Outcome{roots.size() == 60, std::to_string(roots.size()) + " vectors of norm 2"};
  }));
  return out;
}

std::vector<CheckResult> graphs_section(const RunConfig&) {
  std::vector<CheckResult> out;
  const std::array<GraphKind, 3> kinds{GraphKind::Bouquet6, GraphKind::K5, GraphKind::Petersen};
  const std::array<LatticeKind, 3> images{LatticeKind::E0, LatticeKind::E0, LatticeKind::E};
  for (std::size_t k = 0; k < 3; ++k) {
    const GraphKind kind = kinds[k];
    out.push_back(timed("graphs.cohomology." + to_string(kind), "dual graph " + to_string(kind), [kind, k, &images] {
      const auto g = build_graph(kind);
      const auto id = equivariant_identification(kind);
      const auto h = first_cohomology(g);
      const bool ok = g.betti_number() == 6 && h.rank == 6 && h.torsion_free && kernel_is_coboundaries(g, id) &&
                      image_spans(id, images[k]) && is_equivariant(g, id);
      return Outcome{ok, std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
                             " edges, H^1 free of rank " + std::to_string(h.rank) + ", image spans " +
                             kind_name(images[k])};
    }));
  }
  out.push_back(timed("graphs.variation-tensors", "variation tensors of the singular fibres", [&kinds] {
    const auto& fx = orbit_fixtures();
    const std::array<const OrbitFixture*, 3> orbits{&fx.ir, &fx.c, &fx.inf};
    bool ok = true;
    std::vector<std::string> parts;
    for (std::size_t k = 0; k < 3; ++k) {
      const OrderElement lambda = expected_variation_scalar(kinds[k]);
      const SymTensor want = SymTensor::scaled_inverse_form(lambda);
      const bool graph = variation_tensor(kinds[k]) == want;
      const bool direct = SymTensor::sum_of_squares(antipodal_representatives(orbits[k]->elements)) == want;
      const bool expl = SymTensor::sum_of_squares(explicit_vanishing_vectors(kinds[k])) == want;
      ok = ok && graph && direct && expl;
      parts.push_back(to_string(kinds[k]) + " = (" + to_string(lambda) + ")s" + (graph && direct && expl ? "" : " MISMATCH"));
    }
    return Outcome{ok, join(parts, "; ")};
  }));
  out.push_back(timed("graphs.threecycle-edges", "three-cycles and oriented K5 edges", [] {
    const auto map = edge_threecycle_bijection();
    std::set<K5Edge> edges;
    for (const auto& [h, e] : map) edges.insert(e);
    const K5Edge base = edge_for_threecycle(perms::sigma3());
    const bool ok = map.size() == 20 && edges.size() == 20 && base == K5Edge{3, 0};
    return Outcome{ok, "(142) -> [" + std::to_string(base.tail) + "," + std::to_string(base.head) + "], " +
                           std::to_string(edges.size()) + " distinct oriented edges"};
  }));
  return out;
}

std::vector<CheckResult> monodromy_section(const RunConfig&) {
  std::vector<CheckResult> out;
  out.push_back(timed("monodromy.generators", "monodromy generators", [] {
    bool ok = true;
    std::vector<std::string> parts;
    for (const Generator g : all_generators()) {
      const SympMat m = generator_matrix(g);
      ok = ok && det(m) == OrderElement(1) && in_O0(m) && is_unipotent_transvection(m);
      parts.push_back(to_string(g) + " " + to_string(m));
    }
    return Outcome{ok, join(parts, "; ")};
  }));
  out.push_back(timed("monodromy.iota-pairs", "iota-conjugation", [] {
    const bool ok = iota_conj(generator_matrix(Generator::Alpha)) == generator_matrix(Generator::AlphaPrime) &&
                    iota_conj(generator_matrix(Generator::AlphaPrime)) == generator_matrix(Generator::Alpha) &&
                    iota_conj(generator_matrix(Generator::Beta)) == generator_matrix(Generator::BetaPrime) &&
                    iota_conj(generator_matrix(Generator::BetaPrime)) == generator_matrix(Generator::Beta);
    return Outcome{ok, "swaps alpha/alpha' and beta/beta'; independent of the sign of iota(v) = +-v'"};
  }));
  out.push_back(timed("monodromy.multitwist-reconstruction", "Picard-Lefschetz multitwists on E0+E0", [] {
    const std::array<std::pair<VanishingSet, Generator>, 4> pairs{{{VanishingSet::Alpha, Generator::Alpha},
                                                                    {VanishingSet::AlphaPrime, Generator::AlphaPrime},
                                                                    {VanishingSet::Beta, Generator::Beta},
                                                                    {VanishingSet::BetaPrime, Generator::BetaPrime}}};
    bool ok = true;
    std::vector<std::string> parts;
    for (const auto& [set, gen] : pairs) {
      const SympMat m = multitwist_matrix(set);
      const bool match = m == generator_matrix(gen);
      ok = ok && match;
      parts.push_back(to_string(set) + " -> " + to_string(m) + (match ? "" : " MISMATCH"));
    }
    return Outcome{ok, join(parts, "; ")};
  }));
  out.push_back(timed("monodromy.product-identity", "the product B iota B iota", [] {
    const ProductReport r = product_check();
    const SympMat c_inf = multitwist_matrix(VanishingSet::CInfinity);
    const bool inverse_ok = c_inf * r.product == symp_identity();
    return Outcome{inverse_ok, "B = " + to_string(r.b) + ", iota B iota = " + to_string(r.iota_b) +
                                   ", product = " + to_string(r.product) + " = I + (" + to_string(r.scale) +
                                   ")N; Delta_inf multitwist " + to_string(c_inf) +
                                   (inverse_ok ? " is its inverse" : " is NOT its inverse")};
  }));
  out.push_back(timed("monodromy.h1-pairing", "symplectic pairing on E0+E0", [] {
    auto rng = rng_for("pairing");
    const auto gens = generators();
    std::uniform_int_distribution<int> pick(0, 3);
    for (int i = 0; i < kSamples; ++i) {
      const H1Vector x{random_vector(rng, 20, true), random_vector(rng, 20, true)};
      const H1Vector y{random_vector(rng, 20, true), random_vector(rng, 20, true)};
      const SympMat& m = gens[static_cast<std::size_t>(pick(rng))];
      if (!(pairing(x, y) == -pairing(y, x)) || !(pairing(apply(m, x), apply(m, y)) == pairing(x, y))) {
        return Outcome{false, "antisymmetry or invariance fails at sample " + std::to_string(i)};
      }
    }
    const Integer d = linalg::determinant(h1_gram());
    return Outcome{abs(d) == Integer(1), "Gram determinant " + d.str() + "; " + std::to_string(kSamples) +
                                             " random pairs antisymmetric and preserved by the generators"};
  }));
  out.push_back(timed("monodromy.fixed-vector", "level-5 functional", [] {
    const auto r = fixed_vector_check();
    const bool ok = r.beta_fixes_v_minus_v_prime && r.beta_prime_fixes_v_minus_v_prime && r.functional_preserved;
    return Outcome{ok, std::string("beta, beta' fix v-v' exactly; v+v' is ") +
                           (r.beta_fixes_v_plus_v_prime ? "also fixed" : "not fixed (the invariant vector is v-v')") +
                           "; all generators preserve x -> x_v + x_v' mod 5"};
  }));
  out.push_back(timed("monodromy.benoist-oh", "unipotent translations and a lower-left entry", [] {
    const auto r = benoist_oh_check();
    const bool ok = r.beta_upper_unipotent && r.beta_prime_upper_unipotent && r.omega_index == Integer(4) &&
                    r.alpha_matches && !r.alpha_lower_left.is_zero();
    return Outcome{ok, "conjugated beta " + to_string(r.conjugated[2]) + ", beta' " + to_string(r.conjugated[3]) +
                           ", [O0 : Z X^3 + Z X^-3] = " + r.omega_index.str() + ", conjugated alpha lower-left " +
                           to_string(r.alpha_lower_left)};
  }));
  return out;
}

std::string image_detail(const CongruenceImage& c) {
  std::string s = "order " + std::to_string(c.order());
  if (c.group_order) s += " in SL2 of order " + std::to_string(*c.group_order) + ", index " + std::to_string(*c.index());
  return s;
}

std::vector<CheckResult> congruence_section(const RunConfig& config) {
  std::vector<CheckResult> out;
  out.push_back(timed("congruence.mod-5-image", "mod-5 image order 5", [] {
    const ResidueRing f5 = ResidueRing::f5();
    const auto id = reduce(symp_identity(), f5);
    const bool alphas = reduce(generator_matrix(Generator::Alpha), f5) == id &&
                        reduce(generator_matrix(Generator::AlphaPrime), f5) == id;
    const auto img = congruence_image(f5);
    const auto fv = fixed_vector_check();
    const bool ok = alphas && img.order() == 5 && fv.functional_preserved;
    return Outcome{ok, std::string("alpha, alpha' reduce to I: ") + (alphas ? "yes" : "no") + "; " + image_detail(img)};
  }));
  out.push_back(timed("congruence.f2y-image", "exploratory: image in SL2(F2[Y]/(Y^2))", [] {
    const auto img = congruence_image(ResidueRing::f2y());
    return Outcome{48 % img.order() == 0, image_detail(img)};
  }, true));
  for (const std::int64_t n : config.moduli) {
    out.push_back(timed("congruence.mod-" + std::to_string(n) + "-pair-image",
                        "exploratory: image in SL2(O0/" + std::to_string(n) + "O0)", [n] {
                          const auto img = congruence_image(ResidueRing::zn(n));
                          return Outcome{true, image_detail(img)};
                        }, true));
  }
  out.push_back(timed("congruence.p1-f4", "SL2(F4) on the projective line", [] {
    const auto r = p1_f4_report();
    std::vector<std::string> orbits;
    for (const auto& o : r.sl2_f2_orbits) orbits.push_back("{" + join(o) + "}");
    const bool ok = r.sl2_order == 60 && r.image_alternating && r.sl2_f2_orbits_match;
    return Outcome{ok, "|SL2(F4)| = " + std::to_string(r.sl2_order) + ", image of order " +
                           std::to_string(r.image_order) + (r.image_alternating ? " (alternating)" : "") +
                           "; SL2(F2)-orbits " + join(orbits, " ")};
  }));
  out.push_back(timed("congruence.mod-2-submodules", "cyclic submodules of (O0/2O0)^2", [] {
    const auto r = cyclic_submodules_mod2();
    const bool ok = r.listed.size() == 7 && r.listed_distinct && r.swap_matches;
    return Outcome{ok, "listed " + join(r.listed, " ") + " are pairwise distinct, swap acts as stated; "
                       "exhaustive count of nonzero cyclic submodules is " + std::to_string(r.exhaustive_count) +
                       (r.unlisted.empty() ? "" : " (also " + join(r.unlisted, " ") + ")")};
  }));
  out.push_back(timed("congruence.cusps", "the two cusps", [] {
    const bool fixtures = classify_cusp(1, 0) == CuspType::InfinityZero &&
                          classify_cusp(2, {0, 2}) == CuspType::InfinityX &&
                          classify_cusp(1, 1) == CuspType::InfinityZero;
    auto rng = rng_for("cusps");
    std::uniform_int_distribution<int> coin(0, 1);
    const std::vector<SympVec> inputs{(SympVec() << 1, 0).finished(), (SympVec() << 2, OrderElement(0, 2)).finished(),
                                      (SympVec() << 1, 1).finished()};
    int samples = 0;
    for (int t = 0; t < 20; ++t) {
      SympMat g = symp_identity();
      for (int s = 0; s < 6; ++s) {
        const OrderElement l = random_element(rng, 3, true);
        g = g * (coin(rng) ? symp(1, l, 0, 1) : symp(1, 0, l, 1));
      }
      for (const auto& w : inputs) {
        const SympVec gw = g * w;
        if (classify_cusp(gw(0), gw(1)) != classify_cusp(w(0), w(1))) {
          return Outcome{false, "not invariant under " + to_string(g)};
        }
        ++samples;
      }
    }
    return Outcome{fixtures, "(1,0) infinity_0, (2,2X) infinity_X, (1,1) infinity_0; invariant under " +
                                 std::to_string(samples) + " random SL2(O0) transforms"};
  }));
  return out;
}

std::vector<CheckResult> character_section(const RunConfig&) {
  std::vector<CheckResult> out;
  out.push_back(timed("character.table", "rational characters of A5", [] {
    const auto& t = a5_character_table();
    return Outcome{t.orthogonal(), "rows 1, V, W, E pairwise orthogonal with norms 1, 1, 1, 2"};
  }));
  out.push_back(timed("character.k3-decomposition", "decomposition of the K3 lattice", [] {
    const auto m = solve_k3_decomposition();
    const bool ok = m == std::array<int, 4>{3, 1, 2, 0};
    return Outcome{ok, "(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) + "," +
                           std::to_string(m[3]) + "), unique with at least three trivial summands; " +
                           std::to_string(k3_candidates().size()) + " solutions without that bound"};
  }));
  return out;
}

}  // namespace

std::vector<CheckResult> run_section(const std::string& section, const RunConfig& config) {
  if (section == "algebra") return algebra_section(config);
  if (section == "group") return group_section(config);
  if (section == "lattice") return lattice_section(config);
  if (section == "graphs") return graphs_section(config);
  if (section == "monodromy") return monodromy_section(config);
  if (section == "congruence") return congruence_section(config);
  if (section == "character") return character_section(config);
  throw std::invalid_argument("unknown section '" + section + "'");
}

Summary tally(const std::vector<CheckResult>& checks) {
  Summary s;
  for (const auto& c : checks) {
    switch (c.status) {
      case Status::Pass:
        ++s.pass;
        break;
      case Status::Fail:
        ++s.fail;
        break;
      case Status::Exploratory:
        ++s.exploratory;
        break;
    }
  }
  return s;
}

RunReport run(const RunConfig& config) {
  RunReport report{kVersion, config, {}, {}};
  report.config.sections = resolve_sections(config.sections);
  for (const auto& section : report.config.sections) {
    for (auto& c : run_section(section, report.config)) report.checks.push_back(std::move(c));
  }
  report.summary = tally(report.checks);
  return report;
}

int exit_code(const RunReport& report) { return report.summary.fail == 0 ? 0 : 1; }

std::string to_json(const RunReport& report, int indent) {
  nlohmann::ordered_json j;
  j["version"] = report.version;
  j["config"] = {{"sections", report.config.sections},
                 {"moduli", report.config.moduli},
                 {"orbit_budget", report.config.orbit_budget},
                 {"scan_bound", report.config.scan_bound}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"id", c.id},
                           {"anchor", c.anchor},
                           {"status", to_string(c.status)},
                           {"detail", c.detail},
                           {"elapsed_ms", c.elapsed_ms}});
  }
  j["summary"] = {{"pass", report.summary.pass},
                  {"fail", report.summary.fail},
                  {"exploratory", report.summary.exploratory}};
  return j.dump(indent);
}

RunReport parse_report(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    RunReport r;
    r.version = j.at("version").get<std::string>();
    const auto& c = j.at("config");
    r.config.sections = c.at("sections").get<std::vector<std::string>>();
    r.config.moduli = c.at("moduli").get<std::vector<std::int64_t>>();
    r.config.orbit_budget = c.at("orbit_budget").get<std::size_t>();
    r.config.scan_bound = c.at("scan_bound").get<int>();
    for (const auto& x : j.at("checks")) {
      r.checks.push_back({x.at("id").get<std::string>(), x.at("anchor").get<std::string>(),
                          parse_status(x.at("status").get<std::string>()), x.at("detail").get<std::string>(),
                          x.at("elapsed_ms").get<double>()});
    }
    const auto& s = j.at("summary");
    r.summary = {s.at("pass").get<int>(), s.at("fail").get<int>(), s.at("exploratory").get<int>()};
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const RunReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "INFO";
    os << "[" << tag << "] " << c.id << ": " << c.detail << "\n";
  }
  os << report.summary.pass << " passed, " << report.summary.fail << " failed, " << report.summary.exploratory
     << " exploratory\n";
  return os.str();
}

}  // namespace wiman
