#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "smd/distance.hpp"
#include "smd/error.hpp"
#include "smd/families.hpp"
#include "smd/graph_io.hpp"
#include "smd/resolve.hpp"
#include "smd/signed_graph.hpp"
#include "smd/trees.hpp"

namespace smd {

// Report line: theorem_id TAB instance TAB PASS|FAIL TAB detail
//
// Instance encodings:
//   <family>/<n>/<signs>     signs in canonical edge order, e.g. cycle/5/+-+++
//   <family>/<n>/*           existence check over every signature
//   graph/<n>/<u>-<v><s>,... explicit edge list (random graphs and trees)

struct VerificationCase {
  std::string theorem_id;
  std::string instance;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct SweepMode {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::size_t count = 0;  // randomly drawn instances

  std::string to_string() const {
    if (exhaustive) return "exhaustive";
    return "random(seed=" + std::to_string(seed) + ",count=" + std::to_string(count) + ")";
  }
};

struct SweepReport {
  std::string theorem_id;
  std::size_t total = 0;
  std::vector<VerificationCase> cases;     // sorted by instance
  std::vector<VerificationCase> failures;  // empty on success
  double runtime_seconds = 0.0;
  SweepMode sweep_mode;
};

struct SuiteOptions {
  std::optional<std::size_t> max_n;        // caps every family size parameter / random vertex count
  std::optional<std::size_t> n;            // restrict families to this size parameter
  std::optional<std::string> family;       // path|cycle|star|wheel|complete|graph|tree
  std::uint64_t seed = 7;
  std::size_t random_instances = 300;
  std::size_t exhaustive_limit_bits = 16;  // at most 2^16 signatures per instance family
  std::size_t sample_count = 10000;
  SolverOptions solver;
};

namespace verify_detail {

struct Instance {
  std::string family;  // family name, "graph" or "tree"
  std::size_t n;
  SignedGraph graph;
  std::string encoding;
  bool existence = false;
};

inline std::string encode_signs(const SignedGraph& g, Family f, std::size_t n) {
  std::string s = std::string(to_string(f)) + "/" + std::to_string(n) + "/";
  for (auto [u, v] : family_edges(f, n)) s += to_char(*g.edge_sign(u, v));
  return s;
}

inline std::string encode_graph(const SignedGraph& g) {
  std::string s = "graph/" + std::to_string(g.vertex_count()) + "/";
  bool first = true;
  for (const auto& e : g.edges()) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(e.u) + "-" + std::to_string(e.v) + to_char(e.sign);
  }
  return s;
}

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string join(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

struct Outcome {
  std::string expected;
  std::string observed;
  bool pass;
};

struct FamilyRange {
  Family family;
  std::size_t lo;
  std::size_t hi;
  // Which signatures of each instance to keep.
  enum class Filter { all, compatible, homogeneous, all_negative, odd_or_balanced } filter = Filter::all;
};

struct RandomPlan {
  enum class Kind { none, compatible_graph, tree, positive_tree, applicable_tree } kind = Kind::none;
  std::size_t max_vertices = 0;
};

struct Theorem {
  std::string id;
  std::string description;
  std::vector<FamilyRange> families;
  RandomPlan random;
  std::function<Outcome(const Instance&, const SuiteOptions&)> check;
  bool existence_cases = false;  // adds <wheel>/<n>/* cases for n in the wheel range
};

inline bool keep(const SignedGraph& g, FamilyRange::Filter filter, Family f, std::size_t n) {
  using Filter = FamilyRange::Filter;
  switch (filter) {
    case Filter::all: return true;
    case Filter::compatible: return compatibility(g).compatible;
    case Filter::homogeneous: return g.is_homogeneous();
    case Filter::all_negative: return g.is_homogeneous() && g.edges().front().sign == Sign::negative;
    case Filter::odd_or_balanced:
      return f == Family::cycle && (n % 2 == 1 || is_balanced(g));
  }
  return false;
}

inline bool family_selected(const SuiteOptions& opts, std::string_view name) {
  return !opts.family || *opts.family == name;
}

inline void check_cap(std::size_t vertices, const SuiteOptions& opts) {
  if (vertices > opts.solver.cap)
    throw CapExceeded("instance with " + std::to_string(vertices) + " vertices exceeds solver cap " +
                      std::to_string(opts.solver.cap));
}

inline void add_family_instances(const FamilyRange& range, const SuiteOptions& opts, std::vector<Instance>& out,
                                 SweepMode& mode, std::mt19937_64& rng) {
  if (!family_selected(opts, to_string(range.family))) return;
  std::size_t lo = std::max(range.lo, minimum_size(range.family));
  std::size_t hi = range.hi;
  if (opts.max_n) hi = std::min(hi, *opts.max_n);
  if (opts.n) {
    lo = std::max(lo, *opts.n);
    hi = *opts.n;
  }
  for (std::size_t n = lo; n <= hi; ++n) {
    check_cap(family_vertex_count(range.family, n), opts);
    const std::size_t m = family_edge_count(range.family, n);
    auto emit = [&](std::uint64_t mask) {
      auto g = generate(range.family, n, signature_from_mask(m, mask));
      if (!keep(g, range.filter, range.family, n)) return;
      auto enc = encode_signs(g, range.family, n);
      out.push_back({std::string(to_string(range.family)), n, std::move(g), std::move(enc)});
    };
    const std::uint64_t all_negative = m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    if (range.filter == FamilyRange::Filter::homogeneous) {
      emit(0);
      emit(all_negative);
    } else if (range.filter == FamilyRange::Filter::all_negative) {
      emit(all_negative);
    } else if (m <= opts.exhaustive_limit_bits) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) emit(mask);
    } else {
      mode.exhaustive = false;
      mode.seed = opts.seed;
      for (std::size_t i = 0; i < opts.sample_count; ++i) {
        std::uint64_t mask = rng();
        if (m < 64) mask &= (std::uint64_t{1} << m) - 1;
        ++mode.count;
        emit(mask);
      }
    }
  }
}

inline void add_random_instances(const RandomPlan& plan, const SuiteOptions& opts, std::vector<Instance>& out,
                                 SweepMode& mode, std::mt19937_64& rng) {
  using Kind = RandomPlan::Kind;
  if (plan.kind == Kind::none) return;
  const bool trees = plan.kind != Kind::compatible_graph;
  if (!family_selected(opts, trees ? "tree" : "graph")) return;
  std::size_t hi = plan.max_vertices;
  if (opts.max_n) hi = std::min(hi, *opts.max_n);
  if (opts.n) hi = std::min(hi, *opts.n);
  const std::size_t lo = trees ? 4 : 3;
  if (hi < lo) return;
  check_cap(hi, opts);
  mode.exhaustive = false;
  mode.seed = opts.seed;
  std::size_t produced = 0;
  std::size_t attempts = 0;
  const std::size_t max_attempts = opts.random_instances * 50;
  while (produced < opts.random_instances && attempts < max_attempts) {
    ++attempts;
    const std::size_t n = (opts.n && *opts.n >= lo) ? *opts.n : lo + rng() % (hi - lo + 1);
    std::optional<SignedGraph> g;
    if (trees) {
      auto t = random_tree(n, rng);
      if (is_path_graph(t)) continue;
      if (plan.kind == Kind::positive_tree) t = t.with_uniform_sign(Sign::positive);
      if (plan.kind == Kind::applicable_tree && !special_exterior_majors(t).formula_applicable) continue;
      g = std::move(t);
    } else {
      const double p = static_cast<double>(rng() % 60) / 100.0;
      auto r = random_connected_graph(n, p, rng);
      if (!compatibility(r).compatible) continue;
      g = std::move(r);
    }
    auto enc = encode_graph(*g);
    out.push_back({trees ? "tree" : "graph", n, std::move(*g), std::move(enc)});
    ++produced;
  }
  mode.count += produced;
}

// ---- checks -----------------------------------------------------------------

inline Outcome check_inheritance(const Instance& inst, const SuiteOptions& opts) {
  const auto& g = inst.graph;
  const std::size_t n = g.vertex_count();
  const auto dm = signed_distances(g);
  const auto dm_plain = signed_distances(g.with_uniform_sign(Sign::positive));
  const detail::SignedDistanceTable plain(dm_plain);
  detail::Resolver resolver(plain);
  const std::size_t dim_g = detail::canonical_basis(plain).size();
  std::mt19937_64 rng(fnv1a(inst.encoding, opts.seed));
  std::set<std::vector<Vertex>> sampled;
  for (std::size_t attempt = 0; attempt < 400 && sampled.size() < 5; ++attempt) {
    const std::size_t k = dim_g + rng() % (n - dim_g);
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + rng() % (n - i)]);
    std::vector<Vertex> w(all.begin(), all.begin() + static_cast<long>(k));
    std::sort(w.begin(), w.end());
    if (resolver.resolves(w)) sampled.insert(w);
  }
  for (const auto& w : sampled) {
    if (!is_resolving(dm, w).resolving)
      return {"resolving sets of G resolve Sigma", "W=" + join(w) + " does not resolve Sigma", false};
  }
  return {"resolving sets of G resolve Sigma",
          std::to_string(sampled.size()) + "/" + std::to_string(sampled.size()) + " sampled sets resolve", true};
}

inline Outcome check_bounds(const Instance& inst, const SuiteOptions& opts) {
  const auto r = metric_dimension(inst.graph, opts.solver);
  const std::size_t n = inst.graph.vertex_count();
  const bool ok = 1 <= r.dimension && r.dimension <= r.dim_underlying && r.dim_underlying <= n - 1;
  return {"1<=dim<=dim_G<=" + std::to_string(n - 1),
          "dim=" + std::to_string(r.dimension) + " dim_G=" + std::to_string(r.dim_underlying), ok};
}

inline Outcome check_negation(const Instance& inst, const SuiteOptions& opts) {
  const auto a = metric_dimension(inst.graph, opts.solver).dimension;
  const auto b = metric_dimension(negate(inst.graph), opts.solver).dimension;
  return {"dim(S)=dim(-S)", "dim=" + std::to_string(a) + " neg_dim=" + std::to_string(b), a == b};
}

inline Outcome check_dimension_equals(const Instance& inst, const SuiteOptions& opts, std::size_t expected) {
  const auto d = metric_dimension(inst.graph, opts.solver).dimension;
  return {"dim=" + std::to_string(expected), "dim=" + std::to_string(d), d == expected};
}

inline Outcome check_complete_bounds(const Instance& inst, const SuiteOptions& opts) {
  const auto b = complete_dimension_bounds(inst.graph);
  const auto d = metric_dimension(inst.graph, opts.solver).dimension;
  return {"dim in [" + std::to_string(b.lo) + "," + std::to_string(b.hi) + "]", "dim=" + std::to_string(d),
          b.contains(d)};
}

inline Outcome check_cycle(const Instance& inst, const SuiteOptions& opts) {
  const auto pred = cycle_dim1_predicate(inst.graph);
  const auto d = metric_dimension(inst.graph, opts.solver).dimension;
  std::string expected = pred.dim1 ? "dim=1 (witness " + std::to_string(*pred.witness_vertex) + ")" : "dim>1";
  return {expected, "dim=" + std::to_string(d), pred.dim1 == (d == 1)};
}

inline Outcome check_star(const Instance& inst, const SuiteOptions& opts) {
  const auto predicted = star_dimension(inst.graph);
  return check_dimension_equals(inst, opts, predicted);
}

inline Outcome check_wheel_compat(const Instance& inst, const SuiteOptions&) {
  const auto pred = wheel_compatible_predicate(inst.graph);
  const auto actual = compatibility(inst.graph);
  std::string expected = pred.compatible ? "compatible" : "incompatible";
  std::string observed = actual.compatible ? "compatible" : "incompatible";
  return {"predicate " + expected, "pairwise " + observed, pred.compatible == actual.compatible};
}

inline Outcome check_wheel_lower(const Instance& inst, const SuiteOptions& opts) {
  const auto d = metric_dimension(inst.graph, opts.solver).dimension;
  return {"dim>=2", "dim=" + std::to_string(d), d >= 2};
}

inline Outcome check_wheel_mdd(const Instance& inst, const SuiteOptions& opts) {
  const auto r = metric_dimension(inst.graph, opts.solver);
  return {"mdd<=1", "mdd=" + std::to_string(r.mdd), r.mdd <= 1};
}

inline bool some_basis_contains(const SignedGraph& g, Vertex v, const SuiteOptions& opts) {
  const auto d = metric_dimension(g, opts.solver).dimension;
  for (const auto& b : all_bases(g, d, opts.solver))
    if (std::binary_search(b.begin(), b.end(), v)) return true;
  return false;
}

inline Outcome check_central_vertex(const Instance& inst, const SuiteOptions& opts) {
  if (inst.existence) {
    const std::size_t m = family_edge_count(Family::wheel, inst.n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      auto g = generate(Family::wheel, inst.n, signature_from_mask(m, mask));
      if (!compatibility(g).compatible) continue;
      if (some_basis_contains(g, 0, opts))
        return {"some compatible signature has a basis with the center", encode_signs(g, Family::wheel, inst.n),
                true};
    }
    return {"some compatible signature has a basis with the center", "none found", false};
  }
  const bool contains = some_basis_contains(inst.graph, 0, opts);
  return {"no basis contains the center", contains ? "a basis contains the center" : "center in no basis",
          !contains};
}

inline Outcome check_unsigned_tree(const Instance& inst, const SuiteOptions& opts) {
  const auto p = tree_profile(inst.graph);
  return check_dimension_equals(inst, opts, unsigned_tree_dimension(p));
}

inline Outcome check_signed_tree(const Instance& inst, const SuiteOptions& opts) {
  return check_dimension_equals(inst, opts, signed_tree_dimension(inst.graph));
}

inline Outcome check_tree_bounds(const Instance& inst, const SuiteOptions& opts) {
  const auto b = signed_tree_bounds(inst.graph);
  const auto d = metric_dimension(inst.graph, opts.solver).dimension;
  return {"dim in [" + std::to_string(b.lo) + "," + std::to_string(b.hi) + "]", "dim=" + std::to_string(d),
          b.contains(d)};
}

inline const std::vector<Theorem>& registry() {
  using F = FamilyRange::Filter;
  using K = RandomPlan::Kind;
  static const std::vector<Theorem> theorems = [] {
    const std::vector<FamilyRange> sweep_small{{Family::path, 2, 7, F::all},
                                               {Family::cycle, 3, 7, F::compatible},
                                               {Family::star, 1, 6, F::all},
                                               {Family::wheel, 3, 6, F::compatible},
                                               {Family::complete, 2, 5, F::all}};
    const std::vector<FamilyRange> sweep_negation{{Family::path, 2, 10, F::all},
                                                  {Family::cycle, 3, 9, F::compatible},
                                                  {Family::star, 1, 8, F::all},
                                                  {Family::wheel, 3, 6, F::compatible},
                                                  {Family::complete, 2, 5, F::all}};
    std::vector<Theorem> t;
    t.push_back({"T2.1", "resolving sets of the underlying graph resolve the signed graph", sweep_small,
                 {K::compatible_graph, 8}, check_inheritance});
    t.push_back({"T2.2", "1 <= dim(S) <= dim(G) <= n-1", sweep_small, {K::compatible_graph, 8}, check_bounds});
    t.push_back({"T2.3", "dim(S) = dim(-S)", sweep_negation, {K::compatible_graph, 8}, check_negation});
    t.push_back({"C2.4", "dim(K_n^+) = dim(K_n^-) = n-1",
                 {{Family::complete, 3, 7, F::homogeneous}},
                 {},
                 [](const Instance& i, const SuiteOptions& o) { return check_dimension_equals(i, o, i.n - 1); }});
    t.push_back({"C2.5", "all-negative cycles have dimension 2",
                 {{Family::cycle, 3, 11, F::all_negative}},
                 {},
                 [](const Instance& i, const SuiteOptions& o) { return check_dimension_equals(i, o, 2); }});
    t.push_back({"T2.6", "signed complete graphs: 2 <= dim <= n-1 for n >= 4",
                 {{Family::complete, 3, 5, F::all}}, {}, check_complete_bounds});
    t.push_back({"T-path", "signed paths have dimension 1", {{Family::path, 2, 10, F::all}}, {},
                 [](const Instance& i, const SuiteOptions& o) { return check_dimension_equals(i, o, 1); }});
    t.push_back({"T-cycle", "dim(C_n^sigma) = 1 iff a net-degree-0 vertex separates every level",
                 {{Family::cycle, 3, 9, F::odd_or_balanced}}, {}, check_cycle});
    t.push_back({"T-star", "non-homogeneous stars: n-2; homogeneous: n-1", {{Family::star, 1, 8, F::all}}, {},
                 check_star});
    t.push_back({"T3.1", "wheel compatible iff no negative C4 through the center", {{Family::wheel, 4, 7, F::all}},
                 {}, check_wheel_compat});
    t.push_back({"L3.2", "no single vertex resolves a signed wheel", {{Family::wheel, 3, 7, F::compatible}}, {},
                 check_wheel_lower});
    Theorem central{"T3.4", "center in some basis for n <= 6 (existence), in no basis for n > 6",
                    {{Family::wheel, 7, 7, F::compatible}}, {}, check_central_vertex};
    central.existence_cases = true;
    t.push_back(central);
    t.push_back({"T3.5", "mdd(W_n^sigma) <= 1", {{Family::wheel, 3, 7, F::compatible}}, {}, check_wheel_mdd});
    t.push_back({"T4.1", "unsigned trees: dim(T) = lambda(T) - ext(T)", {}, {K::positive_tree, 14},
                 check_unsigned_tree});
    t.push_back({"T4.3", "dim(T^sigma) = dim(T) - |eta| when no special vertex has ter 2", {},
                 {K::applicable_tree, 14}, check_signed_tree});
    t.push_back({"B4.4", "dim(T) - ext(T) <= dim(T^sigma) <= dim(T)", {}, {K::tree, 14}, check_tree_bounds});
    return t;
  }();
  return theorems;
}

inline const Theorem& find_theorem(std::string_view id) {
  for (const auto& t : registry())
    if (t.id == id) return t;
  throw UnknownTheorem(std::string(id));
}

inline std::vector<Instance> instances_for(const Theorem& t, const SuiteOptions& opts, SweepMode& mode) {
  std::vector<Instance> out;
  std::mt19937_64 rng(fnv1a(t.id, opts.seed));
  for (const auto& range : t.families) add_family_instances(range, opts, out, mode, rng);
  if (t.existence_cases && family_selected(opts, "wheel")) {
    std::size_t lo = 3, hi = 6;
    if (opts.max_n) hi = std::min(hi, *opts.max_n);
    if (opts.n) lo = *opts.n, hi = std::min(hi, *opts.n);
    for (std::size_t n = lo; n <= hi; ++n) {
      auto g = generate(Family::wheel, n, signature_from_mask(2 * n, 0));
      out.push_back({"wheel", n, std::move(g), "wheel/" + std::to_string(n) + "/*", true});
    }
  }
  add_random_instances(t.random, opts, out, mode, rng);
  return out;
}

inline VerificationCase run_case(const Theorem& t, const Instance& inst, const SuiteOptions& opts) {
  auto o = t.check(inst, opts);
  return {t.id, inst.encoding, std::move(o.expected), std::move(o.observed), o.pass};
}

inline std::vector<Sign> parse_signs(std::string_view s) {
  std::vector<Sign> out;
  for (char c : s) {
    if (c == '+')
      out.push_back(Sign::positive);
    else if (c == '-')
      out.push_back(Sign::negative);
    else
      throw ParseError(0, "bad sign character in instance");
  }
  return out;
}

inline Instance decode_instance(std::string_view enc) {
  const auto a = enc.find('/');
  const auto b = a == std::string_view::npos ? a : enc.find('/', a + 1);
  if (b == std::string_view::npos) throw ParseError(0, "malformed instance '" + std::string(enc) + "'");
  const std::string family(enc.substr(0, a));
  const auto n = detail::parse_count(enc.substr(a + 1, b - a - 1));
  if (!n) throw ParseError(0, "malformed instance size");
  const auto body = enc.substr(b + 1);
  if (family == "graph" || family == "tree") {
    std::vector<SignedEdge> edges;
    std::size_t pos = 0;
    while (pos < body.size()) {
      auto end = body.find(',', pos);
      if (end == std::string_view::npos) end = body.size();
      auto tok = body.substr(pos, end - pos);
      auto dash = tok.find('-');
      if (dash == std::string_view::npos || tok.size() < dash + 3) throw ParseError(0, "malformed edge token");
      auto u = detail::parse_count(tok.substr(0, dash));
      auto v = detail::parse_count(tok.substr(dash + 1, tok.size() - dash - 2));
      if (!u || !v) throw ParseError(0, "malformed edge token");
      edges.push_back({*u, *v, parse_signs(tok.substr(tok.size() - 1))[0]});
      pos = end + 1;
    }
    auto g = SignedGraph::build(*n, edges);
    return {is_tree(g) ? "tree" : "graph", *n, std::move(g), std::string(enc)};
  }
  const auto f = parse_family(family);
  if (!f) throw ParseError(0, "unknown family '" + family + "'");
  if (body == "*")
    return {family, *n, generate(*f, *n, signature_from_mask(family_edge_count(*f, *n), 0)), std::string(enc), true};
  return {family, *n, generate(*f, *n, parse_signs(body)), std::string(enc)};
}

}  // namespace verify_detail

inline std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& t : verify_detail::registry()) ids.push_back(t.id);
  return ids;
}

inline std::string theorem_description(std::string_view id) { return verify_detail::find_theorem(id).description; }

inline SweepReport run_theorem(std::string_view id, const SuiteOptions& opts = {}) {
  const auto& t = verify_detail::find_theorem(id);
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.theorem_id = t.id;
  const auto instances = verify_detail::instances_for(t, opts, report.sweep_mode);
  report.cases.reserve(instances.size());
  for (const auto& inst : instances) report.cases.push_back(verify_detail::run_case(t, inst, opts));
  std::stable_sort(report.cases.begin(), report.cases.end(),
                   [](const VerificationCase& a, const VerificationCase& b) { return a.instance < b.instance; });
  for (const auto& c : report.cases)
    if (!c.pass) report.failures.push_back(c);
  report.total = report.cases.size();
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// Validates every id before running anything.
inline std::vector<SweepReport> run_suite(const std::vector<std::string>& ids, const SuiteOptions& opts = {}) {
  for (const auto& id : ids) verify_detail::find_theorem(id);
  std::vector<SweepReport> out;
  for (const auto& id : ids) out.push_back(run_theorem(id, opts));
  return out;
}

// Re-runs a single recorded case in isolation.
inline VerificationCase replay(std::string_view theorem_id, std::string_view instance, const SuiteOptions& opts = {}) {
  const auto& t = verify_detail::find_theorem(theorem_id);
  return verify_detail::run_case(t, verify_detail::decode_instance(instance), opts);
}

inline std::string format_case(const VerificationCase& c) {
  return c.theorem_id + "\t" + c.instance + "\t" + (c.pass ? "PASS" : "FAIL") + "\texpected " + c.expected +
         "; observed " + c.observed + "\n";
}

inline std::string format_report(const SweepReport& r) {
  std::string out;
  for (const auto& c : r.cases) out += format_case(c);
  return out;
}

struct Spectrum {
  std::map<std::size_t, std::size_t> histogram;  // dimension -> compatible signatures
  std::size_t incompatible = 0;
  std::size_t evaluated = 0;
  bool exhaustive = true;
};

// Dimension histogram over every signature of one family instance, or a
// seeded sample when there are more than 2^16 signatures.
inline Spectrum spectrum(Family f, std::size_t n, const SuiteOptions& opts = {}) {
  const std::size_t vertices = family_vertex_count(f, n);
  if (vertices > opts.solver.cap)
    throw CapExceeded(std::to_string(vertices) + " vertices exceeds solver cap " + std::to_string(opts.solver.cap));
  const std::size_t m = family_edge_count(f, n);
  Spectrum s;
  auto visit = [&](std::uint64_t mask) {
    auto g = generate(f, n, signature_from_mask(m, mask));
    ++s.evaluated;
    if (!compatibility(g).compatible) {
      ++s.incompatible;
      return;
    }
    ++s.histogram[metric_dimension(g, opts.solver).dimension];
  };
  if (m <= opts.exhaustive_limit_bits) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) visit(mask);
  } else {
    s.exhaustive = false;
    std::mt19937_64 rng(opts.seed);
    for (std::size_t i = 0; i < opts.sample_count; ++i) {
      std::uint64_t mask = rng();
      if (m < 64) mask &= (std::uint64_t{1} << m) - 1;
      visit(mask);
    }
  }
  return s;
}

}  // namespace smd
