// sgmd: signed-graph metric dimension from the command line.
//
// Exit codes: 0 ok, 1 verification failures, 2 parse error / bad flags,
// 3 incompatible graph, 4 size cap exceeded.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "smd/smd.hpp"

namespace {

constexpr int exit_failures = 1;
constexpr int exit_usage = 2;
constexpr int exit_incompatible = 3;
constexpr int exit_cap = 4;

std::string tuple_text(const std::vector<long>& coords) {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + std::to_string(coords[i]);
  return s + ")";
}

std::string set_text(const std::vector<smd::Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

std::vector<smd::Vertex> parse_vertex_list(const std::string& text) {
  std::vector<smd::Vertex> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    auto v = smd::detail::parse_count(std::string_view(text).substr(pos, end - pos));
    if (!v) throw smd::ParseError(0, "bad vertex list '" + text + "'");
    out.push_back(*v);
    pos = end + 1;
  }
  return out;
}

int cmd_dim(const std::string& path, std::size_t cap, bool list_bases) {
  const auto g = smd::read_graph_file(path);
  const smd::SolverOptions opts{cap};
  try {
    const auto r = smd::metric_dimension(g, opts);
    std::cout << "dim=" << r.dimension << " basis=" << set_text(r.basis) << " dim_underlying=" << r.dim_underlying
              << " mdd=" << r.mdd << "\n";
    for (const auto& rep : r.representations)
      std::cout << "r(" << rep.vertex << ")=" << tuple_text(rep.coords) << "\n";
    if (list_bases) {
      const auto bases = smd::all_bases(g, r.dimension, opts);
      std::cout << "bases=" << bases.size() << "\n";
      for (const auto& b : bases) std::cout << set_text(b) << "\n";
    }
  } catch (const smd::IncompatibleGraph& e) {
    std::cout << "INCOMPATIBLE " << e.witness.first << " " << e.witness.second << "\n";
    std::cerr << "sgmd: " << e.what() << "\n";
    return exit_incompatible;
  }
  return 0;
}

int cmd_compat(const std::string& path) {
  const auto g = smd::read_graph_file(path);
  const auto report = smd::compatibility(g);
  if (report.compatible) {
    std::cout << "COMPATIBLE\n";
  } else {
    std::cout << "INCOMPATIBLE " << report.witness->first << " " << report.witness->second << "\n";
  }
  try {
    const auto wheel = smd::wheel_compatible_predicate(g);
    if (wheel.witness) {
      const auto& c = *wheel.witness;
      std::cout << "C4- " << c[0] << " " << c[1] << " " << c[2] << " " << c[3] << "\n";
    }
  } catch (const smd::NotAWheel&) {
  }
  return 0;
}

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  std::string preset;
  std::vector<std::string> negatives;
  std::string signs;
  std::uint64_t seed = 0;
};

smd::SignedGraph generate_from(const GenArgs& a) {
  const int given = !a.preset.empty() + !a.negatives.empty() + !a.signs.empty();
  if (given > 1) throw smd::BadSize("use only one of --preset, --negatives, --signs");

  if (a.family == "caterpillar") {
    if (!a.negatives.empty() || !a.signs.empty()) throw smd::BadSize("caterpillar takes no explicit signs");
    if (a.preset == "fig3") {
      if (a.n != 7) throw smd::BadSize("preset fig3 is the caterpillar with spine 7");
      return smd::fig3_tree();
    }
    if (!a.preset.empty()) throw smd::BadSize("unknown caterpillar preset '" + a.preset + "'");
    return smd::alternating_caterpillar(a.n);
  }
  if (a.family == "tree") {
    if (given && a.preset != "random") throw smd::BadSize("tree only supports --preset random");
    std::mt19937_64 rng(a.seed);
    return smd::random_tree(a.n, rng);
  }

  const auto family = smd::parse_family(a.family);
  if (!family) throw smd::BadSize("unknown family '" + a.family + "'");
  smd::FamilySpec spec{*family, a.n};
  if (!a.signs.empty()) {
    std::vector<smd::Sign> signs;
    for (char c : a.signs) {
      if (c == '+')
        signs.push_back(smd::Sign::positive);
      else if (c == '-')
        signs.push_back(smd::Sign::negative);
      else
        throw smd::BadSize("--signs takes only '+' and '-'");
    }
    spec.signature = std::move(signs);
  } else if (!a.negatives.empty()) {
    std::vector<std::pair<smd::Vertex, smd::Vertex>> pairs;
    for (const auto& p : a.negatives) {
      const auto vs = parse_vertex_list(p);
      if (vs.size() != 2) throw smd::BadSize("--negatives takes pairs 'u,v'");
      pairs.emplace_back(vs[0], vs[1]);
    }
    spec.signature = smd::signature_with_negatives(*family, a.n, pairs);
  } else if (a.preset == "fig1" || a.preset == "fig2") {
    if (*family != smd::Family::wheel || a.n != 9) throw smd::BadSize("preset " + a.preset + " is the wheel W_9");
    return a.preset == "fig1" ? smd::fig1_wheel() : smd::fig2_wheel();
  } else if (a.preset.empty() || a.preset == "all_positive") {
    spec.signature = smd::Preset::all_positive();
  } else if (a.preset == "all_negative") {
    spec.signature = smd::Preset::all_negative();
  } else if (a.preset == "random") {
    spec.signature = smd::Preset::random(a.seed);
  } else if (a.preset.rfind("single_negative:", 0) == 0) {
    auto i = smd::detail::parse_count(std::string_view(a.preset).substr(16));
    if (!i) throw smd::BadSize("single_negative:<edge index>");
    spec.signature = smd::Preset::single_negative(*i);
  } else {
    throw smd::BadSize("unknown preset '" + a.preset + "'");
  }
  return smd::generate(spec);
}

int cmd_dot(const std::string& path, const std::string& basis) {
  const auto g = smd::read_graph_file(path);
  std::vector<smd::Vertex> filled;
  if (!basis.empty()) {
    filled = parse_vertex_list(basis);
    for (auto v : filled) g.check_vertex(v);
  }
  std::cout << smd::to_dot(g, filled);
  return 0;
}

struct VerifyArgs {
  std::vector<std::string> ids;
  bool all = false;
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> n;
  std::optional<std::string> family;
  std::uint64_t seed = 7;
  std::size_t cap = smd::default_size_cap;
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  std::vector<std::string> ids = a.all ? smd::theorem_ids() : a.ids;
  if (ids.empty()) {
    std::cerr << "sgmd verify: name theorem ids or pass --all\n";
    return exit_usage;
  }
  smd::SuiteOptions opts;
  opts.max_n = a.max_n;
  opts.n = a.n;
  opts.family = a.family;
  opts.seed = a.seed;
  opts.solver.cap = a.cap;
  const auto reports = smd::run_suite(ids, opts);
  std::string text;
  bool failed = false;
  for (const auto& r : reports) {
    text += smd::format_report(r);
    failed = failed || !r.failures.empty();
    std::cerr << r.theorem_id << " total=" << r.total << " failures=" << r.failures.size()
              << " mode=" << r.sweep_mode.to_string() << " runtime=" << r.runtime_seconds << "s\n";
  }
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) {
      std::cerr << "sgmd verify: cannot write '" << a.out << "'\n";
      return exit_usage;
    }
    f << text;
  }
  return failed ? exit_failures : 0;
}

int cmd_spectrum(const std::string& family, std::size_t n, std::uint64_t seed, std::size_t cap) {
  const auto f = smd::parse_family(family);
  if (!f) throw smd::BadSize("unknown family '" + family + "'");
  smd::SuiteOptions opts;
  opts.seed = seed;
  opts.solver.cap = cap;
  const auto s = smd::spectrum(*f, n, opts);
  std::cout << "signatures=" << s.evaluated << (s.exhaustive ? " exhaustive" : " sampled") << "\n";
  for (const auto& [dim, count] : s.histogram) std::cout << "dim " << dim << ": " << count << "\n";
  std::cout << "incompatible: " << s.incompatible << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric dimension of signed graphs"};
  app.require_subcommand(1);

  std::string path;
  std::size_t cap = smd::default_size_cap;
  bool list_bases = false;
  auto* dim = app.add_subcommand("dim", "exact metric dimension, basis, dim(G) and mdd");
  dim->add_option("path", path, "graph file")->required();
  dim->add_option("--cap", cap, "largest vertex count the exact solver accepts");
  dim->add_flag("--all-bases", list_bases, "list every basis");

  auto* compat = app.add_subcommand("compat", "distance compatibility with witness");
  compat->add_option("path", path, "graph file")->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "emit a family member as a graph file");
  gen->add_option("family", gen_args.family, "path|cycle|star|wheel|complete|caterpillar|tree")->required();
  gen->add_option("n", gen_args.n, "size parameter")->required();
  gen->add_option("--preset", gen_args.preset,
                  "all_positive|all_negative|single_negative:<i>|random|fig1|fig2|fig3");
  gen->add_option("--negatives", gen_args.negatives, "negative edge 'u,v' (repeatable)");
  gen->add_option("--signs", gen_args.signs, "explicit signs in canonical edge order, e.g. +-++");
  gen->add_option("--seed", gen_args.seed, "seed for random presets");

  std::string basis;
  auto* dot = app.add_subcommand("dot", "Graphviz export; negative edges dashed");
  dot->add_option("path", path, "graph file")->required();
  dot->add_option("--basis", basis, "comma-separated vertices drawn filled");

  VerifyArgs verify_args;
  std::size_t verify_max_n = 0;
  std::size_t verify_n = 0;
  std::string verify_family;
  auto* verify = app.add_subcommand("verify", "sweep theorem checks against the exact solver");
  verify->add_option("ids", verify_args.ids, "theorem ids");
  verify->add_flag("--all", verify_args.all, "run every registered check");
  auto* max_n_opt = verify->add_option("--max-n", verify_max_n, "cap family sizes");
  auto* n_opt = verify->add_option("--n", verify_n, "restrict to this family size");
  auto* family_opt = verify->add_option("--family", verify_family, "path|cycle|star|wheel|complete|graph|tree");
  verify->add_option("--seed", verify_args.seed, "seed for sampled instances");
  verify->add_option("--cap", verify_args.cap, "solver vertex cap");
  verify->add_option("--out", verify_args.out, "report file (default stdout)");

  std::string spectrum_family;
  std::size_t spectrum_n = 0;
  std::uint64_t spectrum_seed = 7;
  auto* spectrum = app.add_subcommand("spectrum", "dimension histogram over all signatures");
  spectrum->add_option("family", spectrum_family)->required();
  spectrum->add_option("n", spectrum_n)->required();
  spectrum->add_option("--seed", spectrum_seed);
  spectrum->add_option("--cap", cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (dim->parsed()) return cmd_dim(path, cap, list_bases);
    if (compat->parsed()) return cmd_compat(path);
    if (gen->parsed()) {
      std::cout << smd::write_graph(generate_from(gen_args));
      return 0;
    }
    if (dot->parsed()) return cmd_dot(path, basis);
    if (verify->parsed()) {
      if (*max_n_opt) verify_args.max_n = verify_max_n;
      if (*n_opt) verify_args.n = verify_n;
      if (*family_opt) verify_args.family = verify_family;
      return cmd_verify(verify_args);
    }
    if (spectrum->parsed()) return cmd_spectrum(spectrum_family, spectrum_n, spectrum_seed, cap);
  } catch (const smd::SizeCapExceeded& e) {
    std::cerr << "sgmd: " << e.what() << "\n";
    return exit_cap;
  } catch (const smd::CapExceeded& e) {
    std::cerr << "sgmd: " << e.what() << "\n";
    return exit_cap;
  } catch (const smd::Error& e) {
    std::cerr << "sgmd: " << e.what() << "\n";
    return exit_usage;
  }
  return 0;
}
