#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "deza/classify.hpp"
#include "deza/constructions.hpp"
#include "deza/decompose.hpp"
#include "deza/error.hpp"
#include "deza/graph6.hpp"
#include "deza/involutions.hpp"
#include "deza/isomorphism.hpp"
#include "deza/spectra.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kDefaultMaxN = 512;

int max_vertices() {
  const char* env = std::getenv("DEZA_MAX_N");
  if (!env || !*env) return kDefaultMaxN;
  char* end = nullptr;
  const long long value = std::strtoll(env, &end, 10);
  if (!end || *end != '\0' || value < 1 || value > (1 << 20))
    throw std::invalid_argument("DEZA_MAX_N must be a positive integer");
  return static_cast<int>(value);
}

void check_bound(long long n, int bound) {
  if (n > bound)
    throw deza::gate_error("graph on " + std::to_string(n) +
                           " vertices exceeds the size bound " + std::to_string(bound) +
                           " (override with DEZA_MAX_N)");
}

deza::Graph read_graph(std::istream& in, const std::string& inline_g6, int bound) {
  std::string line = inline_g6;
  if (line.empty()) {
    while (std::getline(in, line))
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) break;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos)
      throw std::invalid_argument("no graph6 input found");
  }
  deza::Graph g = deza::graph6_decode(line);
  check_bound(g.size(), bound);
  return g;
}

std::string cycles(const deza::Permutation& p) {
  const auto swaps = p.transpositions();
  if (swaps.empty()) return "()";
  std::ostringstream out;
  for (const auto& [u, v] : swaps) out << '(' << u << ' ' << v << ')';
  return out.str();
}

struct GenOptions {
  std::string source;  // for c1/c2/dss
  uint64_t q = 0;
  bool use_complement = false;
  int parts = 0;
  int part_size = 0;
};

long long source_order(const std::string& source, uint64_t q) {
  if (source == "paley") return static_cast<long long>(q);
  if (source == "paley2") return static_cast<long long>(q) * static_cast<long long>(q);
  if (source == "conference")
    return static_cast<long long>(q) * static_cast<long long>(q) + 1;
  if (source == "hs") return 50;
  throw std::invalid_argument("unknown source '" + source + "'");
}

deza::SrgWithInvolution load_source(const GenOptions& opt) {
  if (opt.source != "hs" && opt.q == 0)
    throw std::invalid_argument("--q is required for source '" + opt.source + "'");
  deza::SrgWithInvolution s = [&] {
    if (opt.source == "paley")
      return deza::certify_srg_with_involution(deza::paley(opt.q), std::nullopt);
    if (opt.source == "paley2")
      return deza::paley_frobenius_involution(static_cast<uint32_t>(opt.q));
    if (opt.source == "conference")
      return deza::conference_srg(static_cast<uint32_t>(opt.q));
    if (opt.source == "hs") return deza::hoffman_singleton();
    throw std::invalid_argument("unknown source '" + opt.source + "'");
  }();
  if (opt.use_complement) s = deza::srg_complement(s);
  return s;
}

ordered_json classify_json(const deza::ParameterReport& rep) {
  ordered_json j;
  j["n"] = rep.n;
  j["regular"] = rep.regular;
  j["k"] = rep.k ? ordered_json(*rep.k) : ordered_json(nullptr);
  j["values"] = rep.common_values;
  j["classification"] = deza::to_string(rep.classification);
  j["deza"] = rep.deza;
  j["a"] = rep.a ? ordered_json(*rep.a) : ordered_json(nullptr);
  j["b"] = rep.b ? ordered_json(*rep.b) : ordered_json(nullptr);
  j["srg_lambda"] = rep.srg_lambda ? ordered_json(*rep.srg_lambda) : ordered_json(nullptr);
  j["srg_mu"] = rep.srg_mu ? ordered_json(*rep.srg_mu) : ordered_json(nullptr);
  j["beta"] = rep.beta ? ordered_json(*rep.beta) : ordered_json(nullptr);
  j["alpha"] = rep.alpha ? ordered_json(*rep.alpha) : ordered_json(nullptr);
  j["strictly_deza"] = rep.strictly_deza;
  j["diameter"] = rep.diam ? ordered_json(*rep.diam) : ordered_json(nullptr);
  return j;
}

std::string classify_headline(const deza::ParameterReport& rep) {
  std::ostringstream out;
  switch (rep.classification) {
    case deza::GraphClass::not_regular:
      out << "not regular (n=" << rep.n << ")";
      break;
    case deza::GraphClass::regular_other:
      out << "regular (n=" << rep.n << ", k=" << *rep.k << "), not Deza";
      break;
    case deza::GraphClass::strongly_regular:
      out << "SRG(" << rep.n << ", " << *rep.k << ", " << *rep.srg_lambda << ", "
          << *rep.srg_mu << ")";
      break;
    case deza::GraphClass::deza:
      if (rep.strictly_deza) out << "strictly ";
      out << "Deza(" << rep.n << ", " << *rep.k << ", " << *rep.b << ", " << *rep.a << ")";
      break;
    case deza::GraphClass::complete:
      out << "complete K" << rep.n;
      break;
  }
  return out.str();
}

void print_classify(const deza::ParameterReport& rep, bool json, std::ostream& out) {
  if (json) {
    out << classify_json(rep).dump(2) << "\n";
    return;
  }
  out << classify_headline(rep) << "\n";
  if (rep.beta) out << "beta: " << *rep.beta << "\n";
  if (rep.alpha) out << "alpha: " << *rep.alpha << "\n";
  if (rep.diam)
    out << "diameter: " << *rep.diam << "\n";
  else
    out << "diameter: disconnected\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deza graph toolkit: constructions, checks, and decomposition over graph6"};
  app.require_subcommand(1);

  bool json = false;
  long long seed = 0;
  std::string in_path, in2_path, out_path, inline_g6;
  app.add_flag("--json", json, "emit JSON instead of plain text");
  app.add_option("--seed", seed, "seed for randomized sampling (reserved; parsed for reproducibility)");
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "generate a graph and write it as graph6");
  gen->require_subcommand(1);
  const auto add_q = [&](CLI::App* cmd) {
    cmd->add_option("--q", gen_opt.q, "field/order parameter")->required();
  };
  auto* gen_paley = gen->add_subcommand("paley", "Paley graph P(q), q a prime power = 1 mod 4");
  add_q(gen_paley);
  auto* gen_paley2 = gen->add_subcommand(
      "paley2", "P(q^2) on the quadratic extension (complemented for q = 3 mod 4)");
  add_q(gen_paley2);
  auto* gen_conf = gen->add_subcommand("conference", "conference-matrix SRG on q^2 + 1 vertices");
  add_q(gen_conf);
  gen->add_subcommand("hs", "the Moore graph of valency 7 on 50 vertices");
  const auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--src", gen_opt.source, "source graph: paley | paley2 | conference | hs")
        ->required();
    cmd->add_option("--q", gen_opt.q, "order parameter of the source");
    cmd->add_flag("--complement", gen_opt.use_complement, "use the complement of the source");
  };
  auto* gen_c1 = gen->add_subcommand("c1", "strong product of K2 with the source");
  add_source(gen_c1);
  auto* gen_c2 = gen->add_subcommand("c2", "dual-Seidel-twisted strong product (needs the source involution)");
  add_source(gen_c2);
  auto* gen_dss = gen->add_subcommand("dss", "dual Seidel switching of the source by its involution");
  add_source(gen_dss);
  auto* gen_k2mp = gen->add_subcommand("k2mp", "strong product of K2 with a complete multipartite graph");
  gen_k2mp->add_option("--parts", gen_opt.parts, "number of parts")->required();
  gen_k2mp->add_option("--size", gen_opt.part_size, "size of each part")->required();

  auto* check = app.add_subcommand("check", "classify or verify a graph read as graph6");
  check->require_subcommand(1);
  long long eig_lambda = 0;
  auto* check_classify = check->add_subcommand("classify", "common-neighbour classification");
  auto* check_ddg = check->add_subcommand("ddg", "divisible-design test (children as clique partitions)");
  auto* check_walkreg = check->add_subcommand("walkreg", "exact walk-regularity over all lengths");
  auto* check_eig = check->add_subcommand("eig", "integer eigenvalue multiplicity by exact elimination");
  check_eig->add_option("--lambda", eig_lambda, "integer eigenvalue")->required();

  std::string mode_name = "non-adjacent";
  std::optional<int> limit;
  auto* involutions = app.add_subcommand(
      "involutions", "census of involutive automorphisms constrained by swap adjacency");
  involutions->add_option("--mode", mode_name, "which pairs may be interchanged")
      ->check(CLI::IsMember({"non-adjacent", "adjacent"}));
  involutions->add_option("--limit", limit, "stop after this many involutions");

  auto* decompose_cmd = app.add_subcommand(
      "decompose", "recover the source SRG and involution of a (n, k, k-1, a) graph with beta = 1");

  auto* iso = app.add_subcommand("iso", "isomorphism test with certified mapping");
  iso->add_option("--in2", in2_path, "second graph (graph6 file)")->required();

  for (CLI::App* cmd : {check, involutions, decompose_cmd, iso}) {
    cmd->add_option("--in", in_path, "input graph6 file (default: stdin)");
    cmd->add_option("--g6", inline_g6, "inline graph6 string instead of a file");
  }

  // Global flags (--json, --seed, --out) may appear after the subcommand.
  for (CLI::App* sub : {gen, check, involutions, decompose_cmd, iso}) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands([](const CLI::App*) { return true; }))
      nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const int bound = max_vertices();
    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
      out_file.open(out_path);
      if (!out_file) throw std::invalid_argument("cannot open output file '" + out_path + "'");
      out = &out_file;
    }
    auto open_input = [&]() -> std::unique_ptr<std::ifstream> {
      if (in_path.empty()) return nullptr;
      auto f = std::make_unique<std::ifstream>(in_path);
      if (!*f) throw std::invalid_argument("cannot open input file '" + in_path + "'");
      return f;
    };

    if (app.got_subcommand(gen)) {
      deza::Graph g;
      if (gen->got_subcommand("paley")) {
        check_bound(static_cast<long long>(gen_opt.q), bound);
        g = deza::paley(gen_opt.q);
      } else if (gen->got_subcommand("paley2")) {
        check_bound(source_order("paley2", gen_opt.q), bound);
        g = deza::paley_frobenius_involution(static_cast<uint32_t>(gen_opt.q)).graph;
      } else if (gen->got_subcommand("conference")) {
        check_bound(source_order("conference", gen_opt.q), bound);
        g = deza::conference_srg(static_cast<uint32_t>(gen_opt.q)).graph;
      } else if (gen->got_subcommand("hs")) {
        check_bound(50, bound);
        g = deza::hoffman_singleton().graph;
      } else if (gen->got_subcommand("k2mp")) {
        check_bound(2LL * gen_opt.parts * gen_opt.part_size, bound);
        g = deza::k2_multipartite(gen_opt.parts, gen_opt.part_size);
      } else {
        const long long m = source_order(gen_opt.source, gen_opt.q);
        if (gen->got_subcommand("dss"))
          check_bound(m, bound);
        else
          check_bound(2 * m, bound);
        if (gen->got_subcommand("c2") || gen->got_subcommand("dss")) {
          if (gen_opt.use_complement)
            throw deza::gate_error("the complement does not keep the involution certificate");
          auto s = load_source(gen_opt);
          if (!s.involution)
            throw deza::gate_error("source '" + gen_opt.source + "' carries no involution");
          g = gen->got_subcommand("c2") ? deza::construction2(s)
                                        : deza::dual_seidel_switch(s.graph, *s.involution);
        } else {
          g = deza::construction1(load_source(gen_opt));
        }
      }
      *out << deza::graph6_encode(g) << "\n";
      return 0;
    }

    auto in_file = open_input();
    std::istream& in = in_file ? *in_file : std::cin;

    if (app.got_subcommand(check)) {
      const deza::Graph g = read_graph(in, inline_g6, bound);
      if (check->got_subcommand(check_classify)) {
        print_classify(deza::classify(g), json, *out);
      } else if (check->got_subcommand(check_ddg)) {
        const auto report = deza::is_ddg(g);
        if (json) {
          ordered_json j;
          j["ddg"] = report.is_ddg;
          j["child"] = report.is_ddg ? std::string(1, report.child) : std::string();
          j["class_sizes"] = report.class_sizes;
          j["thin"] = report.thin;
          *out << j.dump(2) << "\n";
        } else {
          *out << "ddg: " << (report.is_ddg ? "true" : "false") << "\n";
          if (report.is_ddg) {
            *out << "child: " << report.child << "\nclasses:";
            for (int s : report.class_sizes) *out << ' ' << s;
            *out << "\nthin: " << (report.thin ? "true" : "false") << "\n";
          }
        }
      } else if (check->got_subcommand(check_walkreg)) {
        const auto wr = deza::is_walk_regular(g);
        if (json) {
          ordered_json j;
          j["walk_regular"] = wr.walk_regular;
          j["first_failing_length"] = wr.first_failing_length
                                          ? ordered_json(*wr.first_failing_length)
                                          : ordered_json(nullptr);
          *out << j.dump(2) << "\n";
        } else if (wr.walk_regular) {
          *out << "walk-regular: true\n";
        } else {
          *out << "walk-regular: false (first failing length " << *wr.first_failing_length
               << ")\n";
        }
      } else if (check->got_subcommand(check_eig)) {
        const int mult = deza::eigenvalue_multiplicity(g, eig_lambda);
        if (json) {
          ordered_json j;
          j["lambda"] = eig_lambda;
          j["multiplicity"] = mult;
          *out << j.dump(2) << "\n";
        } else {
          *out << "multiplicity(" << eig_lambda << ") = " << mult << "\n";
        }
      }
      return 0;
    }

    if (app.got_subcommand(involutions)) {
      const deza::Graph g = read_graph(in, inline_g6, bound);
      const auto mode = mode_name == "adjacent" ? deza::SwapMode::adjacent_only
                                                : deza::SwapMode::non_adjacent_only;
      const auto found = deza::find_special_involutions(g, mode, limit);
      if (json) {
        ordered_json j;
        j["count"] = found.size();
        auto list = ordered_json::array();
        for (const auto& p : found) list.push_back(p.image());
        j["involutions"] = std::move(list);
        *out << j.dump(2) << "\n";
      } else {
        *out << "count: " << found.size() << "\n";
        for (const auto& p : found) *out << cycles(p) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(decompose_cmd)) {
      const deza::Graph g = read_graph(in, inline_g6, bound);
      const auto report = deza::decompose(g);
      if (json) {
        *out << deza::to_json(report) << "\n";
      } else {
        int passed = 0;
        for (const auto& check_item : report.lemma_checks) passed += check_item.pass;
        *out << "tag: " << report.tag << "\n"
             << "srg: SRG(" << report.srg_n << ", " << report.srg_k << ", "
             << report.srg_lambda << ", " << report.srg_mu << ")\n"
             << "involution: " << cycles(report.involution) << "\n"
             << "pairs: " << report.pairs.size() << "\n"
             << "lemma-checks: " << passed << "/" << report.lemma_checks.size() << " passed\n"
             << "reconstructed: " << (report.reconstructed_equal ? "true" : "false") << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(iso)) {
      const deza::Graph g = read_graph(in, inline_g6, bound);
      std::ifstream second(in2_path);
      if (!second) throw std::invalid_argument("cannot open input file '" + in2_path + "'");
      const deza::Graph h = read_graph(second, "", bound);
      const auto mapping = deza::find_isomorphism(g, h, bound);
      if (json) {
        ordered_json j;
        j["isomorphic"] = mapping.has_value();
        j["mapping"] = mapping ? ordered_json(mapping->image()) : ordered_json(nullptr);
        *out << j.dump(2) << "\n";
      } else {
        *out << "isomorphic: " << (mapping ? "true" : "false") << "\n";
        if (mapping) {
          *out << "mapping:";
          for (int v : mapping->image()) *out << ' ' << v;
          *out << "\n";
        }
      }
      return 0;
    }
    return 1;
  } catch (const deza::gate_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
