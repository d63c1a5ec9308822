// Acceptance harness: twelve end-to-end checks over the construction,
// decomposition, census, and spectra pipelines.  Each check prints one
// PASS/FAIL line with its wall-clock time; the process exits nonzero when
// any check fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "deza/classify.hpp"
#include "deza/constructions.hpp"
#include "deza/decompose.hpp"
#include "deza/error.hpp"
#include "deza/graph.hpp"
#include "deza/involutions.hpp"
#include "deza/isomorphism.hpp"
#include "deza/permutation.hpp"
#include "deza/spectra.hpp"

using deza::Graph;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  Outcome out;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      out.pass = false;
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += what;
    }
  }
  void note(const std::string& what) {
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += what;
  }
};

Graph petersen() {
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  Graph g(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      const auto [a, b] = subsets[i];
      const auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) g.set_edge(i, j);
    }
  return g;
}

bool deza_params(const Graph& g, int n, int k, int b, int a, Check& c, const std::string& tag) {
  const auto rep = deza::classify(g);
  const bool ok = rep.deza && rep.strictly_deza && rep.n == n && rep.k && *rep.k == k && rep.b &&
                  *rep.b == b && rep.a && *rep.a == a && rep.beta && *rep.beta == 1;
  std::ostringstream what;
  what << tag << ": expected strictly Deza(" << n << ", " << k << ", " << b << ", " << a
       << ") with beta 1";
  c.require(ok, what.str());
  return ok;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;

  // Shared fixtures (built once; constructors verify their own invariants).
  const auto t_fix = clock::now();
  auto pf3 = deza::paley_frobenius_involution(3);    // P(9) complement with conjugation
  auto pf5 = deza::paley_frobenius_involution(5);    // P(25) with conjugation
  auto conf3 = deza::conference_srg(3);              // (10, 3, 0, 1)
  auto conf5 = deza::conference_srg(5);              // (26, 10, 3, 4)
  auto hs = deza::hoffman_singleton();               // (50, 7, 0, 1)
  const Graph pet = petersen();
  struct Fixture {
    const deza::SrgWithInvolution* s;
    const char* name;
  };
  const std::vector<Fixture> family = {
      {&pf3, "pf3"}, {&pf5, "pf5"}, {&conf3, "conf3"}, {&conf5, "conf5"}, {&hs, "hs"}};
  std::vector<Graph> c1_out, c2_out;
  for (const auto& f : family) {
    c1_out.push_back(deza::construction1(*f.s));
    c2_out.push_back(deza::construction2(*f.s));
  }
  const double fixture_seconds =
      std::chrono::duration<double>(clock::now() - t_fix).count();

  struct Criterion {
    int id;
    std::string title;
    std::function<void(Check&)> body;
    double bound_seconds;  // 0: no pinned bound
  };

  std::vector<Criterion> criteria;

  criteria.push_back({1, "quadratic-residue family parameters", [&](Check& c) {
    for (const uint64_t r : {5ULL, 9ULL, 13ULL, 17ULL, 25ULL, 29ULL}) {
      const auto rep = deza::classify(deza::paley(r));
      const bool ok = rep.classification == deza::GraphClass::strongly_regular &&
                      rep.n == static_cast<int>(r) && *rep.k == static_cast<int>((r - 1) / 2) &&
                      *rep.srg_lambda == static_cast<int>((r - 5) / 4) &&
                      *rep.srg_mu == static_cast<int>((r - 1) / 4);
      c.require(ok, "order " + std::to_string(r) + " parameters");
    }
  }, 1.0});

  criteria.push_back({2, "doubling construction parameters", [&](Check& c) {
    auto p9 = deza::certify_srg_with_involution(deza::paley(9), std::nullopt);
    auto p25 = deza::certify_srg_with_involution(deza::paley(25), std::nullopt);
    deza_params(deza::construction1(p9), 18, 9, 8, 4, c, "order 9");
    deza_params(deza::construction1(p25), 50, 25, 24, 12, c, "order 25");
    deza_params(deza::construction1(conf5), 52, 21, 20, 8, c, "conference 5");
    deza_params(deza::construction1(hs), 100, 15, 14, 2, c, "Moore graph");
  }, 5.0});

  criteria.push_back({3, "doubling construction on complements", [&](Check& c) {
    deza_params(deza::construction1(deza::srg_complement(conf5)), 52, 31, 30, 18, c,
                "conference 5 complement");
    deza_params(deza::construction1(deza::srg_complement(hs)), 100, 85, 84, 72, c,
                "Moore graph complement");
  }, 0.0});

  criteria.push_back({4, "rewired construction differs from the doubling", [&](Check& c) {
    for (const auto* s : {&pf5, &hs}) {
      const Graph a1 = deza::construction1(*s);
      const Graph a2 = deza::construction2(*s);
      const std::string tag = std::to_string(s->m) + " vertices";
      deza_params(a2, 2 * s->m, 2 * s->ell + 1, 2 * s->ell, 2 * s->mu, c, tag);
      c.require(!deza::are_isomorphic(a1, a2), tag + ": outputs must not be isomorphic");
      c.require(deza::bb_partners(a1).all_adjacent(),
                tag + ": doubling must keep every partner pair adjacent");
      c.require(!deza::bb_partners(a2).all_adjacent(),
                tag + ": rewiring must break some partner pair");
    }
  }, 30.0});

  criteria.push_back({5, "row-permuted switching outputs", [&](Check& c) {
    const auto phis = deza::find_special_involutions(pet, deza::SwapMode::non_adjacent_only, 1);
    c.require(phis.size() == 1, "10-vertex Moore graph: no qualifying involution found");
    if (phis.size() == 1) {
      const Graph d = deza::dual_seidel_switch(pet, phis[0]);
      c.require(deza::diameter(d) == 3, "10-vertex switch: diameter 3");
    }
    const Graph dhs = deza::dual_seidel_switch(hs.graph, *hs.involution);
    c.require(deza::diameter(dhs) == 3, "50-vertex switch: diameter 3");
    const Graph d25 = deza::dual_seidel_switch(pf5.graph, *pf5.involution);
    const auto rep = deza::classify(d25);
    c.require(rep.strictly_deza && rep.common_values == std::vector<int>{5, 6},
              "25-vertex switch: strictly Deza with common-neighbour values {5, 6}");
  }, 0.0});

  criteria.push_back({6, "involution census uniqueness", [&](Check& c) {
    const auto pet_census = deza::find_special_involutions(pet, deza::SwapMode::non_adjacent_only);
    c.require(pet_census.size() == 1, "10-vertex Moore graph: census " +
                                          std::to_string(pet_census.size()) + " (expected 1)");
    if (!pet_census.empty())
      c.require(pet_census.front().fixed_points().size() == 4,
                "10-vertex Moore graph: first involution must fix 4 vertices");
    const auto co_census =
        deza::find_special_involutions(deza::complement(pet), deza::SwapMode::non_adjacent_only);
    c.require(co_census.empty(), "complement census " + std::to_string(co_census.size()) +
                                     " (expected 0)");
    const auto t0 = clock::now();
    const auto hs_census =
        deza::find_special_involutions(hs.graph, deza::SwapMode::non_adjacent_only);
    const double hs_seconds = std::chrono::duration<double>(clock::now() - t0).count();
    c.require(hs_census.size() == 1, "50-vertex Moore graph: census " +
                                         std::to_string(hs_census.size()) + " (expected 1)");
    c.require(hs_seconds < 60.0, "50-vertex census must finish within 60 s");
    std::ostringstream measured;
    measured << "measured censuses: 10-vertex " << pet_census.size() << ", complement "
             << co_census.size() << ", 50-vertex " << hs_census.size();
    c.note(measured.str());
  }, 0.0});

  criteria.push_back({7, "decomposition round trips", [&](Check& c) {
    int good = 0;
    for (size_t i = 0; i < family.size(); ++i) {
      const auto& s = *family[i].s;
      const std::string name = family[i].name;
      const auto r1 = deza::decompose(c1_out[i]);
      const bool ok1 = r1.tag == "C1" && r1.srg == s.graph && r1.all_checks_pass() &&
                       r1.reconstructed_equal;
      c.require(ok1, name + ": doubling round trip");
      const auto r2 = deza::decompose(c2_out[i]);
      const bool ok2 = r2.tag == "C2" && r2.srg == s.graph && r2.all_checks_pass() &&
                       r2.reconstructed_equal && r2.involution == *s.involution;
      c.require(ok2, name + ": rewiring round trip");
      good += ok1 + ok2;
    }
    c.note(std::to_string(good) + "/10 round trips clean");
  }, 120.0});

  criteria.push_back({8, "structural lemma checklist", [&](Check& c) {
    for (size_t i = 0; i < family.size(); ++i) {
      for (const Graph* g : {&c1_out[i], &c2_out[i]}) {
        const auto r = deza::decompose(*g);
        c.require(r.lemma_checks.size() == 21,
                  std::string(family[i].name) + ": 21 checks recorded");
        for (const auto& chk : r.lemma_checks)
          c.require(chk.pass, std::string(family[i].name) + ": " + chk.name);
      }
    }
    for (const auto& [parts, size] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}, {4, 1}}) {
      const std::string tag =
          "multipartite " + std::to_string(parts) + "x" + std::to_string(size);
      try {
        deza::decompose(deza::k2_multipartite(parts, size));
        c.require(false, tag + ": decompose must be rejected");
      } catch (const deza::gate_error& e) {
        c.require(std::string(e.what()).find("beta != 1") != std::string::npos,
                  tag + ": rejection must name the beta gate");
      }
    }
  }, 0.0});

  criteria.push_back({9, "vertex-count formula for beta", [&](Check& c) {
    std::vector<Graph> fixtures = c1_out;
    fixtures.insert(fixtures.end(), c2_out.begin(), c2_out.end());
    fixtures.push_back(deza::dual_seidel_switch(pf5.graph, *pf5.involution));
    fixtures.push_back(deza::k2_multipartite(3, 2));
    for (const Graph& g : fixtures) {
      const auto rep = deza::classify(g);  // classify cross-checks the formula internally
      const bool applies = rep.deza && rep.a && rep.b && *rep.a != *rep.b;
      if (!applies) {
        c.require(false, "fixture is not Deza with two distinct common-neighbour counts");
        continue;
      }
      const auto formula = deza::beta_formula(rep.n, *rep.k, *rep.b, *rep.a);
      c.require(formula.denominator() == 1 && rep.beta &&
                    formula.numerator() == *rep.beta,
                "per-vertex count equals the formula");
    }
    c.require(deza::beta_formula(18, 9, 8, 4) == boost::rational<long long>(1),
              "beta(18, 9, 8, 4) = 1");
    c.require(deza::beta_formula(10, 5, 4, 2) == boost::rational<long long>(1),
              "beta(10, 5, 4, 2) = 1");
  }, 0.0});

  criteria.push_back({10, "walk-regularity split", [&](Check& c) {
    for (size_t i = 0; i < family.size(); ++i) {
      const auto w1 = deza::is_walk_regular(c1_out[i]);
      c.require(w1.walk_regular, std::string(family[i].name) + ": doubling output walk-regular");
      const auto w2 = deza::is_walk_regular(c2_out[i]);
      c.require(!w2.walk_regular,
                std::string(family[i].name) + ": rewired output not walk-regular");
    }
  }, 30.0});

  criteria.push_back({11, "eigenvalue-1 multiplicities differ", [&](Check& c) {
    // (18, 9, 8, 4) and (20, 7, 6, 2): same parameters, different spectra.
    const int m18_c1 = deza::eigenvalue_multiplicity(c1_out[0], 1);
    const int m18_c2 = deza::eigenvalue_multiplicity(c2_out[0], 1);
    const int m20_c1 = deza::eigenvalue_multiplicity(c1_out[2], 1);
    const int m20_c2 = deza::eigenvalue_multiplicity(c2_out[2], 1);
    c.require(m18_c1 != m18_c2, "(18, 9, 8, 4): multiplicities must differ");
    c.require(m20_c1 != m20_c2, "(20, 7, 6, 2): multiplicities must differ");
    std::ostringstream measured;
    measured << "multiplicity(1): 18-vertex " << m18_c1 << " vs " << m18_c2 << ", 20-vertex "
             << m20_c1 << " vs " << m20_c2;
    c.note(measured.str());
  }, 0.0});

  criteria.push_back({12, "conference-matrix identity", [&](Check& c) {
    for (const auto* s : {&conf3, &conf5}) {
      const Graph& g = s->graph;
      const int n = g.size();
      const long long q = static_cast<long long>(s->m > 20 ? 5 : 3);
      std::vector<std::vector<long long>> mat(n, std::vector<long long>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) mat[i][j] = g.adjacent(i, j) ? -1 : 1;
      bool rows_ok = true, identity_ok = true;
      for (int i = 0; i < n; ++i) {
        long long sum = 0;
        for (int j = 0; j < n; ++j) sum += mat[i][j];
        rows_ok &= sum == q || sum == -q;
        for (int j = i; j < n; ++j) {
          long long dot = 0;
          for (int l = 0; l < n; ++l) dot += mat[i][l] * mat[j][l];
          identity_ok &= dot == (i == j ? q * q : 0);
        }
      }
      const std::string tag = "order " + std::to_string(n);
      c.require(rows_ok, tag + ": constant row sum of magnitude q");
      c.require(identity_ok, tag + ": C C^T = q^2 I");
    }
    c.require(deza::are_isomorphic(conf3.graph, pet),
              "order 10: conference graph isomorphic to the Moore graph");
  }, 0.0});

  std::printf("fixtures built in %.3f s\n", fixture_seconds);
  int failures = 0;
  double total = fixture_seconds;
  for (auto& cr : criteria) {
    Check check;
    const auto t0 = clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("unexpected exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(clock::now() - t0).count();
    total += seconds;
    if (cr.bound_seconds > 0 && seconds >= cr.bound_seconds) {
      std::ostringstream slow;
      slow << "took " << seconds << " s (bound " << cr.bound_seconds << " s)";
      check.require(false, slow.str());
    }
    const bool pass = check.out.pass;
    failures += !pass;
    std::printf("%s %2d %s (%.3f s)%s%s\n", pass ? "PASS" : "FAIL", cr.id, cr.title.c_str(),
                seconds, check.out.detail.empty() ? "" : " - ", check.out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed in %.3f s total\n", static_cast<int>(criteria.size()) - failures,
              criteria.size(), total);
  return failures == 0 ? 0 : 1;
}
