#include "deza/decompose.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "deza/classify.hpp"
#include "deza/error.hpp"

namespace deza {

namespace {

ParameterReport decompose_gate(const Graph& g) {
  auto rep = classify(g);
  if (!rep.deza) throw gate_error("decompose: not a Deza graph");
  if (!rep.b || !rep.k || *rep.b != *rep.k - 1) throw gate_error("decompose: b != k - 1");
  if (!rep.beta || *rep.beta != 1) throw gate_error("decompose: beta != 1");
  return rep;
}

struct PartnerSearch {
  std::vector<int> partner;
  bool unique = true;
  bool involution = true;
};

PartnerSearch find_partners(const Graph& g, int b) {
  const int n = g.size();
  PartnerSearch out;
  out.partner.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    int count = 0;
    for (int u = 0; u < n; ++u) {
      if (u == x) continue;
      if (g.common_neighbours(x, u) == b) {
        out.partner[x] = u;
        ++count;
      }
    }
    if (count != 1) out.unique = false;
  }
  if (out.unique)
    for (int x = 0; x < n; ++x)
      if (out.partner[out.partner[x]] != x) out.involution = false;
  return out;
}

struct PrimeSearch {
  std::vector<int> prime;
  bool unique = true;
};

PrimeSearch find_primes(const Graph& g, const std::vector<int>& partner,
                        const std::vector<bool>& adjacent_pair) {
  const int n = g.size();
  PrimeSearch out;
  out.prime.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (adjacent_pair[x]) continue;
    const int xb = partner[x];
    int count = 0;
    for (int u : g.neighbours(x)) {
      if (u == xb || g.adjacent(xb, u)) continue;
      out.prime[x] = u;
      ++count;
    }
    if (count != 1) out.unique = false;
  }
  return out;
}

std::vector<int> sorted_common(const Graph& g, int u, int v) {
  std::vector<int> out;
  for (int w = 0; w < g.size(); ++w)
    if (g.adjacent(u, w) && g.adjacent(v, w)) out.push_back(w);
  return out;
}

}  // namespace

bool BbPartnerMap::all_adjacent() const {
  for (bool adj : adjacent_pair)
    if (!adj) return false;
  return true;
}

BbPartnerMap bb_partners(const Graph& g) {
  auto rep = decompose_gate(g);
  auto ps = find_partners(g, *rep.b);
  if (!ps.unique) throw lemma_error({"partner_unique"});
  if (!ps.involution) throw lemma_error({"partner_involution"});
  BbPartnerMap pm;
  pm.partner = std::move(ps.partner);
  pm.adjacent_pair.resize(g.size());
  for (int x = 0; x < g.size(); ++x) pm.adjacent_pair[x] = g.adjacent(x, pm.partner[x]);
  auto primes = find_primes(g, pm.partner, pm.adjacent_pair);
  if (!primes.unique) throw lemma_error({"na_prime_unique"});
  pm.prime = std::move(primes.prime);
  return pm;
}

std::vector<int> w_set(const Graph& g, const BbPartnerMap& pm, int x) {
  if (x < 0 || x >= g.size() || static_cast<int>(pm.partner.size()) != g.size())
    throw std::invalid_argument("w_set: vertex out of range");
  if (pm.adjacent_pair[x]) throw std::invalid_argument("w_set: x is not an NA-vertex");
  return sorted_common(g, x, pm.prime[x]);
}

Graph gamma_prime(const Graph& g, const BbPartnerMap& pm) {
  if (static_cast<int>(pm.partner.size()) != g.size())
    throw std::invalid_argument("gamma_prime: partner map size mismatch");
  Graph gp = g;
  for (int x = 0; x < g.size(); ++x) {
    if (pm.adjacent_pair[x])
      gp.set_edge(x, pm.partner[x], false);
    else
      gp.set_edge(x, pm.prime[x], false);
  }
  return gp;
}

PairQuotient gamma_double_prime(const Graph& gp, const BbPartnerMap& pm) {
  const int n = gp.size();
  if (static_cast<int>(pm.partner.size()) != n)
    throw std::invalid_argument("gamma_double_prime: partner map size mismatch");
  PairQuotient q;
  std::set<std::pair<int, int>> pair_set;
  for (int x = 0; x < n; ++x)
    pair_set.insert({std::min(x, pm.partner[x]), std::max(x, pm.partner[x])});
  q.pairs.assign(pair_set.begin(), pair_set.end());
  const int m = static_cast<int>(q.pairs.size());
  if (2 * m != n) throw std::invalid_argument("gamma_double_prime: pairs do not partition");
  q.pair_of.assign(n, -1);
  for (int i = 0; i < m; ++i) {
    q.pair_of[q.pairs[i].first] = i;
    q.pair_of[q.pairs[i].second] = i;
  }
  q.graph = Graph(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto& [u1, v1] = q.pairs[i];
      const auto& [u2, v2] = q.pairs[j];
      const int count = gp.adjacent(u1, u2) + gp.adjacent(u1, v2) + gp.adjacent(v1, u2) +
                        gp.adjacent(v1, v2);
      if (count != 0 && count != 4) throw lemma_error({"cross_edges_all_or_none"});
      if (count == 4) q.graph.set_edge(i, j);
    }
  }
  return q;
}

Graph gamma_triple_prime(const Graph& gpp, const Permutation& sigma) {
  const int m = gpp.size();
  if (sigma.size() != m)
    throw std::invalid_argument("gamma_triple_prime: permutation size mismatch");
  for (int i = 0; i < m; ++i)
    if (gpp.adjacent(sigma(i), i)) throw lemma_error({"gamma_triple_prime_symmetric"});
  Graph out(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const bool e = gpp.adjacent(sigma(i), j);
      if (e != gpp.adjacent(sigma(j), i)) throw lemma_error({"gamma_triple_prime_symmetric"});
      if (e) out.set_edge(i, j);
    }
  }
  return out;
}

bool DecompositionReport::all_checks_pass() const {
  for (const auto& check : lemma_checks)
    if (!check.pass) return false;
  return true;
}

DecompositionReport decompose(const Graph& g) {
  const auto rep = decompose_gate(g);
  const int n = g.size();
  const int k = *rep.k;
  const int a = *rep.a;

  DecompositionReport report;
  auto note = [&report](const char* name, bool pass) {
    report.lemma_checks.push_back({name, pass});
    return pass;
  };
  auto finish = [&report]() -> DecompositionReport {
    std::vector<std::string> failed;
    for (const auto& check : report.lemma_checks)
      if (!check.pass) failed.push_back(check.name);
    if (!failed.empty()) throw lemma_error(failed);
    return std::move(report);
  };

  // Partners and the A/NA split.
  auto ps = find_partners(g, *rep.b);
  if (!note("partner_unique", ps.unique)) return finish();
  if (!note("partner_involution", ps.involution)) return finish();
  BbPartnerMap pm;
  pm.partner = std::move(ps.partner);
  pm.adjacent_pair.resize(n);
  for (int x = 0; x < n; ++x) pm.adjacent_pair[x] = g.adjacent(x, pm.partner[x]);
  report.tag = pm.all_adjacent() ? "C1" : "C2";

  {
    bool pass = true;
    for (int x = 0; x < n && pass; ++x) {
      if (!pm.adjacent_pair[x]) continue;
      const int xb = pm.partner[x];
      for (int u = 0; u < n && pass; ++u)
        if (u != x && u != xb) pass = g.adjacent(x, u) == g.adjacent(xb, u);
    }
    note("a_pair_common_neighbourhood", pass);
  }

  auto primes = find_primes(g, pm.partner, pm.adjacent_pair);
  if (!note("na_prime_unique", primes.unique)) return finish();
  pm.prime = std::move(primes.prime);

  // Per-NA-vertex structure.
  {
    bool prime_na = true, double_prime = true, commutes = true;
    bool w_size = true, w_closed = true, w_ident = true;
    for (int x = 0; x < n; ++x) {
      if (pm.adjacent_pair[x]) continue;
      const int xb = pm.partner[x];
      const int xp = pm.prime[x];
      prime_na &= !pm.adjacent_pair[xp];
      double_prime &= pm.prime[xp] == x;
      commutes &= pm.prime[xb] == pm.partner[xp];
      const auto w = sorted_common(g, x, xp);
      w_size &= static_cast<int>(w.size()) == a;
      for (int u : w) w_closed &= std::binary_search(w.begin(), w.end(), pm.partner[u]);
      w_ident &= sorted_common(g, xb, xp) == w && sorted_common(g, x, pm.prime[xb]) == w &&
                 sorted_common(g, xb, pm.prime[xb]) == w;
    }
    note("na_prime_is_na", prime_na);
    note("na_double_prime_identity", double_prime);
    note("na_prime_partner_commutes", commutes);
    note("a_is_even", a % 2 == 0);
    note("w_set_size_a", w_size);
    note("w_set_partner_closed", w_closed);
    note("w_set_identities", w_ident);
  }

  // Gamma': pair edges removed.
  const Graph gp = gamma_prime(g, pm);
  {
    bool regular = true;
    for (int v = 0; v < n; ++v) regular &= gp.degree(v) == k - 1;
    note("gamma_prime_regular", regular);
    bool rows = true;
    for (int x = 0; x < n && rows; ++x) {
      const int xb = pm.partner[x];
      for (int u = 0; u < n && rows; ++u)
        if (u != x && u != xb) rows = gp.adjacent(x, u) == gp.adjacent(xb, u);
    }
    note("gamma_prime_pair_rows_equal", rows);
  }

  // Gamma'': quotient by the pairs.
  PairQuotient quotient;
  try {
    quotient = gamma_double_prime(gp, pm);
    note("cross_edges_all_or_none", true);
  } catch (const lemma_error&) {
    note("cross_edges_all_or_none", false);
    return finish();
  }
  const int m = quotient.graph.size();
  report.pairs = quotient.pairs;

  {
    const auto qrep = classify(quotient.graph);
    const bool pass = m == 1 || (qrep.deza && qrep.k && *qrep.k == (k - 1) / 2 && qrep.a &&
                                 *qrep.a == (a - 2) / 2 && qrep.b && *qrep.b == a / 2);
    note("gamma_double_prime_deza", pass);
  }

  // NA quadruples give the pair-level involution.
  std::vector<int> sigma_image(m);
  for (int i = 0; i < m; ++i) sigma_image[i] = i;
  {
    bool partition = true;
    std::set<std::vector<int>> quads;
    for (int x = 0; x < n; ++x) {
      if (pm.adjacent_pair[x]) continue;
      const int pi = quotient.pair_of[x];
      const int pj = quotient.pair_of[pm.prime[x]];
      if (sigma_image[pi] != pi && sigma_image[pi] != pj) partition = false;
      sigma_image[pi] = pj;
      if (sigma_image[pj] != pj && sigma_image[pj] != pi) partition = false;
      sigma_image[pj] = pi;
      std::vector<int> quad = {x, pm.prime[x], pm.partner[x], pm.prime[pm.partner[x]]};
      std::sort(quad.begin(), quad.end());
      partition &= std::unique(quad.begin(), quad.end()) == quad.end();
      for (int y : quad) partition &= !pm.adjacent_pair[y];
      if (partition) {
        std::vector<int> back = {quad[0], pm.prime[quad[0]], pm.partner[quad[0]],
                                 pm.prime[pm.partner[quad[0]]]};
        std::sort(back.begin(), back.end());
        partition &= back == quad;
        quads.insert(quad);
      }
    }
    if (!note("quadruple_partition", partition)) return finish();

    bool counts_ok = true;
    std::vector<std::vector<int>> quad_list(quads.begin(), quads.end());
    for (size_t i = 0; i < quad_list.size(); ++i) {
      for (size_t j = i + 1; j < quad_list.size(); ++j) {
        int edges = 0;
        for (int u : quad_list[i])
          for (int v : quad_list[j]) edges += g.adjacent(u, v);
        counts_ok &= edges == 0 || edges == 8 || edges == 16;
      }
    }
    note("quadruple_edges_0_8_16", counts_ok);
  }
  Permutation sigma{sigma_image};
  report.involution = sigma;

  // Gamma''' and the recovered strongly regular graph.
  Graph gppp;
  try {
    gppp = gamma_triple_prime(quotient.graph, sigma);
    note("gamma_triple_prime_symmetric", true);
  } catch (const lemma_error&) {
    note("gamma_triple_prime_symmetric", false);
    return finish();
  }
  report.srg = gppp;

  const auto srg_rep = classify(gppp);
  report.srg_n = srg_rep.n;
  report.srg_k = srg_rep.k.value_or(0);
  report.srg_lambda = srg_rep.srg_lambda.value_or(0);
  report.srg_mu = srg_rep.srg_mu.value_or(0);
  const bool srg_ok =
      m == 1 ? srg_rep.classification == GraphClass::complete
             : (srg_rep.classification == GraphClass::strongly_regular &&
                *srg_rep.k == (k - 1) / 2 && *srg_rep.srg_lambda == (a - 2) / 2 &&
                *srg_rep.srg_mu == a / 2);
  note("gamma_triple_prime_srg", srg_ok);

  bool sigma_ok = is_automorphism(gppp, sigma);
  for (const auto& [u, v] : sigma.transpositions()) sigma_ok &= !gppp.adjacent(u, v);
  note("involution_certified", sigma_ok);

  if (srg_ok && sigma_ok) {
    // Canonical vertex correspondence: fixed and leader pairs put their
    // minimum at slot 0; the follower pair of an NA quadruple puts the
    // leader minimum's prime at slot 1.
    std::vector<std::pair<int, int>> orient(m, {-1, -1});
    for (int i = 0; i < m; ++i) {
      if (sigma(i) == i) orient[i] = quotient.pairs[i];
      if (sigma(i) > i) {
        const int j = sigma(i);
        orient[i] = quotient.pairs[i];
        const int f1 = pm.prime[quotient.pairs[i].first];
        const int f0 =
            quotient.pairs[j].second == f1 ? quotient.pairs[j].first : quotient.pairs[j].second;
        orient[j] = {f0, f1};
      }
    }
    bool equal = false;
    try {
      const Graph recon = report.tag == "C2"
                              ? construction2(certify_srg_with_involution(gppp, sigma))
                              : strong_product_k2(gppp);
      equal = recon.size() == n;
      for (int i = 0; i < m && equal; ++i)
        for (int s = 0; s < 2 && equal; ++s)
          for (int j = 0; j < m && equal; ++j)
            for (int t = 0; t < 2 && equal; ++t) {
              if (i == j && s == t) continue;
              equal = recon.adjacent(2 * i + s, 2 * j + t) ==
                      g.adjacent(s == 0 ? orient[i].first : orient[i].second,
                                 t == 0 ? orient[j].first : orient[j].second);
            }
    } catch (const gate_error&) {
      equal = false;
    } catch (const check_error&) {
      equal = false;
    }
    report.reconstructed_equal = equal;
    note("reconstruction_equal", equal);
  }

  return finish();
}

std::string to_json(const DecompositionReport& report) {
  nlohmann::ordered_json j;
  j["tag"] = report.tag;
  j["srg_params"] = {report.srg_n, report.srg_k, report.srg_lambda, report.srg_mu};
  j["involution"] = report.involution.image();
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& [u, v] : report.pairs) pairs.push_back({u, v});
  j["pairs"] = std::move(pairs);
  auto checks = nlohmann::ordered_json::object();
  for (const auto& check : report.lemma_checks) checks[check.name] = check.pass;
  j["lemma_checks"] = std::move(checks);
  j["reconstructed_equal"] = report.reconstructed_equal;
  return j.dump(2);
}

}  // namespace deza
