#include "deza/constructions.hpp"

#include <string>
#include <utility>
#include <vector>

#include "deza/classify.hpp"
#include "deza/error.hpp"
#include "deza/ffield.hpp"

namespace deza {

namespace {

// Constructions verify their output exhaustively, so they stay desk-scale.
constexpr uint64_t kMaxConstructionVertices = 4096;

std::pair<uint32_t, uint32_t> prime_power(uint64_t r, const std::string& what) {
  if (r < 2) throw gate_error(what + ": not a prime power");
  uint64_t p = r;
  for (uint64_t d = 2; d * d <= r; ++d) {
    if (r % d == 0) {
      p = d;
      break;
    }
  }
  uint32_t m = 0;
  uint64_t rest = r;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) throw gate_error(what + ": not a prime power");
  return {static_cast<uint32_t>(p), m};
}

// degree(i) == deg and |N(i) & N(j)| identical in g and h for all i, j: the
// squared adjacency matrices agree entrywise.
void check_same_square(const Graph& g, const Graph& h, const std::string& what) {
  const int n = g.size();
  for (int i = 0; i < n; ++i)
    if (g.degree(i) != h.degree(i))
      throw check_error(what + ": squared adjacency matrices differ on the diagonal");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.common_neighbours(i, j) != h.common_neighbours(i, j))
        throw check_error(what + ": squared adjacency matrices differ");
}

}  // namespace

SrgWithInvolution certify_srg_with_involution(Graph g, std::optional<Permutation> phi) {
  auto rep = classify(g);
  if (rep.classification != GraphClass::strongly_regular)
    throw gate_error("srg certificate: graph is not strongly regular");
  if (*rep.srg_lambda != *rep.srg_mu - 1)
    throw gate_error("srg certificate: lambda != mu - 1");
  if (phi) {
    if (phi->size() != g.size())
      throw gate_error("srg certificate: permutation size mismatch");
    if (!phi->is_involution())
      throw gate_error("srg certificate: permutation is not an involution");
    if (!is_automorphism(g, *phi))
      throw gate_error("srg certificate: permutation is not an automorphism");
    for (const auto& [u, v] : phi->transpositions())
      if (g.adjacent(u, v))
        throw gate_error("srg certificate: involution interchanges adjacent vertices");
  }
  SrgWithInvolution s;
  s.graph = std::move(g);
  s.m = rep.n;
  s.ell = *rep.k;
  s.lambda = *rep.srg_lambda;
  s.mu = *rep.srg_mu;
  s.involution = std::move(phi);
  return s;
}

SrgWithInvolution srg_complement(const SrgWithInvolution& s) {
  return certify_srg_with_involution(complement(s.graph), std::nullopt);
}

Graph paley(uint64_t r) {
  auto [p, m] = prime_power(r, "paley");
  if (r % 4 != 1) throw gate_error("paley: order is not 1 mod 4");
  if (r > kMaxConstructionVertices) throw gate_error("paley: order exceeds the size bound");
  auto f = Field::make(p, m);
  const int n = static_cast<int>(r);
  Graph g(n);
  // r = 1 mod 4 makes -1 a square, so x - y and y - x agree as criteria.
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (f->is_square(f->sub(u, v))) g.set_edge(u, v);
  auto rep = classify(g);
  const long long rr = static_cast<long long>(r);
  if (rep.classification != GraphClass::strongly_regular || *rep.k != (rr - 1) / 2 ||
      *rep.srg_lambda != (rr - 5) / 4 || *rep.srg_mu != (rr - 1) / 4)
    throw check_error("paley: classification mismatch");
  return g;
}

SrgWithInvolution paley_frobenius_involution(uint32_t q) {
  auto [p, m] = prime_power(q, "paley involution");
  const uint64_t q2 = static_cast<uint64_t>(q) * q;
  if (q2 > kMaxConstructionVertices)
    throw gate_error("paley involution: order exceeds the size bound");
  auto base = Field::make(p, m);
  auto ext = Field::make_quadratic_extension(base);
  const int n = static_cast<int>(q2);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (ext->is_square(ext->sub(u, v))) g.set_edge(u, v);
  // For q = 3 mod 4 the conjugation map pairs adjacent vertices of P(q^2);
  // passing to the complement (same parameters) flips that.
  if (q % 4 == 3) g = complement(g);
  std::vector<int> image(n);
  for (int v = 0; v < n; ++v) image[v] = static_cast<int>(ext->frobenius(v));
  auto s = certify_srg_with_involution(std::move(g), Permutation(std::move(image)));
  if (s.involution->fixed_points().size() != q)
    throw check_error("paley involution: wrong fixed-point count");
  return s;
}

SrgWithInvolution conference_srg(uint32_t q) {
  if (q > 31) throw gate_error("conference graph: order exceeds the size bound");
  auto pe = paley_frobenius_involution(q);
  const int qq = static_cast<int>(q) * static_cast<int>(q);
  const int n = qq + 1;
  const int border = qq;
  // Seidel matrix of pe.graph, bordered by a +1 row and column.
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < qq; ++i) {
    for (int j = 0; j < qq; ++j)
      if (i != j) c[i][j] = pe.graph.adjacent(i, j) ? -1 : 1;
    c[i][border] = c[border][i] = 1;
  }
  // Switch the classes V_x = {x + q*y : y} for the (q-1)/2 smallest x.
  std::vector<int> sign(n, 1);
  for (uint32_t x = 0; x < (q - 1) / 2; ++x)
    for (uint32_t y = 0; y < q; ++y) sign[x + q * y] = -1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] *= sign[i] * sign[j];
  for (int i = 0; i < n; ++i) {
    long long row = 0;
    for (int j = 0; j < n; ++j) row += c[i][j];
    if (row != static_cast<long long>(q))
      throw check_error("conference graph: row sum is not q");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      long long dot = 0;
      for (int l = 0; l < n; ++l) dot += static_cast<long long>(c[i][l]) * c[j][l];
      if (dot != (i == j ? static_cast<long long>(n) - 1 : 0))
        throw check_error("conference graph: C C^T != (n-1) I");
    }
  }
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (c[i][j] == -1) g.set_edge(i, j);
  std::vector<int> image(n);
  for (int v = 0; v < qq; ++v) image[v] = (*pe.involution)(v);
  image[border] = border;
  auto s = certify_srg_with_involution(std::move(g), Permutation(std::move(image)));
  const long long lq = q;
  if (s.m != n || s.ell != (lq * lq - lq) / 2 || s.lambda != (lq - 1) * (lq - 1) / 4 - 1 ||
      s.mu != (lq - 1) * (lq - 1) / 4)
    throw check_error("conference graph: classification mismatch");
  return s;
}

SrgWithInvolution hoffman_singleton() {
  const auto pid = [](int j, int i) { return 5 * j + i; };
  const auto qid = [](int k, int i) { return 25 + 5 * k + i; };
  Graph g(50);
  for (int j = 0; j < 5; ++j) {
    for (int i = 0; i < 5; ++i) {
      g.set_edge(pid(j, i), pid(j, (i + 1) % 5));  // pentagon
      g.set_edge(qid(j, i), qid(j, (i + 2) % 5));  // pentagram
      for (int k = 0; k < 5; ++k) g.set_edge(pid(j, i), qid(k, (i + j * k) % 5));
    }
  }
  // The blocks P0, Q0 are fixed pointwise; search all dihedral position maps
  // i -> s*i + c (s = +-1) for the block swaps P1<->P4, P2<->P3, Q1<->Q4,
  // Q2<->Q3 and keep the automorphisms.  Exactly one must exist.
  std::vector<std::pair<int, int>> dihedral;
  for (int s : {1, 4})
    for (int c = 0; c < 5; ++c) dihedral.emplace_back(s, c);
  std::optional<Permutation> found;
  int count = 0;
  std::vector<int> f(50);
  for (const auto& sp1 : dihedral) {
    for (const auto& sp2 : dihedral) {
      for (const auto& sq1 : dihedral) {
        for (const auto& sq2 : dihedral) {
          for (int i = 0; i < 50; ++i) f[i] = i;
          const auto swap_blocks = [&](int from, int to, std::pair<int, int> sc) {
            const auto [s, c] = sc;
            for (int i = 0; i < 5; ++i) {
              f[from + i] = to + (s * i + c) % 5;
              // inverse of i -> s*i + c; s is self-inverse mod 5
              f[to + i] = from + (s * (i - c) % 5 + 5) % 5;
            }
          };
          swap_blocks(pid(1, 0), pid(4, 0), sp1);
          swap_blocks(pid(2, 0), pid(3, 0), sp2);
          swap_blocks(qid(1, 0), qid(4, 0), sq1);
          swap_blocks(qid(2, 0), qid(3, 0), sq2);
          Permutation p{f};
          if (is_automorphism(g, p)) {
            ++count;
            found = std::move(p);
          }
        }
      }
    }
  }
  if (count != 1 || !found)
    throw check_error("Moore graph: dihedral block-swap automorphism is not unique");
  auto s = certify_srg_with_involution(std::move(g), std::move(*found));
  if (s.m != 50 || s.ell != 7 || s.lambda != 0 || s.mu != 1 ||
      s.involution->fixed_points().size() != 10)
    throw check_error("Moore graph: classification mismatch");
  return s;
}

Graph dual_seidel_switch(const Graph& g, const Permutation& p) {
  const int n = g.size();
  if (p.size() != n) throw gate_error("dual Seidel switching: permutation size mismatch");
  if (!p.is_involution())
    throw gate_error("dual Seidel switching: permutation is not an involution");
  if (!is_automorphism(g, p))
    throw gate_error("dual Seidel switching: permutation is not an automorphism");
  for (const auto& [u, v] : p.transpositions())
    if (g.adjacent(u, v))
      throw gate_error("dual Seidel switching: involution interchanges adjacent vertices");
  Graph h(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool e = g.adjacent(p(i), j);
      if (e != g.adjacent(p(j), i))
        throw check_error("dual Seidel switching: P A is not symmetric");
      if (e) h.set_edge(i, j);
    }
  }
  for (int i = 0; i < n; ++i)
    if (g.adjacent(p(i), i))
      throw check_error("dual Seidel switching: P A has a nonzero diagonal");
  check_same_square(g, h, "dual Seidel switching");
  return h;
}

Graph construction1(const SrgWithInvolution& s) {
  Graph out = strong_product_k2(s.graph);
  auto rep = classify(out);
  const bool params_ok = rep.deza && rep.n == 2 * s.m && rep.k && *rep.k == 2 * s.ell + 1 &&
                         rep.b && *rep.b == 2 * s.ell && rep.a && *rep.a == 2 * s.mu &&
                         rep.beta && *rep.beta == 1;
  if (!params_ok || (s.m > 1 && !rep.strictly_deza))
    throw check_error("construction1: output parameters mismatch");
  return out;
}

Graph construction2(const SrgWithInvolution& s) {
  if (!s.involution) throw gate_error("construction2: involution missing");
  const Permutation& phi = *s.involution;
  if (phi.is_identity()) throw gate_error("construction2: involution is the identity");
  if (phi.size() != s.m || !phi.is_involution() || !is_automorphism(s.graph, phi))
    throw gate_error("construction2: involution is not certified");
  const int m = s.m;
  const int n = 2 * m;
  const Graph a1 = strong_product_k2(s.graph);
  // pi = P (x) I2 relabels the pair over vertex i to the pair over phi(i).
  std::vector<int> pi(n);
  for (int i = 0; i < m; ++i) {
    pi[2 * i] = 2 * phi(i);
    pi[2 * i + 1] = 2 * phi(i) + 1;
  }
  Graph out(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool e = a1.adjacent(pi[u], v);
      if (e != a1.adjacent(pi[v], u))
        throw check_error("construction2: product matrix is not symmetric");
      if (e) out.set_edge(u, v);
    }
  }
  for (int u = 0; u < n; ++u)
    if (a1.adjacent(pi[u], u)) throw check_error("construction2: nonzero diagonal");

  // Equivalent rewiring: strong product of the switched graph, with the two
  // pair edges of every transposition replaced by two cross edges.
  Graph rewired = strong_product_k2(dual_seidel_switch(s.graph, phi));
  for (const auto& [x, y] : phi.transpositions()) {
    rewired.set_edge(2 * x, 2 * x + 1, false);
    rewired.set_edge(2 * y, 2 * y + 1, false);
    rewired.set_edge(2 * x, 2 * y + 1);
    rewired.set_edge(2 * x + 1, 2 * y);
  }
  if (!(rewired == out))
    throw check_error("construction2: matrix and rewiring forms disagree");

  check_same_square(a1, out, "construction2");
  auto rep = classify(out);
  const bool params_ok = rep.deza && rep.n == 2 * s.m && rep.k && *rep.k == 2 * s.ell + 1 &&
                         rep.b && *rep.b == 2 * s.ell && rep.a && *rep.a == 2 * s.mu &&
                         rep.beta && *rep.beta == 1 && rep.strictly_deza;
  if (!params_ok) throw check_error("construction2: output parameters mismatch");
  return out;
}

Graph k2_multipartite(int parts, int part_size) {
  if (parts < 2 || part_size < 1)
    throw gate_error("k2 multipartite: need at least 2 parts of size >= 1");
  const int m = parts * part_size;
  if (static_cast<uint64_t>(m) > kMaxConstructionVertices / 2)
    throw gate_error("k2 multipartite: order exceeds the size bound");
  Graph base(m);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (u / part_size != v / part_size) base.set_edge(u, v);
  Graph out = strong_product_k2(base);
  auto rep = classify(out);
  if (!rep.deza || !rep.b || !rep.k || *rep.b != *rep.k - 1)
    throw check_error("k2 multipartite: output is not Deza with b = k - 1");
  if (m > 2 && rep.beta && *rep.beta <= 1)
    throw check_error("k2 multipartite: expected beta > 1");
  return out;
}

}  // namespace deza
