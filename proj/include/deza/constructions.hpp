#pragma once

#include <cstdint>
#include <optional>

#include "deza/graph.hpp"
#include "deza/permutation.hpp"

namespace deza {

/// A strongly regular graph with lambda = mu - 1, optionally carrying an
/// order-2 automorphism certified to interchange only non-adjacent vertices.
/// certify_srg_with_involution re-derives the parameters and re-checks the
/// certificate, so a value of this type is always internally consistent.
struct SrgWithInvolution {
  Graph graph;
  int m = 0;       // vertex count
  int ell = 0;     // valency
  int lambda = 0;
  int mu = 0;
  std::optional<Permutation> involution;
};

/// Classifies g (must be strongly regular with lambda = mu - 1) and, when phi
/// is given, certifies it: automorphism, order <= 2, every transposed pair
/// non-adjacent.  Violations throw gate_error.
SrgWithInvolution certify_srg_with_involution(Graph g, std::optional<Permutation> phi);

/// Complement of s; the involution certificate does not survive (transposed
/// pairs become adjacent), so it is dropped.
SrgWithInvolution srg_complement(const SrgWithInvolution& s);

/// Paley graph P(r) for a prime power r = p^m, r = 1 (mod 4): vertices are
/// the elements of GF(r) in canonical enumeration order, x ~ y iff x - y is
/// a nonzero square.  Verified strongly regular
/// (r, (r-1)/2, (r-5)/4, (r-1)/4).
Graph paley(uint64_t r);

/// P(q^2) built on the quadratic extension GF(q)[alpha], alpha^2 = d, with
/// vertex x + y*alpha at index x + q*y, complemented when q = 3 (mod 4); the
/// involution is x + y*alpha |-> x - y*alpha, which fixes exactly the q
/// base-field vertices and is certified to interchange only non-adjacent
/// vertices of the returned graph.
SrgWithInvolution paley_frobenius_involution(uint32_t q);

/// Seidel-switched conference-matrix graph on q^2 + 1 vertices (the
/// base-field classes V_x for the (q-1)/2 smallest x are switched, the
/// all-ones border row sits at the last vertex).  The conference identity
/// C*C^T = q^2 I and constant row sum q are asserted; the result is verified
/// strongly regular (q^2+1, (q^2-q)/2, (q-1)^2/4 - 1, (q-1)^2/4) and carries
/// the Paley involution extended by fixing the border vertex.
SrgWithInvolution conference_srg(uint32_t q);

/// The 50-vertex Moore graph of valency 7 built from five pentagons P_j
/// (i ~ i+-1) and five pentagrams Q_k (i ~ i+-2), with vertex i of P_j joined
/// to vertex i + jk of Q_k (mod 5).  Verified strongly regular (50, 7, 0, 1).
/// The involution swaps P_j with P_{5-j} and Q_k with Q_{5-k}; its position
/// maps are found by searching the <= 20 dihedral maps per block pair, and
/// exactly one automorphism of that shape is asserted to exist.
SrgWithInvolution hoffman_singleton();

/// Dual Seidel switching: new adjacency row i is old row p(i), i.e.
/// A' = P*A.  Requires p an order-2 automorphism interchanging only
/// non-adjacent vertices; asserts the result is symmetric with zero diagonal
/// and that A'^2 = A^2 entrywise.
Graph dual_seidel_switch(const Graph& g, const Permutation& p);

/// Strong product of K2 with s: a Deza graph
/// (2m, 2*ell + 1, 2*ell, 2*mu) with beta = 1, strictly Deza when m > 1.
/// The pair over vertex i of s is {2i, 2i+1}.  Post-conditions are verified.
Graph construction1(const SrgWithInvolution& s);

/// (P (x) I2) * A1 for the certified involution P of s: per transposition
/// (x y), the pair edges {2x, 2x+1} and {2y, 2y+1} are replaced by the cross
/// edges {2x, 2y+1} and {2x+1, 2y}.  Built both from the matrix product and
/// by rewiring the strong product of the switched graph, asserted equal, and
/// verified to have the same parameters and squared adjacency matrix as
/// construction1(s).  Requires a non-identity certified involution.
Graph construction2(const SrgWithInvolution& s);

/// Strong product of K2 with the complete multipartite graph of `parts`
/// parts of size `part_size`: a Deza graph with b = k - 1 whose beta exceeds
/// 1 as soon as parts * part_size > 2 (a negative control for the beta = 1
/// family).
Graph k2_multipartite(int parts, int part_size);

}  // namespace deza
