#pragma once

#include <utility>
#include <vector>

#include "deza/graph.hpp"

namespace deza {

/// Permutation of {0, ..., n-1}; the constructor validates bijectivity.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v]; }
  const std::vector<int>& image() const { return image_; }

  bool is_identity() const;
  /// True iff p composed with itself is the identity (fixed points allowed).
  bool is_involution() const;
  Permutation inverse() const;
  /// (this o other): first apply other, then this.
  Permutation compose(const Permutation& other) const;
  std::vector<int> fixed_points() const;
  /// The 2-cycles {u, v} with u < v; meaningful for involutions.
  std::vector<std::pair<int, int>> transpositions() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return image_ < o.image_; }

 private:
  std::vector<int> image_;
};

/// adj(p(u), p(v)) == adj(u, v) for all u, v.
bool is_automorphism(const Graph& g, const Permutation& p);

/// Relabeled copy: vertex u of g becomes p(u), so
/// relabel(g, p).adjacent(p(u), p(v)) == g.adjacent(u, v).
Graph relabel(const Graph& g, const Permutation& p);

}  // namespace deza
