#include "deza/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace deza {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  if (n == 0) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(n, false);
  for (int v : image_) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("image is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int v = 0; v < size(); ++v)
    if (image_[v] != v) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (int v = 0; v < size(); ++v)
    if (image_[image_[v]] != v) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(image_.size());
  for (int v = 0; v < size(); ++v) img[image_[v]] = v;
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("size mismatch");
  std::vector<int> img(image_.size());
  for (int v = 0; v < size(); ++v) img[v] = image_[other.image_[v]];
  return Permutation(std::move(img));
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (image_[v] == v) out.push_back(v);
  return out;
}

std::vector<std::pair<int, int>> Permutation::transpositions() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < size(); ++v)
    if (image_[v] > v) out.emplace_back(v, image_[v]);
  return out;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.size()) return false;
  const int n = g.size();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent(p(u), p(v))) return false;
  return true;
}

Graph relabel(const Graph& g, const Permutation& p) {
  if (p.size() != g.size()) throw std::invalid_argument("size mismatch");
  Graph h(g.size());
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v)) h.set_edge(p(u), p(v));
  return h;
}

}  // namespace deza
