#include "deza/graph6.hpp"

#include <stdexcept>

namespace deza {

namespace {

constexpr int kMaxN = 1 << 18;

void append_bits(std::string& out, uint64_t value, int bits) {
  for (int shift = bits - 6; shift >= 0; shift -= 6)
    out.push_back(static_cast<char>(((value >> shift) & 63) + 63));
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.size();
  if (n > kMaxN) throw std::invalid_argument("graph6: n exceeds 2^18");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    append_bits(out, static_cast<uint64_t>(n), 18);
  } else {
    out.push_back(126);
    out.push_back(126);
    append_bits(out, static_cast<uint64_t>(n), 36);
  }
  // Upper triangle in column order, packed into 6-bit groups, zero padded.
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");

  size_t pos = 0;
  auto byte_val = [&](size_t i) -> uint64_t {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    return c - 63;
  };

  uint64_t n = 0;
  if (text[0] != 126) {
    n = byte_val(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw std::invalid_argument("graph6: truncated input");
    for (size_t i = 1; i < 4; ++i) n = (n << 6) | byte_val(i);
    pos = 4;
  } else {
    if (text.size() < 8) throw std::invalid_argument("graph6: truncated input");
    for (size_t i = 2; i < 8; ++i) n = (n << 6) | byte_val(i);
    pos = 8;
  }
  if (n < 1) throw std::invalid_argument("graph6: graphs need at least one vertex");
  if (n > kMaxN) throw std::invalid_argument("graph6: n exceeds 2^18");

  const uint64_t nbits = n * (n - 1) / 2;
  const uint64_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes) throw std::invalid_argument("graph6: wrong payload length");

  Graph g(static_cast<int>(n));
  uint64_t bit = 0;
  auto next_bit = [&]() -> bool {
    const bool set = (byte_val(pos + bit / 6) >> (5 - bit % 6)) & 1;
    ++bit;
    return set;
  };
  for (uint64_t v = 1; v < n; ++v)
    for (uint64_t u = 0; u < v; ++u)
      if (next_bit()) g.set_edge(static_cast<int>(u), static_cast<int>(v));
  while (bit < 6 * nbytes)
    if (next_bit()) throw std::invalid_argument("graph6: nonzero padding bits");
  return g;
}

}  // namespace deza
