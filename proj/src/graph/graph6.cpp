#include "inpp/graph6.hpp"

#include <charconv>

#include "inpp/error.hpp"

namespace inpp {

namespace {

constexpr int kBias = 63;

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) throw DomainError("graph6: invalid character");
  return v;
}

}  // namespace

Graph decode_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw DomainError("graph6: empty string");
  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw DomainError("graph6: orders above 258047 unsupported");
    if (text.size() < 4) throw DomainError("graph6: truncated order");
    n = (sextet(text[1]) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    pos = 4;
  }
  if (n > Graph::kMaxOrder) throw DomainError("graph6: order exceeds supported maximum");
  const std::size_t bits = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos != need) throw DomainError("graph6: wrong length for order " + std::to_string(n));

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int chunk = sextet(text[pos + k / 6]);
      if (chunk & (1 << (5 - static_cast<int>(k % 6)))) g.add_edge(u, v);
    }
  }
  // Padding bits must be zero.
  for (; k < need * 6; ++k) {
    if (sextet(text[pos + k / 6]) & (1 << (5 - static_cast<int>(k % 6)))) {
      throw DomainError("graph6: nonzero padding");
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

RootedGraph decode_rooted_graph6(std::string_view text) {
  const auto at = text.rfind('@');
  if (at == std::string_view::npos) throw DomainError("rooted graph6: missing '@<root>'");
  const auto root_text = text.substr(at + 1);
  int root = 0;
  const auto [ptr, ec] = std::from_chars(root_text.data(), root_text.data() + root_text.size(), root);
  if (ec != std::errc{} || ptr != root_text.data() + root_text.size()) {
    throw DomainError("rooted graph6: root must be an integer");
  }
  return {decode_graph6(text.substr(0, at)), root - 1};
}

std::string encode_rooted_graph6(const RootedGraph& g) {
  return encode_graph6(g.graph()) + "@" + std::to_string(g.root() + 1);
}

}  // namespace inpp
