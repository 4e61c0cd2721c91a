#include "inpp/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "inpp/error.hpp"
#include "inpp/graph6.hpp"
#include "inpp/matrix_json.hpp"
#include "inpp/realize.hpp"

namespace inpp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  int x = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DomainError(std::string(what) + ": expected an integer, got \"" + std::string(s) + "\"");
  }
  return x;
}

std::optional<int> suffix_number(std::string_view s, std::string_view prefix) {
  if (s.size() <= prefix.size() || s.substr(0, prefix.size()) != prefix) return std::nullopt;
  for (char c : s.substr(prefix.size())) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  return parse_int(s.substr(prefix.size()), "family size");
}

/// Family literal without its root, or nothing.
std::optional<std::pair<Family, int>> family_literal(std::string_view name) {
  if (name == "paw") return std::pair{Family::paw, 4};
  if (name == "s211") return std::pair{Family::s211, 5};
  if (auto m = suffix_number(name, "k1"); m && *m >= 1) return std::pair{Family::star, *m + 1};
  if (name == "k1") return std::pair{Family::complete, 1};
  if (auto n = suffix_number(name, "k")) return std::pair{Family::complete, *n};
  if (auto n = suffix_number(name, "c")) return std::pair{Family::cycle, *n};
  if (auto n = suffix_number(name, "p")) return std::pair{Family::path, *n};
  return std::nullopt;
}

RootSpec root_spec(std::string_view text) {
  text = trim(text);
  if (text == "leaf") return RootSpec::leaf();
  if (text == "center") return RootSpec::center();
  if (text == "pendant") return RootSpec::pendant();
  return RootSpec::at(parse_int(text, "root") - 1);
}

RootedGraph parse_edge_list(std::string_view text) {
  std::optional<int> n;
  int root = 1;
  std::vector<Edge> edges;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const auto field = trim(text.substr(start, end - start));
    start = end + 1;
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) throw DomainError("graph literal: expected key=value, got \"" + std::string(field) + "\"");
    const auto key = trim(field.substr(0, eq));
    const auto value = trim(field.substr(eq + 1));
    if (key == "n") {
      n = parse_int(value, "n");
    } else if (key == "root") {
      root = parse_int(value, "root");
    } else if (key == "edges") {
      std::size_t s = 0;
      while (s < value.size()) {
        auto e = value.find(',', s);
        if (e == std::string_view::npos) e = value.size();
        const auto item = trim(value.substr(s, e - s));
        s = e + 1;
        if (item.empty()) continue;
        const auto dash = item.find('-');
        if (dash == std::string_view::npos) throw DomainError("graph literal: edge must look like 1-2");
        edges.push_back({parse_int(item.substr(0, dash), "edge") - 1, parse_int(item.substr(dash + 1), "edge") - 1});
      }
    } else {
      throw DomainError("graph literal: unknown key \"" + std::string(key) + "\"");
    }
  }
  if (!n) throw DomainError("graph literal: missing n");
  if (*n < 1 || *n > Graph::kMaxOrder) throw DomainError("graph literal: n out of range");
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= *n || e.v >= *n || e.u == e.v) throw DomainError("graph literal: bad edge");
  }
  if (root < 1 || root > *n) throw DomainError("graph literal: root out of range");
  return {Graph(*n, edges), root - 1};
}

}  // namespace

RootedGraph parse_rooted_graph(std::string_view text) {
  text = trim(text);
  if (text.find('=') != std::string_view::npos) return parse_edge_list(text);
  const auto at = text.rfind('@');
  if (at == std::string_view::npos) throw DomainError("graph: expected \"<graph6>@<root>\" or a family such as paw@1");
  const auto head = text.substr(0, at);
  if (auto fam = family_literal(head)) return build_family(fam->first, fam->second, root_spec(text.substr(at + 1)));
  const Graph g = decode_graph6(head);
  const int root = parse_int(text.substr(at + 1), "root");
  if (root < 1 || root > g.order()) throw DomainError("graph: root out of range");
  return {g, root - 1};
}

std::string emit_rooted_graph(const RootedGraph& g) { return encode_rooted_graph6(g); }

NullityPair parse_pair(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw DomainError("pair: expected k,l");
  const int k = parse_int(text.substr(0, comma), "pair");
  const int l = parse_int(text.substr(comma + 1), "pair");
  if (k < 0 || l < 0) throw DomainError("pair: entries must be nonnegative");
  return {k, l};
}

namespace {

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open matrix file " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("matrix file " + path + ": " + e.what());
  }
}

}  // namespace

RationalSymMatrix load_rational_matrix(const std::string& source) {
  if (source.rfind("cert:", 0) == 0) return certificate_matrix(source.substr(5)).matrix;
  return rational_matrix_from_json(read_json(source));
}

FloatSymMatrix load_float_matrix(const std::string& source) {
  if (source.rfind("cert:", 0) == 0) return FloatSymMatrix::from_rational(certificate_matrix(source.substr(5)).matrix);
  const auto j = read_json(source);
  try {
    return FloatSymMatrix::from_rational(rational_matrix_from_json(j));
  } catch (const DomainError&) {
    return float_matrix_from_json(j);
  }
}

nlohmann::json graph_to_json(const RootedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.graph().edges()) edges.push_back({e.u + 1, e.v + 1});
  return {{"graph6", emit_rooted_graph(g)}, {"n", g.order()}, {"root", g.root() + 1}, {"edges", std::move(edges)}};
}

}  // namespace inpp
