#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "rstep/graph.hpp"

namespace rstep {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_int(std::string_view tok, T& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::unordered_map<std::uint64_t, Vertex> compact;
  std::vector<std::uint64_t> labels;
  std::vector<WeightedEdge> edges;
  auto intern = [&](std::uint64_t id) {
    auto [it, inserted] = compact.emplace(id, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(id);
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != 2 && toks.size() != 3) {
      throw ParseError(lineno, "expected \"u v\" or \"u v w\", got " +
                                   std::to_string(toks.size()) + " tokens");
    }
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!parse_int(toks[0], u)) throw ParseError(lineno, "bad vertex id '" + std::string(toks[0]) + "'");
    if (!parse_int(toks[1], v)) throw ParseError(lineno, "bad vertex id '" + std::string(toks[1]) + "'");
    std::int64_t w = 1;
    if (toks.size() == 3) {
      if (!parse_int(toks[2], w)) throw ParseError(lineno, "bad weight '" + std::string(toks[2]) + "'");
      if (w <= 0) {
        throw DomainError("line " + std::to_string(lineno) + ": weight must be positive, got " +
                          std::to_string(w));
      }
    }
    Vertex a = intern(u);
    Vertex b = intern(v);
    edges.push_back({a, b, static_cast<Weight>(w)});
  }
  if (labels.empty()) throw DomainError("edge list contains no vertices");
  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const auto& e : g.labelled_edges()) {
    out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
  }
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  write_edge_list(g, out);
  if (!out) throw DomainError("write failed: " + path);
}

}  // namespace rstep
