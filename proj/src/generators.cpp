#include "rstep/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace rstep {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<WeightedEdge> grid2d_edges(const Grid2d& s) {
  std::vector<WeightedEdge> out;
  auto id = [&](std::size_t x, std::size_t y) { return static_cast<Vertex>(y * s.width + x); };
  for (std::size_t y = 0; y < s.height; ++y) {
    for (std::size_t x = 0; x < s.width; ++x) {
      if (x + 1 < s.width) out.push_back({id(x, y), id(x + 1, y), 1});
      if (y + 1 < s.height) out.push_back({id(x, y), id(x, y + 1), 1});
    }
  }
  return out;
}

std::vector<WeightedEdge> grid3d_edges(const Grid3d& s) {
  std::vector<WeightedEdge> out;
  auto id = [&](std::size_t x, std::size_t y, std::size_t z) {
    return static_cast<Vertex>((z * s.y + y) * s.x + x);
  };
  for (std::size_t z = 0; z < s.z; ++z) {
    for (std::size_t y = 0; y < s.y; ++y) {
      for (std::size_t x = 0; x < s.x; ++x) {
        if (x + 1 < s.x) out.push_back({id(x, y, z), id(x + 1, y, z), 1});
        if (y + 1 < s.y) out.push_back({id(x, y, z), id(x, y + 1, z), 1});
        if (z + 1 < s.z) out.push_back({id(x, y, z), id(x, y, z + 1), 1});
      }
    }
  }
  return out;
}

std::vector<WeightedEdge> adversarial_edges(const Adversarial& s) {
  const std::size_t d = s.d;
  auto col = [&](std::size_t c, std::size_t j) { return static_cast<Vertex>(1 + c * d + j); };
  std::vector<WeightedEdge> out;
  for (std::size_t j = 0; j < d; ++j) out.push_back({0, col(0, j), 1});
  for (std::size_t c = 0; c + 1 < d; ++c) {
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) out.push_back({col(c, a), col(c + 1, b), 1});
    }
  }
  return out;
}

std::vector<WeightedEdge> random_edges(const RandomConnected& s) {
  std::mt19937_64 rng(s.seed);
  std::vector<Vertex> perm(s.n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = s.n; i > 1; --i) {
    std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  }
  std::set<std::pair<Vertex, Vertex>> present;
  std::vector<WeightedEdge> out;
  auto add = [&](Vertex a, Vertex b) {
    auto key = std::minmax(a, b);
    if (a == b || !present.insert(key).second) return false;
    out.push_back({key.first, key.second, 1});
    return true;
  };
  for (std::size_t i = 1; i < s.n; ++i) {
    add(perm[i], perm[uniform_below(rng, i)]);
  }
  while (out.size() < s.m) {
    auto a = static_cast<Vertex>(uniform_below(rng, s.n));
    auto b = static_cast<Vertex>(uniform_below(rng, s.n));
    add(a, b);
  }
  return out;
}

std::size_t vertex_count_of(const GeneratorKind& kind) {
  return std::visit(overloaded{
                        [](const Grid2d& s) { return s.width * s.height; },
                        [](const Grid3d& s) { return s.x * s.y * s.z; },
                        [](const Adversarial& s) { return 1 + s.d * s.d; },
                        [](const RandomConnected& s) { return s.n; },
                    },
                    kind);
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // rejection keeps the draw unbiased
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

void validate_spec(const GeneratorSpec& spec) {
  std::visit(overloaded{
                 [](const Grid2d& s) {
                   if (s.width < 1 || s.height < 1) throw DomainError("grid2d dimensions must be >= 1");
                 },
                 [](const Grid3d& s) {
                   if (s.x < 1 || s.y < 1 || s.z < 1) throw DomainError("grid3d dimensions must be >= 1");
                 },
                 [](const Adversarial& s) {
                   if (s.d < 2) throw DomainError("adversarial construction needs d >= 2");
                 },
                 [](const RandomConnected& s) {
                   if (s.n < 1) throw DomainError("random graph needs n >= 1");
                   if (s.m + 1 < s.n) throw DomainError("random connected graph needs m >= n - 1");
                   if (s.m > s.n * (s.n - 1) / 2) throw DomainError("random graph m exceeds n(n-1)/2");
                 },
             },
             spec.kind);
  if (const auto* w = std::get_if<UniformWeights>(&spec.weights)) {
    if (w->lo < 1 || w->hi < w->lo) throw DomainError("weights need 1 <= lo <= hi");
  }
  if (vertex_count_of(spec.kind) > std::numeric_limits<Vertex>::max()) {
    throw DomainError("generator would exceed 32-bit vertex ids");
  }
}

GeneratedGraph generate(const GeneratorSpec& spec) {
  validate_spec(spec);
  auto edges = std::visit(overloaded{
                              [](const Grid2d& s) { return grid2d_edges(s); },
                              [](const Grid3d& s) { return grid3d_edges(s); },
                              [](const Adversarial& s) { return adversarial_edges(s); },
                              [](const RandomConnected& s) { return random_edges(s); },
                          },
                          spec.kind);
  GeneratedGraph out{Graph::from_edges(vertex_count_of(spec.kind), edges), 0};
  if (const auto* w = std::get_if<UniformWeights>(&spec.weights)) {
    out.graph = with_uniform_weights(out.graph, *w);
  }
  out.graph.validate();
  return out;
}

Graph with_uniform_weights(const Graph& g, const UniformWeights& mode) {
  if (mode.lo < 1 || mode.hi < mode.lo) throw DomainError("weights need 1 <= lo <= hi");
  std::mt19937_64 rng(mode.seed);
  auto edges = g.edges();
  const std::uint64_t span = mode.hi - mode.lo + 1;
  for (auto& e : edges) e.weight = mode.lo + uniform_below(rng, span);
  std::vector<std::uint64_t> labels(g.labels().begin(), g.labels().end());
  return Graph::from_edges(g.vertex_count(), edges, std::move(labels));
}

Graph with_unit_weights(const Graph& g) {
  auto edges = g.edges();
  for (auto& e : edges) e.weight = 1;
  std::vector<std::uint64_t> labels(g.labels().begin(), g.labels().end());
  return Graph::from_edges(g.vertex_count(), edges, std::move(labels));
}

}  // namespace rstep
