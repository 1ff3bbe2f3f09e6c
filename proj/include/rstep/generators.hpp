#pragma once

#include <cstdint>
#include <random>
#include <variant>

#include "rstep/graph.hpp"

namespace rstep {

struct Grid2d {
  std::size_t width = 1;
  std::size_t height = 1;
};

struct Grid3d {
  std::size_t x = 1;
  std::size_t y = 1;
  std::size_t z = 1;
};

/// Columns of d vertices, each column completely joined to the next, with a
/// start vertex joined to every vertex of the first column. A BFS from the
/// start has to scan Theta(d^2) edges before 3d vertices are settled.
struct Adversarial {
  std::size_t d = 2;
};

/// Connected random graph: a random spanning tree plus uniformly drawn extra
/// edges until m edges exist.
struct RandomConnected {
  std::size_t n = 1;
  std::size_t m = 0;
  std::uint64_t seed = 0;
};

struct Unweighted {};

struct UniformWeights {
  Weight lo = 1;
  Weight hi = 1;
  std::uint64_t seed = 0;
};

using GeneratorKind = std::variant<Grid2d, Grid3d, Adversarial, RandomConnected>;
using WeightMode = std::variant<Unweighted, UniformWeights>;

struct GeneratorSpec {
  GeneratorKind kind;
  WeightMode weights = Unweighted{};
};

struct GeneratedGraph {
  Graph graph;
  /// Designated start vertex (meaningful for Adversarial; 0 otherwise).
  Vertex start = 0;
};

/// Throws DomainError on invalid generator parameters.
void validate_spec(const GeneratorSpec& spec);

/// Deterministic in the spec, seeds included.
GeneratedGraph generate(const GeneratorSpec& spec);

/// Replaces every weight with a draw from [lo, hi], visiting edges in
/// (u, v) order. Labels are kept.
Graph with_uniform_weights(const Graph& g, const UniformWeights& mode);

/// Sets every weight to 1. Labels are kept.
Graph with_unit_weights(const Graph& g);

/// Uniform integer in [0, bound) with rejection; stable across standard
/// library implementations, unlike std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace rstep
