#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "tropjac/graph.hpp"
#include "tropjac/rational.hpp"

namespace tropjac {

struct RandomGraphOptions {
  std::size_t min_genus = 1;
  std::size_t max_genus = 6;
  std::size_t max_vertices = 5;
  std::int64_t max_numerator = 9;
  std::int64_t max_denominator = 4;
  bool pendant_trees = true;  // occasionally hang a leaf path to exercise pruning
};

/// Seeded random multigraph with loops and parallel edges, conditioned on being
/// connected. Draws use raw mt19937_64 output so graphs are identical on every
/// platform for a given seed.
inline MetricGraph random_metric_graph(std::uint64_t seed, const RandomGraphOptions& opt = {}) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };
  auto length = [&]() {
    return Rational(static_cast<long long>(uniform(1, opt.max_numerator)),
                    static_cast<long long>(uniform(1, opt.max_denominator)));
  };

  while (true) {
    const std::size_t n = uniform(1, opt.max_vertices);
    const std::size_t g = uniform(opt.min_genus, opt.max_genus);
    MetricGraph graph;
    for (std::size_t v = 0; v < n; ++v) graph.vertices.push_back("v" + std::to_string(v));
    const std::size_t m = n - 1 + g;
    for (std::size_t e = 0; e < m; ++e)
      graph.edges.push_back({"e" + std::to_string(e + 1), uniform(0, n - 1), uniform(0, n - 1), length()});
    if (detail::component_count(n, graph.edges) != 1) continue;
    if (opt.pendant_trees && uniform(0, 3) == 0) {
      std::size_t anchor = uniform(0, n - 1);
      const std::size_t extra = uniform(1, 2);
      for (std::size_t k = 0; k < extra; ++k) {
        graph.vertices.push_back("p" + std::to_string(k));
        const std::size_t leaf = graph.vertices.size() - 1;
        graph.edges.push_back({"t" + std::to_string(k + 1), anchor, leaf, length()});
        anchor = leaf;
      }
    }
    graph.basepoint = 0;
    return graph;
  }
}

}  // namespace tropjac
