#pragma once

// Fixtures and independent reference computations shared by the test suites.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tropjac/tropjac.hpp"

namespace tropjac::testing {

inline MetricGraph make_graph(std::vector<std::string> vertices,
                              std::vector<std::tuple<std::string, std::size_t, std::size_t, Rational>> edges,
                              std::size_t basepoint = 0) {
  MetricGraph g;
  g.vertices = std::move(vertices);
  for (auto& [id, s, t, len] : edges) g.edges.push_back({id, s, t, len});
  g.basepoint = basepoint;
  return g;
}

/// Two vertices q, w joined by e1, e2, e3, all oriented q -> w.
inline MetricGraph theta_graph(Rational a = 1, Rational b = 1, Rational c = 1) {
  return make_graph({"q", "w"}, {{"e1", 0, 1, a}, {"e2", 0, 1, b}, {"e3", 0, 1, c}});
}

inline MetricGraph circle_graph(Rational j = 1) { return make_graph({"v"}, {{"loop", 0, 0, j}}); }

inline MetricGraph dumbbell_graph() {
  return make_graph({"a", "b"}, {{"la", 0, 0, 2}, {"bridge", 0, 1, Rational(1, 3)}, {"lb", 1, 1, Rational(3, 2)}});
}

/// Parity of the permutation that sorts `seq` (bubble sort swap count).
inline int sort_sign(std::vector<std::size_t> seq) {
  int swaps = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = 0; j + 1 < seq.size() - i; ++j)
      if (seq[j] > seq[j + 1]) {
        std::swap(seq[j], seq[j + 1]);
        ++swaps;
      }
  return swaps % 2 ? -1 : 1;
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) { return a * 0x9E3779B97F4A7C15ull ^ (b + 0x632BE59BD9B4E019ull); }

inline BigradedClass random_homogeneous_class(std::mt19937_64& rng, Side side, std::size_t g, std::size_t p,
                                              std::size_t q, std::size_t terms) {
  const auto basis = basis_monomials(g, p, q);
  BigradedClass c(side, g);
  for (std::size_t t = 0; t < terms; ++t) {
    const auto& m = basis[rng() % basis.size()];
    c.add(m, BigInt(static_cast<long long>(rng() % 11) - 5));
  }
  return c;
}

inline Rational random_rational(std::mt19937_64& rng, long long max_abs_num, long long max_den) {
  const long long den = 1 + static_cast<long long>(rng() % max_den);
  const long long num = static_cast<long long>(rng() % (2 * max_abs_num * den + 1)) - max_abs_num * den;
  return Rational(num, den);
}

inline RatVector random_vector(std::mt19937_64& rng, std::size_t g, long long max_abs, long long max_den) {
  RatVector v(g);
  for (auto& x : v) x = random_rational(rng, max_abs, max_den);
  return v;
}

inline IntVector random_int_vector(std::mt19937_64& rng, std::size_t g, std::int64_t max_abs) {
  IntVector v(g);
  for (auto& x : v) x = static_cast<std::int64_t>(rng() % (2 * max_abs + 1)) - max_abs;
  return v;
}

}  // namespace tropjac::testing
