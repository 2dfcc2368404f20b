#pragma once

// Period lattice, Abel-Jacobi map and the parallelotope cells of W_d.
//
// Torus points are written in the basis delta_1..delta_g dual to the fundamental
// circuits under the edge-length pairing Q. In these coordinates the lattice
// H_1(G; Z) is spanned by the columns of the Gram matrix G[i][j] = Q(c_i, c_j).

#include <cstddef>
#include <vector>

#include "tropjac/error.hpp"
#include "tropjac/graph.hpp"
#include "tropjac/matrix.hpp"
#include "tropjac/rational.hpp"

namespace tropjac {

class PeriodMatrix {
 public:
  explicit PeriodMatrix(RatMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw Error(ErrorCode::InvalidInput, "period matrix must be square");
    if (!is_positive_definite(gram_))
      throw Error(ErrorCode::NotPositiveDefinite, "period matrix is not positive definite");
    inverse_ = *tropjac::inverse(gram_);
  }

  std::size_t genus() const noexcept { return gram_.rows(); }
  const RatMatrix& gram() const noexcept { return gram_; }
  const RatMatrix& inverse() const noexcept { return inverse_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return gram_(i, j); }

  /// delta-coordinates of the lattice vector with circuit coordinates n.
  RatVector lattice_vector(const IntVector& n) const { return gram_ * to_rational(n); }

  friend bool operator==(const PeriodMatrix& a, const PeriodMatrix& b) { return a.gram_ == b.gram_; }

 private:
  RatMatrix gram_;
  RatMatrix inverse_;
};

/// A point of R^g / lattice, stored as its canonical lift: G^{-1} x in [0,1)^g.
struct TorusPoint {
  RatVector coords;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};

struct CurvePoint {
  std::size_t edge = 0;
  Rational t;  // distance from the source vertex
};

struct WdCell {
  std::vector<std::size_t> edges;
  TorusPoint base;
  std::vector<RatVector> generators;
  int weight = 1;
};

inline TorusPoint reduce(const PeriodMatrix& G, const RatVector& lift) {
  if (lift.size() != G.genus()) throw Error(ErrorCode::InvalidInput, "point has wrong dimension");
  RatVector circuit_coords = G.inverse() * lift;
  for (auto& c : circuit_coords) c -= Rational(floor(c));
  return TorusPoint{G.gram() * circuit_coords};
}

/// True iff a - b lies in the lattice.
inline bool same_torus_point(const PeriodMatrix& G, const RatVector& a, const RatVector& b) {
  for (const auto& c : G.inverse() * (a - b))
    if (!is_integer(c)) return false;
  return true;
}

/// G[i][j] = sum over edges of length(e) * c_i(e) * c_j(e).
inline PeriodMatrix period_matrix(const MetricGraph& g, const CircuitBasis& basis) {
  const std::size_t gen = basis.genus();
  RatMatrix gram(gen, gen);
  for (std::size_t i = 0; i < gen; ++i)
    for (std::size_t j = i; j < gen; ++j) {
      Rational s = 0;
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const int w = basis.circuits[i][e] * basis.circuits[j][e];
        if (w != 0) s += g.edges[e].length * w;
      }
      gram(i, j) = s;
      gram(j, i) = s;
    }
  return PeriodMatrix(std::move(gram));
}

/// Velocity of the Abel-Jacobi map along the oriented edge, per unit length.
inline IntVector edge_direction(const CircuitBasis& basis, std::size_t edge) {
  IntVector dir(basis.genus());
  for (std::size_t k = 0; k < basis.genus(); ++k) {
    if (edge >= basis.circuits[k].size()) throw Error(ErrorCode::InvalidInput, "edge out of range");
    dir[k] = basis.circuits[k][edge];
  }
  return dir;
}

/// Unreduced lifts of every vertex, integrating along tree paths from the basepoint.
inline std::vector<RatVector> vertex_lifts(const MetricGraph& g, const CircuitBasis& basis) {
  const std::size_t gen = basis.genus();
  std::vector<RatVector> lift(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::vector<std::size_t>> incident(g.vertex_count());
  for (std::size_t e : basis.tree_edges) {
    incident[g.edges[e].src].push_back(e);
    incident[g.edges[e].dst].push_back(e);
  }
  std::vector<std::size_t> stack{g.basepoint};
  lift[g.basepoint] = RatVector(gen, Rational(0));
  seen[g.basepoint] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : incident[v]) {
      const auto& edge = g.edges[e];
      const std::size_t w = edge.src == v ? edge.dst : edge.src;
      if (seen[w]) continue;
      const Rational step = edge.src == v ? edge.length : Rational(-edge.length);
      lift[w] = lift[v] + step * to_rational(edge_direction(basis, e));
      seen[w] = true;
      stack.push_back(w);
    }
  }
  return lift;
}

inline RatVector abel_jacobi_lift(const MetricGraph& g, const CircuitBasis& basis, const CurvePoint& p) {
  if (p.edge >= g.edge_count()) throw Error(ErrorCode::InvalidInput, "curve point on unknown edge");
  const auto& edge = g.edges[p.edge];
  if (p.t < 0 || p.t > edge.length)
    throw Error(ErrorCode::InvalidInput, "curve point parameter outside [0, length]");
  const auto lifts = vertex_lifts(g, basis);
  return lifts[edge.src] + p.t * to_rational(edge_direction(basis, p.edge));
}

inline TorusPoint abel_jacobi(const MetricGraph& g, const CircuitBasis& basis, const PeriodMatrix& G,
                              const CurvePoint& p) {
  return reduce(G, abel_jacobi_lift(g, basis, p));
}

inline TorusPoint abel_jacobi_vertex(const MetricGraph& g, const CircuitBasis& basis,
                                     const PeriodMatrix& G, std::size_t vertex) {
  if (vertex >= g.vertex_count()) throw Error(ErrorCode::InvalidInput, "unknown vertex");
  return reduce(G, vertex_lifts(g, basis)[vertex]);
}

/// Image of the effective divisor p_1 + ... + p_d: the sum of the point images.
inline TorusPoint abel_jacobi_divisor(const MetricGraph& g, const CircuitBasis& basis,
                                      const PeriodMatrix& G, const std::vector<CurvePoint>& points) {
  RatVector sum(basis.genus(), Rational(0));
  for (const auto& p : points) sum = sum + abel_jacobi_lift(g, basis, p);
  return reduce(G, sum);
}

/// One parallelotope per d-subset S of edges with connected complement: based at
/// the image of the sum of the source vertices, spanned by length(f) * direction(f).
inline std::vector<WdCell> wd_cells(const MetricGraph& g, const CircuitBasis& basis,
                                    const PeriodMatrix& G, std::size_t d) {
  const auto subsets = wd_cell_subsets(g, d);
  const auto lifts = vertex_lifts(g, basis);
  std::vector<WdCell> cells;
  cells.reserve(subsets.size());
  for (const auto& subset : subsets) {
    WdCell cell;
    cell.edges = subset;
    RatVector base(basis.genus(), Rational(0));
    for (std::size_t f : subset) {
      base = base + lifts[g.edges[f].src];
      cell.generators.push_back(g.edges[f].length * to_rational(edge_direction(basis, f)));
    }
    cell.base = reduce(G, base);
    cells.push_back(std::move(cell));
  }
  return cells;
}

/// Lift of walking the closed circuit c_k once from src(e_k): along e_k, then back
/// through the tree. Equals column k of G.
inline RatVector circuit_displacement(const MetricGraph& g, const CircuitBasis& basis, std::size_t k) {
  const std::size_t e = basis.cotree_edges.at(k);
  const auto& edge = g.edges[e];
  const auto lifts = vertex_lifts(g, basis);
  return edge.length * to_rational(edge_direction(basis, e)) + (lifts[edge.src] - lifts[edge.dst]);
}

}  // namespace tropjac
