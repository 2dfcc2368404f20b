#pragma once

// Exhaustive reference computations used to cross-check the certified theta
// search. Nothing here shares code with theta.hpp beyond the data types: values are
// evaluated with 128-bit integers after clearing denominators, and the search box is
// either given explicitly or bounded by the ellipsoid containing all candidates.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tropjac/jacobian.hpp"
#include "tropjac/matrix.hpp"
#include "tropjac/rational.hpp"
#include "tropjac/theta.hpp"

namespace tropjac::brute_force {

struct ThetaOracle {
  Rational value;
  std::vector<IntVector> minimizers;
};

/// min over |n|_inf <= radius of n.v + 1/2 n^T E n with v = E G^{-1} x - l.
inline ThetaOracle theta_in_box(const AppellHumbertDatum& datum, const PeriodMatrix& G, const RatVector& x,
                                std::int64_t radius) {
  const std::size_t g = G.genus();
  const RatVector v = datum.form * (G.inverse() * x) - datum.linear;
  // 2D f(n) = n.(2D v) + n^T (D E) n with D the common denominator
  BigInt D = 1;
  auto absorb = [&D](const Rational& r) {
    D = D / boost::multiprecision::gcd(D, denominator(r)) * denominator(r);
  };
  for (std::size_t i = 0; i < g; ++i) {
    absorb(v[i]);
    for (std::size_t j = 0; j < g; ++j) absorb(datum.form(i, j));
  }
  // keep every partial sum of n^T Q n + n.l inside 127 bits
  const BigInt reach = BigInt(static_cast<long long>(g + 1)) * (radius + 1);
  const BigInt limit = std::min(BigInt(1) << 62, (BigInt(1) << 120) / (reach * reach));
  std::vector<__int128> lin(g);
  std::vector<__int128> quad(g * g);
  for (std::size_t i = 0; i < g; ++i) {
    const BigInt a = numerator(v[i] * Rational(2 * D));
    if (abs(a) > limit) throw Error(ErrorCode::InvalidInput, "oracle coefficients too large");
    lin[i] = static_cast<__int128>(static_cast<long long>(a));
    for (std::size_t j = 0; j < g; ++j) {
      const BigInt q = numerator(datum.form(i, j) * Rational(D));
      if (abs(q) > limit) throw Error(ErrorCode::InvalidInput, "oracle coefficients too large");
      quad[i * g + j] = static_cast<__int128>(static_cast<long long>(q));
    }
  }

  std::optional<__int128> best;
  std::vector<IntVector> at;
  IntVector n(g, -radius);
  while (true) {
    __int128 s = 0;
    for (std::size_t i = 0; i < g; ++i) {
      __int128 row = lin[i];
      for (std::size_t j = 0; j < g; ++j) row += quad[i * g + j] * n[j];
      s += row * n[i];
    }
    if (!best || s < *best) {
      best = s;
      at.assign(1, n);
    } else if (s == *best) {
      at.push_back(n);
    }
    std::size_t i = 0;
    while (i < g && n[i] == radius) n[i++] = -radius;
    if (i == g) break;
    ++n[i];
  }
  // back to a rational: best / (2D)
  const bool negative = *best < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(*best) : static_cast<unsigned __int128>(*best);
  BigInt big = static_cast<std::uint64_t>(mag >> 64);
  big <<= 64;
  big += static_cast<std::uint64_t>(mag);
  if (negative) big = -big;
  std::sort(at.begin(), at.end());
  return {Rational(big, 2 * D), std::move(at)};
}

/// Smallest box radius that provably contains every minimizer: all minimizers n lie in
/// the ellipsoid (n - z)^T E (n - z) <= (0 - z)^T E (0 - z) around z = -E^{-1} v, whose
/// coordinate extents are |n_i - z_i|^2 <= z^T E z * (E^{-1})_ii.
inline std::int64_t containing_radius(const AppellHumbertDatum& datum, const PeriodMatrix& G, const RatVector& x) {
  const std::size_t g = G.genus();
  const RatMatrix E_inv = *inverse(datum.form);
  const RatVector v = datum.form * (G.inverse() * x) - datum.linear;
  RatVector z = E_inv * v;
  for (auto& zi : z) zi = -zi;
  const Rational budget = dot(z, datum.form * z);
  std::int64_t radius = 0;
  for (std::size_t i = 0; i < g; ++i) {
    const Rational extent_sq = budget * E_inv(i, i);
    // smallest integer r with r >= |z_i| + sqrt(extent_sq)
    std::int64_t s = 0;
    while (Rational(s * s) < extent_sq) ++s;
    const BigInt reach = floor(abs(z[i])) + 1 + s;
    radius = std::max(radius, static_cast<std::int64_t>(reach));
  }
  return radius;
}

}  // namespace tropjac::brute_force
