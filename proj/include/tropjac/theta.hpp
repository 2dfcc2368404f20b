#pragma once

// Appell-Humbert data (E, l), their factors of automorphy, translations, and the
// tropical Riemann theta function
//
//   phi(x) = min over n in Z^g of  E(n, x) + 1/2 E(n, n) - l(n)
//
// Lattice vectors are given by circuit coordinates n, points x by delta-coordinates,
// so E(n, x) = n^T E G^{-1} x and, for E = G, simply n . x.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "tropjac/error.hpp"
#include "tropjac/jacobian.hpp"
#include "tropjac/matrix.hpp"
#include "tropjac/rational.hpp"

namespace tropjac {

struct AppellHumbertDatum {
  RatMatrix form;    // E in circuit coordinates: E(n, n') = n^T form n'
  RatVector linear;  // l(n) = linear . n

  friend bool operator==(const AppellHumbertDatum&, const AppellHumbertDatum&) = default;
};

inline AppellHumbertDatum principal_datum(const PeriodMatrix& G) {
  return {G.gram(), RatVector(G.genus(), Rational(0))};
}

struct ThetaValue {
  Rational value;
  std::vector<IntVector> minimizers;  // lexicographically sorted
  IntVector center;                   // box centre of the certified search
  std::int64_t certified_radius = 0;  // every minimizer n has |n - center|_inf <= radius
};

namespace detail {

inline void check_datum_shape(const AppellHumbertDatum& datum, const PeriodMatrix& G) {
  const std::size_t g = G.genus();
  if (datum.form.rows() != g || datum.form.cols() != g || datum.linear.size() != g)
    throw Error(ErrorCode::InvalidInput, "Appell-Humbert datum has the wrong dimension");
}

inline void check_dim(const RatVector& x, std::size_t g, const char* what) {
  if (x.size() != g) throw Error(ErrorCode::InvalidInput, std::string(what) + " has the wrong dimension");
}

// E(n, x) as a linear form in n: E G^{-1} x.
inline RatVector pairing_with(const AppellHumbertDatum& datum, const PeriodMatrix& G, const RatVector& x) {
  return datum.form * (G.inverse() * x);
}

inline Rational quadratic(const RatMatrix& E, const RatVector& n) { return dot(n, E * n); }

inline std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorCode::InvalidInput, "lattice coordinate does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

// h(m) = m . w + 1/2 m^T E m, evaluated exactly after clearing denominators:
// scale * h(m) = m . lin + m^T quad m.
class ScaledQuadratic {
 public:
  ScaledQuadratic(const RatMatrix& E, const RatVector& w) : g_(w.size()) {
    BigInt lcm = 1;
    auto absorb = [&lcm](const Rational& r) {
      const BigInt den = denominator(r);
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    };
    for (std::size_t i = 0; i < g_; ++i) {
      absorb(w[i]);
      for (std::size_t j = 0; j < g_; ++j) absorb(E(i, j));
    }
    scale_ = 2 * lcm;
    lin_.resize(g_);
    quad_ = Matrix<BigInt>(g_, g_);
    for (std::size_t i = 0; i < g_; ++i) {
      lin_[i] = numerator(w[i] * Rational(scale_));
      for (std::size_t j = 0; j < g_; ++j) quad_(i, j) = numerator(E(i, j) * Rational(lcm));
    }
  }

  const BigInt& scale() const noexcept { return scale_; }

  BigInt scaled_value(const IntVector& m) const {
    BigInt s = 0;
    for (std::size_t i = 0; i < g_; ++i) {
      if (m[i] == 0) continue;
      BigInt row = lin_[i];
      row += quad_(i, i) * m[i];
      BigInt off = 0;
      for (std::size_t j = i + 1; j < g_; ++j)
        if (m[j] != 0) off += quad_(i, j) * m[j];
      row += 2 * off;
      s += row * m[i];
    }
    return s;
  }

 private:
  std::size_t g_;
  BigInt scale_;
  std::vector<BigInt> lin_;
  Matrix<BigInt> quad_;
};

// Calls visit(m) for every m in [-R, R]^g.
template <typename Visit>
void for_each_in_box(std::size_t g, std::int64_t R, Visit&& visit) {
  IntVector m(g, -R);
  while (true) {
    visit(m);
    std::size_t i = 0;
    while (i < g && m[i] == R) m[i++] = -R;
    if (i == g) break;
    ++m[i];
  }
}

// Rational lower bound 1 / (g * max |A^{-1}_ij|) for the smallest eigenvalue of A.
inline Rational eigenvalue_lower_bound(const RatMatrix& inverse) {
  Rational biggest = 0;
  for (std::size_t i = 0; i < inverse.rows(); ++i)
    for (std::size_t j = 0; j < inverse.cols(); ++j) biggest = std::max(biggest, Rational(abs(inverse(i, j))));
  return Rational(1) / (Rational(static_cast<long long>(inverse.rows())) * biggest);
}

}  // namespace detail

/// E symmetric with E(lattice x N) integral, i.e. E G^{-1} has integer entries.
inline void validate_datum(const AppellHumbertDatum& datum, const PeriodMatrix& G) {
  detail::check_datum_shape(datum, G);
  if (!datum.form.is_symmetric()) throw Error(ErrorCode::InvalidInput, "form E is not symmetric");
  const RatMatrix pairing = datum.form * G.inverse();
  for (std::size_t i = 0; i < pairing.rows(); ++i)
    for (std::size_t j = 0; j < pairing.cols(); ++j)
      if (!is_integer(pairing(i, j)))
        throw Error(ErrorCode::NonIntegralForm, "E is not integral on lattice x N");
}

/// a_{E,l}(n, x) = l(n) - E(n, x) - 1/2 E(n, n).
inline Rational factor_of_automorphy(const AppellHumbertDatum& datum, const PeriodMatrix& G,
                                     const IntVector& n, const RatVector& x) {
  detail::check_datum_shape(datum, G);
  detail::check_dim(x, G.genus(), "point");
  detail::check_dim(to_rational(n), G.genus(), "lattice vector");
  const RatVector nr = to_rational(n);
  return dot(datum.linear, nr) - dot(nr, detail::pairing_with(datum, G, x)) -
         detail::quadratic(datum.form, nr) / 2;
}

/// L(E, l) ~ L(E', l') iff E = E' and (l - l') takes integer values on N.
inline bool bundles_isomorphic(const AppellHumbertDatum& a, const AppellHumbertDatum& b,
                               const PeriodMatrix& G) {
  detail::check_datum_shape(a, G);
  detail::check_datum_shape(b, G);
  if (!(a.form == b.form)) return false;
  // delta_k has circuit coordinates G^{-1} e_k.
  for (const auto& v : G.inverse() * (a.linear - b.linear))
    if (!is_integer(v)) return false;
  return true;
}

/// Pull-back along translation by y: (E, l) -> (E, l - E(-, y)).
inline AppellHumbertDatum translate_pullback(const AppellHumbertDatum& datum, const PeriodMatrix& G,
                                             const RatVector& y) {
  detail::check_datum_shape(datum, G);
  detail::check_dim(y, G.genus(), "translation");
  return {datum.form, datum.linear - detail::pairing_with(datum, G, y)};
}

/// Exact value of phi at the lift x with all minimizing lattice vectors.
///
/// With z = -E^{-1} v the real minimizer, c = round(z) and u = z - c, every lattice
/// vector c + m with f(c + m) <= f(c) satisfies (m - u)^T E (m - u) <= u^T E u, hence
/// (m_i - u_i)^2 <= u^T E u (E^{-1})_ii. That box is scanned exhaustively.
inline ThetaValue theta_value(const AppellHumbertDatum& datum, const PeriodMatrix& G, const RatVector& x) {
  detail::check_datum_shape(datum, G);
  detail::check_dim(x, G.genus(), "point");
  if (!is_positive_definite(datum.form))
    throw Error(ErrorCode::NotPositiveDefinite, "theta function needs a positive definite form");
  const std::size_t g = G.genus();
  const RatMatrix& E = datum.form;
  const RatMatrix E_inv = *inverse(E);

  // f(n) = n . v + 1/2 n^T E n
  const RatVector v = detail::pairing_with(datum, G, x) - datum.linear;
  RatVector u = E_inv * v;
  IntVector center(g);
  for (std::size_t i = 0; i < g; ++i) {
    u[i] = -u[i];
    center[i] = detail::to_int64(round_nearest(u[i]));
    u[i] -= center[i];
  }
  const RatVector c = to_rational(center);
  const Rational f_center = dot(c, v) + detail::quadratic(E, c) / 2;
  const RatVector w = v + E * c;  // f(c + m) = f(c) + m . w + 1/2 m^T E m

  const Rational budget = detail::quadratic(E, u);
  IntVector lo(g), hi(g);
  std::int64_t radius = 0;
  for (std::size_t i = 0; i < g; ++i) {
    const Rational reach = budget * E_inv(i, i);
    auto inside = [&](std::int64_t m) {
      const Rational d = Rational(m) - u[i];
      return d * d <= reach;
    };
    lo[i] = hi[i] = 0;
    while (inside(lo[i] - 1)) --lo[i];
    while (inside(hi[i] + 1)) ++hi[i];
    radius = std::max({radius, -lo[i], hi[i]});
  }

  const detail::ScaledQuadratic h(E, w);
  BigInt best = 0;  // scaled h(0)
  std::vector<IntVector> best_at;
  IntVector m = lo;
  while (true) {
    const BigInt val = h.scaled_value(m);
    if (best_at.empty() || val < best) {
      best = val;
      best_at.assign(1, m);
    } else if (val == best) {
      best_at.push_back(m);
    }
    std::size_t i = 0;
    while (i < g && m[i] == hi[i]) {
      m[i] = lo[i];
      ++i;
    }
    if (i == g) break;
    ++m[i];
  }

  ThetaValue out;
  out.value = f_center + Rational(best, h.scale());
  out.center = center;
  out.certified_radius = radius;
  for (auto& n : best_at) {
    for (std::size_t i = 0; i < g; ++i) n[i] += center[i];
    out.minimizers.push_back(std::move(n));
  }
  std::sort(out.minimizers.begin(), out.minimizers.end());
  return out;
}

/// x lies on the theta divisor iff phi is not affine near x: the minimum is attained twice.
inline bool on_theta_divisor(const AppellHumbertDatum& datum, const PeriodMatrix& G, const RatVector& x) {
  return theta_value(datum, G, x).minimizers.size() >= 2;
}

inline constexpr std::size_t kMaxRelevantGenus = 6;

/// Voronoi-relevant vectors of the lattice Z^g with the form G: nonzero n such that
/// +-n are the only shortest vectors of the coset n + 2 Z^g.
inline std::vector<IntVector> voronoi_relevant_vectors(const PeriodMatrix& G) {
  const std::size_t g = G.genus();
  if (g > kMaxRelevantGenus)
    throw Error(ErrorCode::GenusTooLarge, "relevant vectors are limited to genus <= 6");
  std::vector<IntVector> out;
  if (g == 0) return out;
  const detail::ScaledQuadratic norm(G.gram(), RatVector(g, Rational(0)));  // scale * 1/2 n^T G n
  const Rational lambda = detail::eigenvalue_lower_bound(G.inverse());

  // The parity vector itself bounds each coset's minimum from above.
  const std::uint32_t classes = 1u << g;
  BigInt worst = 0;
  for (std::uint32_t p = 1; p < classes; ++p) {
    IntVector rep(g);
    for (std::size_t i = 0; i < g; ++i) rep[i] = (p >> i) & 1u;
    worst = std::max(worst, norm.scaled_value(rep));
  }
  // outside |n|_inf <= R: 1/2 n^T G n >= lambda/2 (R+1)^2 > worst
  std::int64_t R = 1;
  while (lambda * Rational((R + 1) * (R + 1)) / 2 <= Rational(worst, norm.scale())) ++R;

  std::vector<BigInt> best(classes);
  std::vector<std::vector<IntVector>> best_at(classes);
  detail::for_each_in_box(g, R, [&](const IntVector& m) {
    std::uint32_t p = 0;
    for (std::size_t i = 0; i < g; ++i)
      if (m[i] % 2 != 0) p |= 1u << i;
    if (p == 0) return;
    const BigInt val = norm.scaled_value(m);
    if (best_at[p].empty() || val < best[p]) {
      best[p] = val;
      best_at[p].assign(1, m);
    } else if (val == best[p]) {
      best_at[p].push_back(m);
    }
  });
  for (std::uint32_t p = 1; p < classes; ++p)
    if (best_at[p].size() == 2) out.insert(out.end(), best_at[p].begin(), best_at[p].end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tropjac
