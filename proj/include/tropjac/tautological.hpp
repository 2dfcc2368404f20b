#pragma once

// Closed-form classes of W_d and of powers of the theta divisor, and the exact
// checks of the Poincare formula and its degree corollaries.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tropjac/error.hpp"
#include "tropjac/homology.hpp"
#include "tropjac/rational.hpp"

namespace tropjac {

inline BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

inline BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt b = 1;
  for (std::size_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

namespace detail {

inline void require_range(std::size_t value, std::size_t g, ErrorCode code, const char* name) {
  if (value > g)
    throw Error(code, std::string(name) + " = " + std::to_string(value) + " exceeds genus " +
                          std::to_string(g));
}

}  // namespace detail

/// sum_k c_k (x) delta_k.
inline BigradedClass class_w1(std::size_t g) {
  BigradedClass out(Side::homology, g);
  for (std::size_t k = 0; k < g; ++k) {
    const IndexMask bit = IndexMask{1} << k;
    out.add(Monomial{bit, bit}, 1);
  }
  return out;
}

/// sum over |I| = d of c_I (x) delta_I.
inline BigradedClass class_wd(std::size_t g, std::size_t d) {
  detail::require_range(d, g, ErrorCode::DOutOfRange, "d");
  BigradedClass out(Side::homology, g);
  const std::uint64_t limit = std::uint64_t{1} << g;
  for (std::uint64_t m = 0; m < limit; ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == d)
      out.add(Monomial{static_cast<IndexMask>(m), static_cast<IndexMask>(m)}, 1);
  return out;
}

/// d-fold Pontryagin power of class_w1 (d = 0 gives the point class).
inline BigradedClass pontryagin_power_w1(std::size_t g, std::size_t d) {
  detail::require_range(d, g, ErrorCode::DOutOfRange, "d");
  const BigradedClass w1 = class_w1(g);
  BigradedClass power = point_class(g);
  for (std::size_t i = 0; i < d; ++i) power = pontryagin(power, w1);
  return power;
}

/// c_1(L(Theta)) = sum_i c*_i (x) delta*_i.
inline BigradedClass chern_theta(std::size_t g) {
  BigradedClass out(Side::cohomology, g);
  for (std::size_t k = 0; k < g; ++k) {
    const IndexMask bit = IndexMask{1} << k;
    out.add(Monomial{bit, bit}, 1);
  }
  return out;
}

/// Homology class of [Theta]^k: (c_1(L(Theta)))^k cap [Jac].
inline BigradedClass class_theta_power(std::size_t g, std::size_t k) {
  detail::require_range(k, g, ErrorCode::KOutOfRange, "k");
  const BigradedClass theta = chern_theta(g);
  BigradedClass power = BigradedClass::monomial(Side::cohomology, g, 0, 0);
  for (std::size_t i = 0; i < k; ++i) power = cup(power, theta);
  return cap(power, fundamental_class(g));
}

struct PoincareRecord {
  std::size_t d = 0;
  BigradedClass class_wd{Side::homology, 0};
  BigradedClass class_theta_power{Side::homology, 0};
  BigInt factor;        // (g-d)!
  bool equal = false;   // (g-d)! [W_d] == [Theta]^{g-d}
  bool pontryagin_equal = false;  // [W_1]^{*d} == d! [W_d]
};

struct DegreeCheck {
  std::string name;
  std::size_t d = 0;
  BigInt expected;
  BigInt computed;

  bool passed() const { return expected == computed; }
};

struct VerificationReport {
  std::size_t genus = 0;
  std::vector<PoincareRecord> records;
  std::vector<DegreeCheck> degrees;

  bool all_passed() const {
    for (const auto& r : records)
      if (!r.equal || !r.pontryagin_equal) return false;
    for (const auto& c : degrees)
      if (!c.passed()) return false;
    return true;
  }
};

/// integral of [Theta]^g; equals g! by the Poincare formula.
inline BigInt degree_theta_g(std::size_t g) { return degree(class_theta_power(g, g)); }

/// integral of [W_d] . [W_{g-d}]; equals C(g, d).
inline BigInt degree_wd_pair(std::size_t g, std::size_t d) {
  detail::require_range(d, g, ErrorCode::DOutOfRange, "d");
  return degree(intersection(class_wd(g, d), class_wd(g, g - d)));
}

/// cyc[W_{g-1}] == cyc[Theta].
inline bool verify_riemann_homological(std::size_t g) {
  if (g == 0) throw Error(ErrorCode::GOutOfRange, "Riemann's theorem needs genus >= 1");
  return class_wd(g, g - 1) == class_theta_power(g, 1);
}

inline VerificationReport verify_poincare(std::size_t g) {
  VerificationReport report;
  report.genus = g;
  for (std::size_t d = 0; d <= g; ++d) {
    PoincareRecord rec;
    rec.d = d;
    rec.class_wd = class_wd(g, d);
    rec.class_theta_power = class_theta_power(g, g - d);
    rec.factor = factorial(g - d);
    rec.equal = (rec.factor * rec.class_wd - rec.class_theta_power).is_zero();
    rec.pontryagin_equal = pontryagin_power_w1(g, d) == factorial(d) * rec.class_wd;
    report.records.push_back(std::move(rec));
  }
  report.degrees.push_back({"theta-g", g, factorial(g), degree_theta_g(g)});
  for (std::size_t d = 0; d <= g; ++d)
    report.degrees.push_back({"wd-pair", d, binomial(g, d), degree_wd_pair(g, d)});
  return report;
}

}  // namespace tropjac
