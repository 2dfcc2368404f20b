#pragma once

// Exterior-algebra model of the tropical (co)homology of a real torus:
//
//   H_{p,q}  = Lambda^q(lattice) (x) Lambda^p(N)       basis c_J (x) delta_I
//   H^{p,q}  = Lambda^q(lattice*) (x) Lambda^p(N*)     basis c*_J (x) delta*_I
//
// with |I| = p, |J| = q. Subsets of {1..g} are bitmasks (bit k-1 <-> index k).
// Products are componentwise with each factor carrying its own Koszul sign and no
// sign between the two tensor factors.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropjac/error.hpp"
#include "tropjac/rational.hpp"

namespace tropjac {

using IndexMask = std::uint32_t;

inline constexpr std::size_t kMaxGenus = 30;

inline IndexMask full_mask(std::size_t g) {
  return g == 0 ? 0u : static_cast<IndexMask>((std::uint64_t{1} << g) - 1);
}

inline IndexMask mask_of(const std::vector<std::size_t>& one_based) {
  IndexMask m = 0;
  for (std::size_t k : one_based) {
    if (k == 0 || k > kMaxGenus) throw Error(ErrorCode::InvalidInput, "index out of range");
    m |= IndexMask{1} << (k - 1);
  }
  return m;
}

inline std::vector<std::size_t> indices_of(IndexMask m) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; m != 0; ++k, m >>= 1)
    if (m & 1u) out.push_back(k);
  return out;
}

struct SignedMask {
  int sign;
  IndexMask mask;

  friend bool operator==(const SignedMask&, const SignedMask&) = default;
};

/// e_A ^ e_B: zero if A and B meet, else sign (-1)^{#{(a,b): a > b}} times e_{A u B}.
inline std::optional<SignedMask> wedge_monomials(IndexMask a, IndexMask b) {
  if (a & b) return std::nullopt;
  int inversions = 0;
  for (IndexMask rest = a; rest != 0; rest &= rest - 1) {
    const IndexMask lowest = rest & (~rest + 1);
    inversions += std::popcount(b & (lowest - 1));
  }
  return SignedMask{inversions % 2 ? -1 : 1, a | b};
}

/// Contraction of e_J by the dual monomial e*_D. Single index: iota_i(e_J) =
/// (-1)^{#{j in J : j < i}} e_{J \ i}. Indices of D are contracted smallest first,
/// which gives iota_{e*_I}(e_I) = +1.
inline std::optional<SignedMask> interior(IndexMask dual, IndexMask j) {
  if ((dual & j) != dual) return std::nullopt;
  int parity = 0;
  IndexMask current = j;
  for (IndexMask rest = dual; rest != 0; rest &= rest - 1) {
    const IndexMask lowest = rest & (~rest + 1);
    parity += std::popcount(current & (lowest - 1));
    current &= ~lowest;
  }
  return SignedMask{parity % 2 ? -1 : 1, current};
}

enum class Side { homology, cohomology };

inline std::string_view to_string(Side s) { return s == Side::homology ? "homology" : "cohomology"; }

struct Monomial {
  IndexMask circuits = 0;  // J: wedge of c_j (or c*_j)
  IndexMask deltas = 0;    // I: wedge of delta_i (or delta*_i)

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct Bidegree {
  std::size_t p;  // |I|
  std::size_t q;  // |J|

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

inline Bidegree bidegree_of(const Monomial& m) {
  return {static_cast<std::size_t>(std::popcount(m.deltas)),
          static_cast<std::size_t>(std::popcount(m.circuits))};
}

/// Integer combination of basis monomials of H_{*,*} or H^{*,*} of a genus-g torus.
class BigradedClass {
 public:
  using Terms = std::map<Monomial, BigInt>;

  BigradedClass(Side side, std::size_t genus) : side_(side), genus_(genus) {
    if (genus > kMaxGenus) throw Error(ErrorCode::GenusTooLarge, "genus exceeds supported range");
  }

  static BigradedClass monomial(Side side, std::size_t genus, IndexMask circuits, IndexMask deltas,
                                BigInt coeff = 1) {
    BigradedClass c(side, genus);
    c.add(Monomial{circuits, deltas}, coeff);
    return c;
  }

  Side side() const noexcept { return side_; }
  std::size_t genus() const noexcept { return genus_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  BigInt coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add(const Monomial& m, const BigInt& coeff) {
    const IndexMask full = full_mask(genus_);
    if ((m.circuits & ~full) || (m.deltas & ~full))
      throw Error(ErrorCode::InvalidInput, "monomial index exceeds genus");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Common bidegree of all terms; nullopt for inhomogeneous classes. Zero is homogeneous
  /// of every bidegree and reports (0,0).
  std::optional<Bidegree> bidegree() const {
    if (terms_.empty()) return Bidegree{0, 0};
    const Bidegree first = bidegree_of(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (bidegree_of(m) != first) return std::nullopt;
    return first;
  }
  bool is_homogeneous() const { return bidegree().has_value(); }

  BigradedClass& operator+=(const BigradedClass& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
  }
  BigradedClass& operator-=(const BigradedClass& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add(m, -c);
    return *this;
  }
  friend BigradedClass operator+(BigradedClass a, const BigradedClass& b) { return a += b; }
  friend BigradedClass operator-(BigradedClass a, const BigradedClass& b) { return a -= b; }
  friend BigradedClass operator*(const BigInt& s, const BigradedClass& a) {
    BigradedClass out(a.side_, a.genus_);
    for (const auto& [m, c] : a.terms_) out.add(m, s * c);
    return out;
  }

  friend bool operator==(const BigradedClass& a, const BigradedClass& b) {
    return a.side_ == b.side_ && a.genus_ == b.genus_ && a.terms_ == b.terms_;
  }

  void check_compatible(const BigradedClass& other) const {
    if (other.side_ != side_) throw Error(ErrorCode::SideMismatch, "homology and cohomology mixed");
    if (other.genus_ != genus_) throw Error(ErrorCode::GenusMismatch, "classes of different genus");
  }

 private:
  Side side_;
  std::size_t genus_;
  Terms terms_;
};

namespace detail {

inline void require_side(const BigradedClass& c, Side side, const char* what) {
  if (c.side() != side)
    throw Error(ErrorCode::SideMismatch,
                std::string(what) + " expects a " + std::string(to_string(side)) + " class");
}

inline BigradedClass wedge_product(const BigradedClass& a, const BigradedClass& b) {
  if (a.genus() != b.genus()) throw Error(ErrorCode::GenusMismatch, "classes of different genus");
  BigradedClass out(a.side(), a.genus());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const auto circ = wedge_monomials(ma.circuits, mb.circuits);
      if (!circ) continue;
      const auto delt = wedge_monomials(ma.deltas, mb.deltas);
      if (!delt) continue;
      out.add(Monomial{circ->mask, delt->mask}, ca * cb * (circ->sign * delt->sign));
    }
  return out;
}

}  // namespace detail

/// (alpha (x) omega) * (beta (x) xi) = (alpha ^ beta) (x) (omega ^ xi).
inline BigradedClass pontryagin(const BigradedClass& a, const BigradedClass& b) {
  detail::require_side(a, Side::homology, "pontryagin");
  detail::require_side(b, Side::homology, "pontryagin");
  return detail::wedge_product(a, b);
}

inline BigradedClass cup(const BigradedClass& a, const BigradedClass& b) {
  detail::require_side(a, Side::cohomology, "cup");
  detail::require_side(b, Side::cohomology, "cup");
  return detail::wedge_product(a, b);
}

/// (alpha (x) omega) cap (beta (x) xi) = (alpha -| beta) (x) (omega -| xi).
inline BigradedClass cap(const BigradedClass& c, const BigradedClass& a) {
  detail::require_side(c, Side::cohomology, "cap");
  detail::require_side(a, Side::homology, "cap");
  if (a.genus() != c.genus()) throw Error(ErrorCode::GenusMismatch, "classes of different genus");
  BigradedClass out(Side::homology, a.genus());
  for (const auto& [mc, cc] : c.terms())
    for (const auto& [ma, ca] : a.terms()) {
      const auto circ = interior(mc.circuits, ma.circuits);
      if (!circ) continue;
      const auto delt = interior(mc.deltas, ma.deltas);
      if (!delt) continue;
      out.add(Monomial{circ->mask, delt->mask}, cc * ca * (circ->sign * delt->sign));
    }
  return out;
}

/// c_1 ^ ... ^ c_g (x) delta_1 ^ ... ^ delta_g.
inline BigradedClass fundamental_class(std::size_t g) {
  return BigradedClass::monomial(Side::homology, g, full_mask(g), full_mask(g));
}

/// Unit of the Pontryagin ring (the class of a point).
inline BigradedClass point_class(std::size_t g) {
  return BigradedClass::monomial(Side::homology, g, 0, 0);
}

namespace detail {

inline void require_homogeneous(const BigradedClass& c, const char* what) {
  if (!c.is_homogeneous())
    throw Error(ErrorCode::InhomogeneousClass, std::string(what) + " needs a homogeneous class");
}

// Sign of e*_S -| e_{1..g}.
inline int complement_sign(IndexMask s, std::size_t g) { return interior(s, full_mask(g))->sign; }

}  // namespace detail

/// c |-> c cap [X].
inline BigradedClass poincare_dual(const BigradedClass& c) {
  detail::require_side(c, Side::cohomology, "poincare_dual");
  detail::require_homogeneous(c, "poincare_dual");
  return cap(c, fundamental_class(c.genus()));
}

/// Inverse of poincare_dual: c_J (x) delta_I comes from c*_{J^c} (x) delta*_{I^c}
/// with the sign that cap produces on that monomial.
inline BigradedClass poincare_dual_inverse(const BigradedClass& a) {
  detail::require_side(a, Side::homology, "poincare_dual_inverse");
  detail::require_homogeneous(a, "poincare_dual_inverse");
  const std::size_t g = a.genus();
  const IndexMask full = full_mask(g);
  BigradedClass out(Side::cohomology, g);
  for (const auto& [m, coeff] : a.terms()) {
    const Monomial dual{full & ~m.circuits, full & ~m.deltas};
    const int sign = detail::complement_sign(dual.circuits, g) * detail::complement_sign(dual.deltas, g);
    out.add(dual, coeff * sign);
  }
  return out;
}

/// a . b = PD^{-1}(a) cap b.
inline BigradedClass intersection(const BigradedClass& a, const BigradedClass& b) {
  detail::require_side(b, Side::homology, "intersection");
  return cap(poincare_dual_inverse(a), b);
}

/// Coefficient of the point class; the class must live in bidegree (0,0).
inline BigInt degree(const BigradedClass& a) {
  detail::require_side(a, Side::homology, "degree");
  for (const auto& [m, c] : a.terms())
    if (m.circuits != 0 || m.deltas != 0)
      throw Error(ErrorCode::NonZeroDegreeClass, "degree of a class outside bidegree (0,0)");
  return a.coefficient(Monomial{0, 0});
}

/// Basis monomials of the (p,q) graded piece, in Monomial order.
inline std::vector<Monomial> basis_monomials(std::size_t g, std::size_t p, std::size_t q) {
  std::vector<Monomial> out;
  if (p > g || q > g) return out;
  const std::uint64_t limit = std::uint64_t{1} << g;
  std::vector<IndexMask> with_p;
  std::vector<IndexMask> with_q;
  for (std::uint64_t m = 0; m < limit; ++m) {
    const auto bits = static_cast<std::size_t>(std::popcount(m));
    if (bits == p) with_p.push_back(static_cast<IndexMask>(m));
    if (bits == q) with_q.push_back(static_cast<IndexMask>(m));
  }
  out.reserve(with_p.size() * with_q.size());
  for (IndexMask j : with_q)
    for (IndexMask i : with_p) out.push_back(Monomial{j, i});
  return out;
}

}  // namespace tropjac
