#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "triblock/error.hpp"

namespace triblock {

using integer = std::int64_t;

// P^2 blown up in r points (r = 0 is P^2 itself) or the quadric P^1 x P^1.
class SurfaceId {
 public:
  enum class Kind { PlaneBlowup, Quadric };

  SurfaceId() = default;

  static SurfaceId plane_blowup(int r) {
    if (r < 0 || r > 8) throw user_error("blowup count must be in 0..8, got " + std::to_string(r));
    SurfaceId s;
    s.kind_ = Kind::PlaneBlowup;
    s.r_ = r;
    return s;
  }

  static SurfaceId quadric() {
    SurfaceId s;
    s.kind_ = Kind::Quadric;
    s.r_ = 0;
    return s;
  }

  // Accepts "P2", "X0".."X8", "Q", "P1xP1".
  static SurfaceId parse(std::string_view name) {
    if (name == "P2") return plane_blowup(0);
    if (name == "Q" || name == "P1xP1") return quadric();
    if (name.size() == 2 && name[0] == 'X' && name[1] >= '0' && name[1] <= '8')
      return plane_blowup(name[1] - '0');
    throw user_error("unknown surface '" + std::string(name) + "'");
  }

  Kind kind() const { return kind_; }
  bool is_quadric() const { return kind_ == Kind::Quadric; }
  int blowups() const { return r_; }

  int k_squared() const { return is_quadric() ? 8 : 9 - r_; }
  int picard_rank() const { return is_quadric() ? 2 : r_ + 1; }
  int k0_rank() const { return 12 - k_squared(); }

  std::string name() const {
    if (is_quadric()) return "Q";
    if (r_ == 0) return "P2";
    return "X" + std::to_string(r_);
  }

  bool operator==(const SurfaceId&) const = default;

 private:
  Kind kind_ = Kind::PlaneBlowup;
  int r_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const SurfaceId& s) { return os << s.name(); }

// Integer vector in the basis (l0, l1, ..., lr) or (f1, f2).
class DivisorClass {
 public:
  DivisorClass() = default;

  DivisorClass(SurfaceId s, std::vector<integer> coords) : surface_(s), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != s.picard_rank())
      throw user_error("divisor on " + s.name() + " needs " + std::to_string(s.picard_rank()) +
                       " coordinates, got " + std::to_string(coords_.size()));
  }

  static DivisorClass zero(SurfaceId s) {
    return DivisorClass(s, std::vector<integer>(s.picard_rank(), 0));
  }

  static DivisorClass basis(SurfaceId s, int i) {
    auto d = zero(s);
    if (i < 0 || i >= s.picard_rank()) throw user_error("basis index out of range");
    d.coords_[i] = 1;
    return d;
  }

  const SurfaceId& surface() const { return surface_; }
  const std::vector<integer>& coords() const { return coords_; }
  integer operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const { return coords_.size(); }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](integer v) { return v == 0; });
  }

  DivisorClass& operator+=(const DivisorClass& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  DivisorClass& operator-=(const DivisorClass& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  DivisorClass& operator*=(integer k) {
    for (auto& v : coords_) v *= k;
    return *this;
  }

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(integer k, DivisorClass a) { return a *= k; }
  friend DivisorClass operator-(DivisorClass a) { return a *= -1; }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.surface_ == b.surface_ && a.coords_ == b.coords_;
  }
  friend auto operator<=>(const DivisorClass& a, const DivisorClass& b) { return a.coords_ <=> b.coords_; }

  void check_same(const DivisorClass& o) const {
    if (!(surface_ == o.surface_) || coords_.size() != o.coords_.size())
      throw user_error("incompatible lattices");
  }

 private:
  SurfaceId surface_;
  std::vector<integer> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const DivisorClass& d) {
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  return os << ')';
}

inline integer intersect(const DivisorClass& a, const DivisorClass& b) {
  a.check_same(b);
  if (a.surface().is_quadric()) return a[0] * b[1] + a[1] * b[0];
  integer v = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) v -= a[i] * b[i];
  return v;
}

inline integer self_intersection(const DivisorClass& a) { return intersect(a, a); }

inline DivisorClass canonical_class(SurfaceId s) {
  if (s.is_quadric()) return DivisorClass(s, {-2, -2});
  std::vector<integer> c(s.picard_rank(), 1);
  c[0] = -3;
  return DivisorClass(s, std::move(c));
}

// l_i on X_r; i = 0 is the pullback of a line.
inline DivisorClass ell(SurfaceId s, int i) {
  if (s.is_quadric()) throw user_error("l_i is not defined on the quadric");
  return DivisorClass::basis(s, i);
}

// Canonical class of X_p pulled back to X_r.
inline DivisorClass omega(SurfaceId s, int p) {
  if (s.is_quadric() || p > s.blowups()) throw user_error("omega_p needs X_r with p <= r");
  std::vector<integer> c(s.picard_rank(), 0);
  c[0] = -3;
  for (int i = 1; i <= p; ++i) c[i] = 1;
  return DivisorClass(s, std::move(c));
}

// Pullback along X_r -> X_p: pads the exceptional coordinates with zeros.
inline DivisorClass embed(const DivisorClass& d, SurfaceId into) {
  const auto& from = d.surface();
  if (from.is_quadric() || into.is_quadric())
    throw user_error("no blowdown chain between the quadric and X_r");
  if (from.blowups() > into.blowups())
    throw user_error("cannot embed " + from.name() + " into " + into.name());
  auto c = d.coords();
  c.resize(into.picard_rank(), 0);
  return DivisorClass(into, std::move(c));
}

enum class CurveKind { MinusOne, Root };

inline integer class_search_bound(SurfaceId s) { return 3 * s.picard_rank(); }

namespace detail {

// All b in Z^k with sum b_i^2 = q and sum b_i = l, depth first.
inline void sphere_points(int k, integer q, integer l, std::vector<integer>& cur,
                          const std::function<void(const std::vector<integer>&)>& emit) {
  if (k == 0) {
    if (q == 0 && l == 0) emit(cur);
    return;
  }
  // Cauchy-Schwarz: l^2 <= k q is necessary.
  if (q < 0 || l * l > static_cast<integer>(k) * q) return;
  integer m = 0;
  while ((m + 1) * (m + 1) <= q) ++m;
  for (integer b = -m; b <= m; ++b) {
    cur.push_back(b);
    sphere_points(k - 1, q - b * b, l - b, cur, emit);
    cur.pop_back();
  }
}

}  // namespace detail

// (-1)-classes (e^2 = e.K = -1) or roots (s^2 = -2, s.K = 0) with |first coordinate| <= bound.
inline std::vector<DivisorClass> enumerate_classes_bounded(SurfaceId s, CurveKind kind, integer bound) {
  std::vector<DivisorClass> out;
  const integer e2 = kind == CurveKind::MinusOne ? -1 : -2;
  const integer eK = kind == CurveKind::MinusOne ? -1 : 0;
  if (s.is_quadric()) {
    // (p f1 + q f2)^2 = 2pq, (p f1 + q f2).K = -2(p+q)
    for (integer p = -bound; p <= bound; ++p)
      for (integer q = -bound; q <= bound; ++q)
        if (2 * p * q == e2 && -2 * (p + q) == eK) out.emplace_back(s, std::vector<integer>{p, q});
  } else {
    const int r = s.blowups();
    std::vector<integer> cur;
    for (integer a = -bound; a <= bound; ++a) {
      // e = a l0 - sum b_i l_i: e^2 = a^2 - sum b^2, e.K = -3a + sum b
      const integer q = a * a - e2;
      const integer l = eK + 3 * a;
      detail::sphere_points(r, q, l, cur, [&](const std::vector<integer>& b) {
        std::vector<integer> c{a};
        for (integer v : b) c.push_back(-v);
        out.emplace_back(s, std::move(c));
      });
    }
  }
  std::sort(out.begin(), out.end());
  for (const auto& e : out) {
    ensure(self_intersection(e) == e2 && intersect(e, canonical_class(s)) == eK,
           "enumerated class fails its defining equations");
  }
  return out;
}

inline std::vector<DivisorClass> enumerate_classes(SurfaceId s, CurveKind kind) {
  const integer bound = class_search_bound(s);
  auto found = enumerate_classes_bounded(s, kind, bound);
  ensure(found == enumerate_classes_bounded(s, kind, 2 * bound),
         "class enumeration on " + s.name() + " is not stable under a doubled bound");
  return found;
}

}  // namespace triblock
