#pragma once

#include <boost/rational.hpp>
#include <compare>
#include <ostream>
#include <sstream>
#include <string>

#include "triblock/picard.hpp"

namespace triblock {

using rational = boost::rational<integer>;

inline std::string to_string(const rational& q) {
  std::ostringstream os;
  os << q.numerator();
  if (q.denominator() != 1) os << '/' << q.denominator();
  return os.str();
}

// Numerical image of a sheaf in K0: (rank, c1, 2 ch2).
class KClass {
 public:
  KClass() = default;
  KClass(integer rank, DivisorClass c1, integer ch2x2) : rank_(rank), c1_(std::move(c1)), ch2x2_(ch2x2) {}

  const SurfaceId& surface() const { return c1_.surface(); }
  integer rank() const { return rank_; }
  const DivisorClass& c1() const { return c1_; }
  integer ch2x2() const { return ch2x2_; }

  KClass& operator+=(const KClass& o) {
    rank_ += o.rank_;
    c1_ += o.c1_;
    ch2x2_ += o.ch2x2_;
    return *this;
  }
  KClass& operator-=(const KClass& o) {
    rank_ -= o.rank_;
    c1_ -= o.c1_;
    ch2x2_ -= o.ch2x2_;
    return *this;
  }
  KClass& operator*=(integer k) {
    rank_ *= k;
    c1_ *= k;
    ch2x2_ *= k;
    return *this;
  }
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  friend KClass operator*(integer k, KClass a) { return a *= k; }
  friend KClass operator-(KClass a) { return a *= -1; }

  friend bool operator==(const KClass&, const KClass&) = default;
  // Lexicographic on (rank, c1, ch2x2).
  friend std::strong_ordering operator<=>(const KClass& a, const KClass& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    if (auto c = a.c1_ <=> b.c1_; c != 0) return c;
    return a.ch2x2_ <=> b.ch2x2_;
  }

 private:
  integer rank_ = 0;
  DivisorClass c1_;
  integer ch2x2_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const KClass& e) {
  return os << '[' << e.rank() << ';' << e.c1() << ';' << e.ch2x2() << ']';
}

// d = c1 . (-K)
inline integer degree(const KClass& e) { return -intersect(e.c1(), canonical_class(e.surface())); }

// Extended rational slope; rank 0 classes sit at +infinity.
struct Slope {
  bool infinite = false;
  rational value{0};

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    if (a.infinite || b.infinite) return a.infinite <=> b.infinite;
    if (a.value < b.value) return std::strong_ordering::less;
    if (b.value < a.value) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  std::string str() const { return infinite ? "inf" : to_string(value); }
};

inline Slope slope(const KClass& e) {
  if (e.rank() == 0) return Slope{true, rational(0)};
  return Slope{false, rational(degree(e), e.rank())};
}

inline void check_same_surface(const KClass& e, const KClass& f) {
  if (!(e.surface() == f.surface())) throw user_error("incompatible lattices");
}

// Riemann-Roch form on a surface with chi(O) = 1.
inline integer chi(const KClass& e, const KClass& f) {
  check_same_surface(e, f);
  const integer re = e.rank(), rf = f.rank();
  rational v(re * rf);
  v += rational(re * degree(f) - rf * degree(e), 2);
  v += rational(re * f.ch2x2() + rf * e.ch2x2(), 2);
  v -= intersect(e.c1(), f.c1());
  ensure(v.denominator() == 1, "non-integral Euler characteristic");
  return v.numerator();
}

inline integer chi_minus(const KClass& e, const KClass& f) {
  check_same_surface(e, f);
  return e.rank() * degree(f) - f.rank() * degree(e);
}

inline KClass twist(const KClass& e, const DivisorClass& d) {
  e.c1().check_same(d);
  return KClass(e.rank(), e.c1() + e.rank() * d,
                e.ch2x2() + 2 * intersect(e.c1(), d) + e.rank() * self_intersection(d));
}

inline KClass line_bundle(const DivisorClass& d) { return KClass(1, d, self_intersection(d)); }

inline KClass structure_sheaf(SurfaceId s) { return line_bundle(DivisorClass::zero(s)); }

// O_l(m) for a (-1)-curve l; 2ch2 = 2m+1 so that chi(O, O_l(m)) = m+1.
inline KClass torsion_class(const DivisorClass& curve, integer m) {
  const auto k = canonical_class(curve.surface());
  if (self_intersection(curve) != -1 || intersect(curve, k) != -1)
    throw user_error("torsion class needs a (-1)-curve");
  return KClass(0, curve, 2 * m + 1);
}

inline integer exceptional_ch2(integer rank, const DivisorClass& c1) {
  if (rank <= 0) throw user_error("no exceptional class with these (r,c1)");
  const integer num = 1 + self_intersection(c1) - rank * rank;
  if (num % rank != 0) throw user_error("no exceptional class with these (r,c1)");
  return num / rank;
}

inline KClass exceptional_class(integer rank, const DivisorClass& c1) {
  return KClass(rank, c1, exceptional_ch2(rank, c1));
}

// chi(E,E) = 1, plus the sheaf sign: positive rank, or rank 0 with degree 1.
inline bool is_exceptional(const KClass& e) {
  if (chi(e, e) != 1) return false;
  if (e.rank() > 0) return true;
  return e.rank() == 0 && degree(e) == 1;
}

enum class PairType { Hom, Ext, Zero };

inline std::string to_string(PairType t) {
  switch (t) {
    case PairType::Hom: return "hom";
    case PairType::Ext: return "ext";
    case PairType::Zero: return "zero";
  }
  return "?";
}

inline PairType classify_pair(const KClass& e, const KClass& f) {
  const auto c = slope(e) <=> slope(f);
  if (c < 0) return PairType::Hom;
  if (c > 0) return PairType::Ext;
  return PairType::Zero;
}

// Pullback of a class along X_r -> X_p.
inline KClass embed(const KClass& e, SurfaceId into) {
  return KClass(e.rank(), embed(e.c1(), into), e.ch2x2());
}

}  // namespace triblock
