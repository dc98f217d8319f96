#pragma once

// The equation a (x^3 + y^3 + z^3) = (x + y + z)^3 over the integers: triples,
// primitivity, the symmetric t,u,v coordinates and coefficient recovery.

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "cubesum/arith.hpp"

namespace cubesum {

/// Equation coefficient a = aL / aR in lowest terms, aR > 0. Zero is
/// representable; solver entry points reject it with InvalidCoefficient.
class Coefficient {
 public:
  Coefficient(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Coefficient(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)

  static Coefficient parse(std::string_view text) { return Coefficient(Rational::parse(text)); }

  const Rational& value() const { return a_; }
  const Integer& num() const { return a_.num(); }
  const Integer& den() const { return a_.den(); }
  bool is_zero() const { return a_.is_zero(); }
  bool is_integer() const { return a_.is_integer(); }
  std::string to_string() const { return a_.to_string(); }

  friend bool operator==(const Coefficient&, const Coefficient&) = default;

 private:
  Rational a_;
};

struct Triple {
  Integer x, y, z;

  Triple() = default;
  Triple(Integer x_, Integer y_, Integer z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  Triple(long x_, long y_, long z_) : x(x_), y(y_), z(z_) {}

  std::array<Integer, 3> as_array() const { return {x, y, z}; }
  bool is_zero() const { return x == 0 && y == 0 && z == 0; }
  Triple operator-() const { return {Integer(-x), Integer(-y), Integer(-z)}; }
  /// Exact division by a common divisor.
  Triple divided_by(const Integer& d) const;
  Triple scaled(const Integer& k) const;

  friend bool operator==(const Triple&, const Triple&) = default;
};

std::ostream& operator<<(std::ostream& os, const Triple& t);
std::string to_string(const Triple& t);

struct TuvTriple {
  Integer t, u, v;
  friend bool operator==(const TuvTriple&, const TuvTriple&) = default;
};

/// Representative of a triple's class under permutation and global sign:
/// |x| >= |y| >= |z|, positives before negatives among equal magnitudes, and
/// the leading entry positive. `permutation[i]` is the source index of entry i.
struct CanonicalTriple {
  Triple triple;
  bool sign_flipped = false;
  std::array<int, 3> permutation{0, 1, 2};

  const Integer& x() const { return triple.x; }
  const Integer& y() const { return triple.y; }
  const Integer& z() const { return triple.z; }
};

inline bool operator==(const CanonicalTriple& a, const CanonicalTriple& b) { return a.triple == b.triple; }

/// Orders canonical triples by largest magnitude, then lexicographically.
bool canonical_less(const Triple& a, const Triple& b);

bool is_solution(const Coefficient& a, const Triple& t);
/// Solution with xyz != 0, gcd 1 and no two entries summing to zero.
bool is_primitive(const Coefficient& a, const Triple& t);
bool has_vectorlike_pair(const Triple& t);

CanonicalTriple canonicalize(const Triple& t);
/// Divides by gcd3 (when nonzero) and canonicalizes.
CanonicalTriple primitive_class(const Triple& t);

TuvTriple xyz_to_tuv(const Triple& t);
/// Throws NonIntegralResult when t + u + v is odd.
Triple tuv_to_xyz(const TuvTriple& s);
/// (a - 1)(t + u + v)^3 == 24 a t u v
bool tuv_equation_holds(const Coefficient& a, const TuvTriple& s);

/// The coefficient making t a solution. Absent when the sum of cubes vanishes
/// but the sum does not; throws Indeterminate when both vanish.
std::optional<Rational> a_from_triple(const Triple& t);

struct RsPair {
  Rational r, s;
};

/// r = (x - y)/(x + y), s = 2z/(x + y). Throws VectorlikePair when x + y == 0.
RsPair rs_from_triple(const Triple& t);
/// (s + 2)^3 / (6 r^2 + s^3 + 2); absent when the denominator vanishes.
std::optional<Rational> a_from_rs(const Rational& r, const Rational& s);

/// Value of z_u - 4 z_q, (x + y + z)/N, for a solution of the a = N^2 equation.
/// Throws NotASolution otherwise.
Rational anomaly_scale(const Integer& n, const Triple& t);

}  // namespace cubesum
