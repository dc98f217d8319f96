#pragma once

// Parametric constructions of solutions. Each generator returns the raw
// triple as the formula produces it together with its reduced canonical class.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubesum/arith.hpp"
#include "cubesum/model.hpp"

namespace cubesum {

enum class FamilyId {
  CubeRatio,
  Frac5q2,
  FibonacciLucas,
  Frac2p2q2,
  CubicFrac,
  RsUniversal,
  MinusFour3q2,
  ReciprocalInteger,
  TwoVariable,
  A9General,
  A9Mu,
  SquareCube,
  SquareFib,
};

std::string_view family_name(FamilyId id);

struct FamilySolution {
  FamilyId family;
  std::vector<Rational> params;
  Coefficient a;
  Triple raw;
  /// canonicalize(raw / gcd3(raw))
  CanonicalTriple primitive;
};

/// a = p^3/q^3
FamilySolution cube_family(const Integer& p, const Integer& q);
/// a = 4q^2/(p^2 - 5q^2)
FamilySolution frac_family_5q2(const Integer& p, const Integer& q);
/// a = (-1)^n F_n^2, n >= 1, n != 2
FamilySolution fibonacci_family(unsigned n);
/// a = 9q^2/(2p^2 + q^2)
FamilySolution frac_family_2p2q2(const Integer& p, const Integer& q);
/// a = p^2(2p + q)/(2p^3 + p^2 q - 6q^3)
FamilySolution cubic_frac_family(const Integer& p, const Integer& q);
/// a = (s + 2)^3/(6r^2 + s^3 + 2); reaches every coefficient with a primitive solution.
FamilySolution rs_family(const Rational& r, const Rational& s);
/// a = -4(3q^2 - 1)^3, the integer slice r = -6q^3, s = -6q^2 of rs_family.
FamilySolution minus_four_family(const Integer& q);
/// 1/a = 6q(p^2 - (q - 1)^2) + 1
FamilySolution reciprocal_integer_family(const Integer& p, const Integer& q);
/// z = 0 solutions, a = 4/(1 + 3 alpha^2) with alpha = q/p. Never primitive.
FamilySolution two_variable_family(const Integer& p, const Integer& q);

/// a = 9 general solution on the canonical domain l1 >= l2 >= 1 with
/// gcd(l1, l2) = 1, or (0, 0). Throws NonCanonicalParameters otherwise.
FamilySolution a9_general(long l1, long l2);

struct A9Relaxed {
  FamilySolution solution;
  /// Canonical pair generating the same class; absent for vectorlike output.
  std::optional<std::pair<long, long>> canonical;
};

/// Evaluates the a = 9 formula at arbitrary integers and reports the
/// canonical pair reached through the swap, double sign flip and
/// (l2, l1) -> (-l2, l1 + l2) symmetries.
A9Relaxed a9_general_relaxed(long l1, long l2);

/// Canonical (l1, l2) label of a primitive a = 9 solution.
std::optional<std::pair<long, long>> a9_parameters(const Triple& t);

/// Rational point of the singular a = 9 curve at parameter mu, scaled to integers.
FamilySolution a9_from_mu(const Rational& mu);

/// Cube (N = k^3) and even-index Fibonacci (N = F_2k) constructions for a = N^2.
std::vector<FamilySolution> square_families(const Integer& n);

}  // namespace cubesum
