#pragma once

// Integer short Weierstrass model of the master equation, its exact group
// law, Nagell-Lutz torsion and the translation between points and triples.

#include <cstdint>
#include <optional>
#include <vector>

#include "cubesum/arith.hpp"
#include "cubesum/model.hpp"

namespace cubesum {

/// Y^2 = X^3 + A X + B. When `origin` is set, coordinates relate to the
/// coefficient's integer model by X0 = scale^2 X, Y0 = scale^3 Y.
struct WeierstrassCurve {
  Integer A, B;
  /// -16 (4A^3 + 27B^2)
  Integer discriminant;
  std::optional<Coefficient> origin;
  Integer scale = 1;

  static WeierstrassCurve from_coefficients(Integer A, Integer B);
  bool singular() const { return discriminant == 0; }
};

class CurvePoint {
 public:
  static CurvePoint infinity() { return CurvePoint(); }
  static CurvePoint affine(Rational x, Rational y) { return CurvePoint(std::move(x), std::move(y)); }

  bool is_infinity() const { return infinity_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  bool is_integral() const { return infinity_ || (x_.is_integer() && y_.is_integer()); }
  CurvePoint operator-() const { return infinity_ ? *this : affine(x_, -y_); }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

 private:
  CurvePoint() = default;
  CurvePoint(Rational x, Rational y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}
  bool infinity_ = true;
  Rational x_, y_;
};

/// Strict weak order on points (infinity first), for sorted listings.
bool point_less(const CurvePoint& a, const CurvePoint& b);

struct TorsionReport {
  std::size_t order = 1;
  std::vector<CurvePoint> generators;
  /// Every torsion point, infinity first, then by point_less.
  std::vector<CurvePoint> elements;
};

/// A = -432 aL^3 aR, B = -432 aL^4 (aL^2 - 6 aL aR - 3 aR^2); singular
/// exactly for a in {0, 1, 9}.
WeierstrassCurve to_weierstrass(const Coefficient& a);

/// The closed-form discriminant -2^12 3^9 aL^8 (aL - aR)^3 (aL - 9 aR).
Integer weierstrass_discriminant_formula(const Coefficient& a);

/// Largest d with d^4 | A and d^6 | B, and the curve rescaled by it.
WeierstrassCurve reduced_model(const WeierstrassCurve& curve);

bool on_curve(const WeierstrassCurve& curve, const CurvePoint& p);

/// Chord-tangent law. Throws SingularCurve on singular curves.
CurvePoint point_add(const WeierstrassCurve& curve, const CurvePoint& p, const CurvePoint& q);
CurvePoint point_mul(const WeierstrassCurve& curve, const Integer& m, const CurvePoint& p);

/// Smallest m in [1, max_order] with m P = O.
std::optional<unsigned> point_order(const WeierstrassCurve& curve, const CurvePoint& p, unsigned max_order = 12);

TorsionReport torsion(const WeierstrassCurve& curve);

/// Curve point of the coefficient's integer model corresponding to a point
/// of `curve` (undoing the scale).
CurvePoint to_origin_model(const WeierstrassCurve& curve, const CurvePoint& p);

/// x = 6aL(12 aL aR - X0), y, z = 36 aL^2 (aL - aR) +- Y0, cleared to a coprime
/// integer triple. Requires an affine point on a curve with an origin.
Triple point_to_triple(const WeierstrassCurve& curve, const CurvePoint& p);

/// Inverse of point_to_triple on the unscaled model of `a`. Requires y + z != 0
/// and a != 1.
CurvePoint triple_to_point(const Coefficient& a, const Triple& t);

/// Integer points with |X| <= bound.
std::vector<CurvePoint> integer_point_search(const WeierstrassCurve& curve, std::int64_t bound, unsigned parallelism = 1);

}  // namespace cubesum
