#include "cubesum/elliptic.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "cubesum/errors.hpp"
#include "cubesum/search.hpp"

namespace cubesum {

namespace {

Integer ipow(const Integer& b, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

unsigned valuation(const Integer& n, const Integer& p) {
  if (n == 0) return ~0U;
  unsigned e = 0;
  Integer m = n;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

void require_nonsingular(const WeierstrassCurve& c) {
  if (c.singular()) throw SingularCurve("curve Y^2 = X^3 + (" + c.A.get_str() + ")X + (" + c.B.get_str() + ") is singular");
}

}  // namespace

WeierstrassCurve WeierstrassCurve::from_coefficients(Integer A, Integer B) {
  Integer disc = -16 * (4 * A * A * A + 27 * B * B);
  return {std::move(A), std::move(B), std::move(disc), std::nullopt, Integer(1)};
}

bool point_less(const CurvePoint& a, const CurvePoint& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && !b.is_infinity();
  if (a.x() != b.x()) return a.x() < b.x();
  return a.y() < b.y();
}

WeierstrassCurve to_weierstrass(const Coefficient& a) {
  const Integer& l = a.num();
  const Integer& r = a.den();
  Integer A = -432 * l * l * l * r;
  Integer B = -432 * ipow(l, 4) * (l * l - 6 * l * r - 3 * r * r);
  WeierstrassCurve c = WeierstrassCurve::from_coefficients(std::move(A), std::move(B));
  c.origin = a;
  return c;
}

Integer weierstrass_discriminant_formula(const Coefficient& a) {
  const Integer& l = a.num();
  const Integer& r = a.den();
  return -ipow(Integer(2), 12) * ipow(Integer(3), 9) * ipow(l, 8) * ipow(Integer(l - r), 3) * (l - 9 * r);
}

WeierstrassCurve reduced_model(const WeierstrassCurve& curve) {
  if (curve.A == 0 && curve.B == 0) return curve;
  const Integer g = gcd(curve.A, curve.B);
  Integer d = 1;
  for (const auto& [p, e] : factorize(g)) {
    const unsigned k = std::min(valuation(curve.A, p) / 4, valuation(curve.B, p) / 6);
    if (k > 0 && k != ~0U / 4) d *= ipow(p, k);
  }
  WeierstrassCurve out = curve;
  if (d == 1) return out;
  mpz_divexact(out.A.get_mpz_t(), curve.A.get_mpz_t(), ipow(d, 4).get_mpz_t());
  mpz_divexact(out.B.get_mpz_t(), curve.B.get_mpz_t(), ipow(d, 6).get_mpz_t());
  out.discriminant = -16 * (4 * out.A * out.A * out.A + 27 * out.B * out.B);
  out.scale = curve.scale * d;
  return out;
}

bool on_curve(const WeierstrassCurve& curve, const CurvePoint& p) {
  if (p.is_infinity()) return true;
  const Rational& x = p.x();
  return p.y() * p.y() == x * x * x + Rational(curve.A) * x + Rational(curve.B);
}

CurvePoint point_add(const WeierstrassCurve& curve, const CurvePoint& p, const CurvePoint& q) {
  require_nonsingular(curve);
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  Rational lambda;
  if (p.x() == q.x()) {
    if (p.y() == -q.y()) return CurvePoint::infinity();
    lambda = (Rational(3) * p.x() * p.x() + Rational(curve.A)) / (Rational(2) * p.y());
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  Rational x3 = lambda * lambda - p.x() - q.x();
  Rational y3 = lambda * (p.x() - x3) - p.y();
  return CurvePoint::affine(std::move(x3), std::move(y3));
}

CurvePoint point_mul(const WeierstrassCurve& curve, const Integer& m, const CurvePoint& p) {
  require_nonsingular(curve);
  CurvePoint base = sgn(m) < 0 ? -p : p;
  Integer k = abs(m);
  CurvePoint acc = CurvePoint::infinity();
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = point_add(curve, acc, base);
    k >>= 1;
    if (k > 0) base = point_add(curve, base, base);
  }
  return acc;
}

std::optional<unsigned> point_order(const WeierstrassCurve& curve, const CurvePoint& p, unsigned max_order) {
  require_nonsingular(curve);
  CurvePoint q = p;
  for (unsigned m = 1; m <= max_order; ++m) {
    if (q.is_infinity()) return m;
    // Finite-order points of an integral model are integral.
    if (!q.is_integral()) return std::nullopt;
    q = point_add(curve, q, p);
  }
  return std::nullopt;
}

namespace {

std::vector<Integer> square_root_divisors(const Integer& d) {
  std::vector<Integer> out{Integer(1)};
  for (const auto& [p, e] : factorize(d)) {
    const std::size_t n = out.size();
    Integer pk = 1;
    for (unsigned k = 1; 2 * k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

std::vector<Integer> integer_x_with(const WeierstrassCurve& c, const Integer& y2) {
  const Integer c0 = c.B - y2;
  const Integer bound = 1 + std::max(abs(c.A), abs(c0));
  auto roots = integer_roots_in_range({Integer(1), Integer(0), c.A, c0}, Integer(-bound), bound);
  return roots ? *roots : std::vector<Integer>{};
}

std::vector<CurvePoint> torsion_on(const WeierstrassCurve& c) {
  std::vector<CurvePoint> pts{CurvePoint::infinity()};
  for (const Integer& x : integer_x_with(c, Integer(0))) pts.push_back(CurvePoint::affine(x, 0));
  const Integer d = 4 * c.A * c.A * c.A + 27 * c.B * c.B;
  for (const Integer& y : square_root_divisors(d)) {
    for (const Integer& x : integer_x_with(c, Integer(y * y))) {
      for (const Integer& sy : {y, Integer(-y)}) {
        CurvePoint p = CurvePoint::affine(x, sy);
        if (point_order(c, p)) pts.push_back(std::move(p));
      }
    }
  }
  // Close under addition.
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        CurvePoint s = point_add(c, pts[i], pts[j]);
        if (std::find(pts.begin(), pts.end(), s) == pts.end()) {
          pts.push_back(std::move(s));
          grew = true;
        }
      }
  }
  std::sort(pts.begin(), pts.end(), point_less);
  return pts;
}

std::vector<CurvePoint> generated_by(const WeierstrassCurve& c, const std::vector<CurvePoint>& gens) {
  std::vector<CurvePoint> group{CurvePoint::infinity()};
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t n = group.size();
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& g : gens) {
        CurvePoint s = point_add(c, group[i], g);
        if (std::find(group.begin(), group.end(), s) == group.end()) {
          group.push_back(std::move(s));
          grew = true;
        }
      }
  }
  return group;
}

}  // namespace

TorsionReport torsion(const WeierstrassCurve& curve) {
  require_nonsingular(curve);
  const WeierstrassCurve reduced = reduced_model(curve);
  Integer d;
  mpz_divexact(d.get_mpz_t(), reduced.scale.get_mpz_t(), curve.scale.get_mpz_t());
  const Rational d2(Integer(d * d)), d3(Integer(d * d * d));

  TorsionReport report;
  for (const auto& p : torsion_on(reduced)) {
    report.elements.push_back(p.is_infinity() ? p : CurvePoint::affine(p.x() * d2, p.y() * d3));
  }
  std::sort(report.elements.begin(), report.elements.end(), point_less);
  report.order = report.elements.size();
  const auto o = report.order;
  if (o < 1 || o == 11 || o > 12) throw std::logic_error("torsion order " + std::to_string(o) + " violates Mazur's bound");

  std::vector<std::pair<unsigned, CurvePoint>> by_order;
  for (const auto& p : report.elements) by_order.emplace_back(*point_order(curve, p), p);
  std::stable_sort(by_order.begin(), by_order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  if (o > 1) {
    report.generators.push_back(by_order.front().second);
    auto sub = generated_by(curve, report.generators);
    if (sub.size() < o) {
      for (auto it = by_order.rbegin(); it != by_order.rend(); ++it) {
        if (std::find(sub.begin(), sub.end(), it->second) == sub.end()) {
          report.generators.push_back(it->second);
          break;
        }
      }
    }
  }
  return report;
}

CurvePoint to_origin_model(const WeierstrassCurve& curve, const CurvePoint& p) {
  if (p.is_infinity() || curve.scale == 1) return p;
  const Integer s2 = curve.scale * curve.scale;
  return CurvePoint::affine(p.x() * Rational(s2), p.y() * Rational(Integer(s2 * curve.scale)));
}

Triple point_to_triple(const WeierstrassCurve& curve, const CurvePoint& p) {
  if (!curve.origin) throw PreconditionViolated("point_to_triple: curve has no associated coefficient");
  if (p.is_infinity()) throw PreconditionViolated("point_to_triple: point at infinity");
  const CurvePoint p0 = to_origin_model(curve, p);
  const Integer& l = curve.origin->num();
  const Integer& r = curve.origin->den();
  const Rational x = Rational(Integer(6 * l)) * (Rational(Integer(12 * l * r)) - p0.x());
  const Rational base(Integer(36 * l * l * (l - r)));
  const Rational y = base + p0.y();
  const Rational z = base - p0.y();
  Integer m;
  mpz_lcm(m.get_mpz_t(), x.den().get_mpz_t(), y.den().get_mpz_t());
  mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), z.den().get_mpz_t());
  const Rational scale(m);
  Triple t{(x * scale).num(), (y * scale).num(), (z * scale).num()};
  const Integer g = gcd3(t.x, t.y, t.z);
  return g == 0 ? t : t.divided_by(g);
}

CurvePoint triple_to_point(const Coefficient& a, const Triple& t) {
  const Integer& l = a.num();
  const Integer& r = a.den();
  if (l == r) throw PreconditionViolated("triple_to_point: a = 1 has no elliptic model");
  if (l == 0) throw InvalidCoefficient("a = 0 is excluded");
  if (t.y + t.z == 0) throw PreconditionViolated("triple_to_point: y + z = 0 maps to no affine point");
  const Rational lambda(Integer(t.y + t.z), Integer(72 * l * l * (l - r)));
  Rational x0 = Rational(Integer(12 * l * r)) - Rational(t.x) / (Rational(Integer(6 * l)) * lambda);
  Rational y0 = Rational(Integer(t.y - t.z)) / (Rational(2) * lambda);
  return CurvePoint::affine(std::move(x0), std::move(y0));
}

std::vector<CurvePoint> integer_point_search(const WeierstrassCurve& curve, std::int64_t bound, unsigned parallelism) {
  require_nonsingular(curve);
  if (bound < 0) throw PreconditionViolated("integer_point_search: bound must be >= 0");
  const unsigned jobs = std::max(1U, parallelism);
  std::vector<std::vector<CurvePoint>> found(jobs);
  auto worker = [&](unsigned id) {
    for (std::int64_t x = -bound + id; x <= bound; x += jobs) {
      const Integer X = static_cast<long>(x);
      if (auto y = is_perfect_square(Integer(X * X * X + curve.A * X + curve.B))) {
        found[id].push_back(CurvePoint::affine(X, *y));
        if (*y != 0) found[id].push_back(CurvePoint::affine(X, Integer(-*y)));
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker, i);
    for (auto& t : pool) t.join();
  }
  std::vector<CurvePoint> out;
  for (auto& v : found) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

}  // namespace cubesum
