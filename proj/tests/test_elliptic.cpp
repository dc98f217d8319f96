#include <doctest.h>

#include <set>

#include "cubesum/elliptic.hpp"
#include "cubesum/errors.hpp"
#include "cubesum/families.hpp"
#include "oracles.hpp"

using namespace cubesum;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

CurvePoint pt(long x, long y) { return CurvePoint::affine(Rational(x), Rational(y)); }

/// Y^2 - X^3 - A X - B evaluated directly in GMP rationals.
bool satisfies(const Integer& A, const Integer& B, const CurvePoint& p) {
  if (p.is_infinity()) return true;
  const mpq_class x(p.x().num(), p.x().den()), y(p.y().num(), p.y().den());
  return y * y == x * x * x + mpq_class(A) * x + mpq_class(B);
}

Rational random_rational(long lo, long hi, long dmax) {
  for (;;) {
    const long n = oracle::uniform(lo, hi), d = oracle::uniform(1, dmax);
    if (n != 0) return Rational(Integer(n), Integer(d));
  }
}

}  // namespace

TEST_SUITE("elliptic") {
  TEST_CASE("weierstrass coefficients") {
    const auto one = to_weierstrass(1);
    CHECK(one.A == -432);
    CHECK(one.B == 3456);
    CHECK(one.singular());
    CHECK(to_weierstrass(9).singular());
    CHECK(to_weierstrass(Coefficient(Rational(0))).singular());
    const auto r = reduced_model(to_weierstrass(16));
    CHECK(r.A == -432);
    CHECK(r.B == -16956);
    CHECK(r.scale == 8);
    REQUIRE(r.origin);
    CHECK(*r.origin == Coefficient(16));
  }

  TEST_CASE("discriminant formula") {
    for (int i = 0; i < 100; ++i) {
      const Rational a = random_rational(-500, 500, 300);
      const auto c = to_weierstrass(a);
      const Integer direct = -16 * (4 * c.A * c.A * c.A + 27 * c.B * c.B);
      CHECK(c.discriminant == direct);
      CHECK(weierstrass_discriminant_formula(a) == direct);
      const Integer& l = a.num();
      const Integer& d = a.den();
      Integer closed = -4096 * 19683 * l * l * l * l * l * l * l * l * (l - d) * (l - d) * (l - d) * (l - 9 * d);
      CHECK(closed == direct);
      const bool special = a == Rational(1) || a == Rational(9);
      CHECK(c.singular() == special);
    }
  }

  TEST_CASE("group law identities") {
    const auto c = reduced_model(to_weierstrass(16));
    const CurvePoint P = pt(48, 270);
    REQUIRE(on_curve(c, P));
    CHECK(point_add(c, P, CurvePoint::infinity()) == P);
    CHECK(point_add(c, P, -P).is_infinity());
    CHECK(point_mul(c, 3, P).is_infinity());
    CHECK(*point_order(c, P) == 3);
    CHECK_THROWS_AS(point_add(to_weierstrass(9), P, P), SingularCurve);
  }

  TEST_CASE("associativity and multiplication") {
    for (const char* s : {"6", "3", "-1", "8", "-4"}) {
      INFO(s);
      const auto c = reduced_model(to_weierstrass(Coefficient::parse(s)));
      auto pts = integer_point_search(c, 3000);
      std::vector<CurvePoint> affine;
      for (auto& p : pts)
        if (!p.is_infinity()) affine.push_back(p);
      REQUIRE(affine.size() >= 2);
      for (std::size_t i = 0; i < affine.size() && i < 4; ++i)
        for (std::size_t j = 0; j < affine.size() && j < 4; ++j) {
          const CurvePoint& P = affine[i];
          const CurvePoint& Q = affine[j];
          const CurvePoint R = point_add(c, P, P);
          CHECK(point_add(c, point_add(c, P, Q), R) == point_add(c, P, point_add(c, Q, R)));
          CHECK(point_add(c, P, Q) == point_add(c, Q, P));
          CHECK(satisfies(c.A, c.B, point_add(c, P, Q)));
        }
      const CurvePoint& P = affine.front();
      CurvePoint acc = CurvePoint::infinity();
      for (int m = 1; m <= 12; ++m) {
        acc = point_add(c, acc, P);
        CHECK(point_mul(c, m, P) == acc);
        CHECK(satisfies(c.A, c.B, acc));
      }
      CHECK(point_mul(c, -2, P) == -point_mul(c, 2, P));
      CHECK(point_mul(c, 0, P).is_infinity());
    }
  }

  TEST_CASE("torsion orders") {
    const auto t16 = torsion(reduced_model(to_weierstrass(16)));
    CHECK(t16.order == 3);
    CHECK(t16.elements.size() == 3);
    CHECK(std::find(t16.elements.begin(), t16.elements.end(), pt(48, 270)) != t16.elements.end());
    CHECK(std::find(t16.elements.begin(), t16.elements.end(), pt(48, -270)) != t16.elements.end());
    CHECK(torsion(reduced_model(to_weierstrass(q("-1/11")))).order == 6);
    CHECK(torsion(reduced_model(to_weierstrass(q("9/73")))).order == 9);
    // The unreduced model has the same torsion.
    CHECK(torsion(to_weierstrass(16)).order == 3);
    for (const char* s : {"16", "-1/11", "9/73"}) {
      const auto c = reduced_model(to_weierstrass(Coefficient::parse(s)));
      const auto tr = torsion(c);
      for (const auto& p : tr.elements) {
        CHECK(satisfies(c.A, c.B, p));
        CHECK(point_mul(c, static_cast<long>(tr.order), p).is_infinity());
      }
    }
    CHECK_THROWS_AS(torsion(to_weierstrass(9)), SingularCurve);
  }

  TEST_CASE("torsion points map to the expected classes") {
    const auto c16 = reduced_model(to_weierstrass(16));
    for (const auto& p : torsion(c16).elements)
      if (!p.is_infinity()) CHECK(primitive_class(point_to_triple(c16, p)).triple == Triple(1, -1, 0));

    const auto c11 = reduced_model(to_weierstrass(q("-1/11")));
    std::set<unsigned> orders;
    for (const auto& p : torsion(c11).elements) {
      if (p.is_infinity()) continue;
      const Triple t = point_to_triple(c11, p);
      if (is_primitive(q("-1/11"), t)) {
        CHECK(canonicalize(t).triple == Triple(3, -2, -2));
        orders.insert(*point_order(c11, p));
      }
    }
    // y = z at the 2-torsion point; the order-6 points give the permuted triples.
    CHECK(orders == std::set<unsigned>{2, 6});
  }

  TEST_CASE("distinguished points give a vanishing entry") {
    for (const char* s : {"6", "-1/11", "16", "7/3"}) {
      const Coefficient a = Coefficient::parse(s);
      const auto c = to_weierstrass(a);
      const Integer& l = a.num();
      const Integer& r = a.den();
      for (int sign : {1, -1}) {
        const CurvePoint p = CurvePoint::affine(Rational(Integer(12 * l * l)), Rational(Integer(sign * 36 * l * l * (l - r))));
        REQUIRE(satisfies(c.A, c.B, p));
        const Triple t = point_to_triple(c, p);
        CHECK((t.y == 0 || t.z == 0));
      }
    }
  }

  TEST_CASE("integer point search") {
    const auto c16 = reduced_model(to_weierstrass(16));
    const auto pts = integer_point_search(c16, 100);
    CHECK(std::find(pts.begin(), pts.end(), pt(48, 270)) != pts.end());
    CHECK(std::find(pts.begin(), pts.end(), pt(48, -270)) != pts.end());
    for (const auto& p : integer_point_search(c16, 0)) CHECK(p.x() == Rational(0));

    // {3, 2, 1} on the a = 6 model: y + z = 72 aL^2 (aL - aR) k fixes k = 1/4320,
    // so X0 = 12 aL aR - x/(6 aL k) = -288 and Y0 = (y - z)/(2k) = 2160.
    const auto c6 = to_weierstrass(6);
    CHECK(satisfies(c6.A, c6.B, pt(-288, 2160)));
    CHECK(triple_to_point(6, Triple(3, 2, 1)) == pt(-288, 2160));
    const auto found = integer_point_search(c6, 300);
    CHECK(std::find(found.begin(), found.end(), pt(-288, 2160)) != found.end());
    CHECK(integer_point_search(c6, 300, 4) == found);
  }

  TEST_CASE("triple and point round trips") {
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
      const long r1 = oracle::uniform(-20, 20), r2 = oracle::uniform(1, 20), s1 = oracle::uniform(-20, 20),
                      s2 = oracle::uniform(1, 20);
      FamilySolution sol = [&]() -> FamilySolution {
        try {
          return rs_family(Rational(Integer(r1), Integer(r2)), Rational(Integer(s1), Integer(s2)));
        } catch (const ExcludedParameters&) {
          return a9_general(0, 0);
        }
      }();
      const Triple& t = sol.primitive.triple;
      if (sol.a == Coefficient(1) || sol.a == Coefficient(9) || t.y + t.z == 0) continue;
      const auto c = to_weierstrass(sol.a);
      const CurvePoint p = triple_to_point(sol.a, t);
      CHECK(satisfies(c.A, c.B, p));
      CHECK(primitive_class(point_to_triple(c, p)) == primitive_class(t));
      const auto red = reduced_model(c);
      const CurvePoint p_red = CurvePoint::affine(p.x() / pow(Rational(red.scale), 2), p.y() / pow(Rational(red.scale), 3));
      CHECK(satisfies(red.A, red.B, p_red));
      CHECK(to_origin_model(red, p_red) == p);
      CHECK(primitive_class(point_to_triple(red, p_red)) == primitive_class(t));
      ++checked;
    }
    CHECK(checked > 200);
  }
}
