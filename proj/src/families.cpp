#include "cubesum/families.hpp"

#include <algorithm>
#include <numeric>

#include "cubesum/errors.hpp"

namespace cubesum {

std::string_view family_name(FamilyId id) {
  switch (id) {
    case FamilyId::CubeRatio: return "cube";
    case FamilyId::Frac5q2: return "frac5q2";
    case FamilyId::FibonacciLucas: return "fib";
    case FamilyId::Frac2p2q2: return "frac2p2q2";
    case FamilyId::CubicFrac: return "cubicfrac";
    case FamilyId::RsUniversal: return "rs";
    case FamilyId::MinusFour3q2: return "minus4";
    case FamilyId::ReciprocalInteger: return "reciprocal";
    case FamilyId::TwoVariable: return "twovar";
    case FamilyId::A9General: return "a9";
    case FamilyId::A9Mu: return "a9mu";
    case FamilyId::SquareCube: return "square-cube";
    case FamilyId::SquareFib: return "square-fib";
  }
  return "?";
}

namespace {

FamilySolution make_solution(FamilyId id, std::vector<Rational> params, const Rational& a, Triple raw) {
  if (a.is_zero()) throw ExcludedParameters("parameters give a = 0");
  Coefficient coeff(a);
  if (!is_solution(coeff, raw))
    throw std::logic_error(std::string(family_name(id)) + ": generated " + to_string(raw) +
                           " does not solve a = " + a.to_string());
  CanonicalTriple prim = primitive_class(raw);
  return {id, std::move(params), std::move(coeff), std::move(raw), std::move(prim)};
}

void exclude_if(bool cond, const std::string& family, const std::string& why) {
  if (cond) throw ExcludedParameters(family + ": " + why);
}

Integer cube(const Integer& v) { return v * v * v; }

}  // namespace

FamilySolution cube_family(const Integer& p, const Integer& q) {
  exclude_if(q == 0, "cube", "q = 0 (y = 0)");
  exclude_if(p == 0, "cube", "p = 0 gives a = 0");
  exclude_if(p == q, "cube", "p = q makes x + y = p^3 - q^3 vanish");
  exclude_if(p == -2 * q, "cube", "q/p = -1/2 makes x = 0");
  Triple raw{Integer((p + 2 * q) * (p * p + p * q + 4 * q * q)),
             Integer(-3 * q * (p * p + 2 * p * q + 3 * q * q)),
             Integer(-p * p * p - 3 * p * p * q - 6 * p * q * q + q * q * q)};
  return make_solution(FamilyId::CubeRatio, {p, q}, Rational(cube(p), cube(q)), std::move(raw));
}

FamilySolution frac_family_5q2(const Integer& p, const Integer& q) {
  exclude_if(q == 0, "frac5q2", "q = 0");
  exclude_if(gcd(p, q) != 1, "frac5q2", "p and q must be coprime");
  exclude_if(p == 3 * q || p == -3 * q, "frac5q2", "p/q = +-3");
  exclude_if(p == 9 * q || p == -9 * q, "frac5q2", "p/q = +-9");
  Triple raw{Integer(12 * q), Integer(-p - 9 * q), Integer(p - 9 * q)};
  return make_solution(FamilyId::Frac5q2, {p, q}, Rational(Integer(4 * q * q), Integer(p * p - 5 * q * q)),
                       std::move(raw));
}

FamilySolution fibonacci_family(unsigned n) {
  exclude_if(n == 0, "fib", "n >= 1 required");
  exclude_if(n == 2, "fib", "n = 2 is not allowed (it gives p/q = 3)");
  const auto [f, l] = fibonacci_lucas(n);
  const Integer f_prev = fibonacci_lucas(n - 1).first;
  Triple raw{Integer(6 * f), Integer(-5 * f - f_prev), Integer(-4 * f + f_prev)};
  Integer a = f * f;
  if (n % 2 == 1) a = -a;
  return make_solution(FamilyId::FibonacciLucas, {Rational(static_cast<long>(n))}, Rational(a), std::move(raw));
}

FamilySolution frac_family_2p2q2(const Integer& p, const Integer& q) {
  exclude_if(q == 0, "frac2p2q2", "q = 0");
  exclude_if(gcd(p, q) != 1, "frac2p2q2", "p and q must be coprime");
  exclude_if(p == q || p == -q, "frac2p2q2", "p/q = +-1");
  exclude_if(p == 2 * q || p == -2 * q, "frac2p2q2", "p/q = +-2");
  Triple raw{Integer(p + q), q, Integer(-p + q)};
  return make_solution(FamilyId::Frac2p2q2, {p, q}, Rational(Integer(9 * q * q), Integer(2 * p * p + q * q)),
                       std::move(raw));
}

FamilySolution cubic_frac_family(const Integer& p, const Integer& q) {
  exclude_if(p == 0 || q == 0, "cubicfrac", "p and q must be nonzero");
  exclude_if(gcd(p, q) != 1, "cubicfrac", "p and q must be coprime");
  exclude_if(q == -p, "cubicfrac", "-q/p = 1");
  exclude_if(q == -2 * p, "cubicfrac", "-q/p = 2");
  exclude_if(3 * q == -2 * p, "cubicfrac", "-q/p = 2/3");
  const Integer den = 2 * p * p * p + p * p * q - 6 * q * q * q;
  exclude_if(den == 0, "cubicfrac", "denominator vanishes");
  Triple raw{Integer((p + q) * (2 * p + q)), Integer(-p * (2 * p + 3 * q)), Integer(-2 * p * p - p * q - q * q)};
  return make_solution(FamilyId::CubicFrac, {p, q}, Rational(Integer(p * p * (2 * p + q)), den), std::move(raw));
}

FamilySolution rs_family(const Rational& r, const Rational& s) {
  exclude_if(s.is_zero(), "rs", "s = 0");
  exclude_if(r.abs() == Rational(1), "rs", "|r| = 1");
  exclude_if(r == s + Rational(1) || r == -(s + Rational(1)), "rs", "r = +-(s + 1)");
  exclude_if(s == Rational(-2), "rs", "s = -2 gives a = 0");
  const auto a = a_from_rs(r, s);
  exclude_if(!a, "rs", "denominator 6r^2 + s^3 + 2 vanishes");
  const Integer& r1 = r.num();
  const Integer& r2 = r.den();
  const Integer& s1 = s.num();
  const Integer& s2 = s.den();
  Triple raw{Integer(s1 * r2), Integer(s2 * (r2 + r1)), Integer(s2 * (r2 - r1))};
  return make_solution(FamilyId::RsUniversal, {r, s}, *a, std::move(raw));
}

FamilySolution minus_four_family(const Integer& q) {
  exclude_if(q == 0, "minus4", "q = 0");
  FamilySolution sol = rs_family(Rational(Integer(-6 * q * q * q)), Rational(Integer(-6 * q * q)));
  sol.family = FamilyId::MinusFour3q2;
  sol.params = {q};
  return sol;
}

FamilySolution reciprocal_integer_family(const Integer& p, const Integer& q) {
  exclude_if(q == 0, "reciprocal", "q = 0");
  exclude_if(q == p || q == -p, "reciprocal", "q = +-p");
  exclude_if(q == 1 + p || q == 1 - p, "reciprocal", "q = 1 +- p");
  const Integer inv = 6 * q * (p * p - (q - 1) * (q - 1)) + 1;
  Triple raw{Integer(1 - 2 * q), Integer(p + q), Integer(-p + q)};
  return make_solution(FamilyId::ReciprocalInteger, {p, q}, Rational(Integer(1), inv), std::move(raw));
}

FamilySolution two_variable_family(const Integer& p, const Integer& q) {
  exclude_if(p == 0, "twovar", "p = 0");
  exclude_if(q == p || q == -p, "twovar", "alpha = q/p = +-1 makes x or y vanish");
  Triple raw{Integer(p + q), Integer(p - q), Integer(0)};
  return make_solution(FamilyId::TwoVariable, {p, q}, Rational(Integer(4 * p * p), Integer(p * p + 3 * q * q)),
                       std::move(raw));
}

namespace {

Triple a9_formula(long l1_, long l2_) {
  const Integer l1 = l1_, l2 = l2_;
  const Integer c1 = cube(l1), c2 = cube(l2), c12 = cube(Integer(l1 + l2));
  const long delta = (l1_ == 0 && l2_ == 0) ? 1 : 0;
  Triple twice{Integer(c1 + c2 + c12), Integer(-c1 + c2 - c12), Integer(c1 - c2 - c12)};
  Triple half = twice.divided_by(2);
  half.x += delta;
  half.y += delta;
  half.z += delta;
  return half;
}

/// l1 + l2 + l3 = 0; the canonical pair is the two same-signed values made
/// positive and sorted.
std::optional<std::pair<long, long>> canonical_a9_pair(long l1, long l2) {
  if (l1 == 0 && l2 == 0) return std::pair<long, long>{0, 0};
  const long l3 = -(l1 + l2);
  if (l1 == 0 || l2 == 0 || l3 == 0) return std::nullopt;
  const long g = std::gcd(std::gcd(l1, l2), l3);
  std::array<long, 3> v{l1 / g, l2 / g, l3 / g};
  if (std::count_if(v.begin(), v.end(), [](long e) { return e > 0; }) != 2)
    for (auto& e : v) e = -e;
  std::vector<long> pos;
  for (long e : v)
    if (e > 0) pos.push_back(e);
  std::sort(pos.begin(), pos.end(), std::greater<>());
  return std::pair<long, long>{pos[0], pos[1]};
}

}  // namespace

A9Relaxed a9_general_relaxed(long l1, long l2) {
  Triple raw = a9_formula(l1, l2);
  // The formula at vectorlike parameters still solves the equation; only
  // primitivity fails.
  Coefficient nine(9);
  if (!is_solution(nine, raw)) throw std::logic_error("a9 formula failed at (" + std::to_string(l1) + ", " + std::to_string(l2) + ")");
  FamilySolution sol{FamilyId::A9General, {Rational(l1), Rational(l2)}, nine, raw, primitive_class(raw)};
  return {std::move(sol), canonical_a9_pair(l1, l2)};
}

FamilySolution a9_general(long l1, long l2) {
  const bool zero = l1 == 0 && l2 == 0;
  const bool in_domain = l1 >= l2 && l2 >= 1 && std::gcd(l1, l2) == 1;
  if (!zero && !in_domain) {
    auto canon = canonical_a9_pair(l1, l2);
    std::string msg = "a9: (" + std::to_string(l1) + ", " + std::to_string(l2) +
                      ") outside l1 >= l2 >= 1 with gcd 1";
    if (canon)
      msg += "; equivalent canonical pair (" + std::to_string(canon->first) + ", " + std::to_string(canon->second) + ")";
    else
      msg += "; parameters give a vectorlike solution";
    throw NonCanonicalParameters(msg, canon);
  }
  return a9_general_relaxed(l1, l2).solution;
}

std::optional<std::pair<long, long>> a9_parameters(const Triple& t) {
  if (!is_primitive(Coefficient(9), t)) return std::nullopt;
  const CanonicalTriple c = canonicalize(t);
  if (c.triple == Triple(1, 1, 1)) return std::pair<long, long>{0, 0};
  const auto l2 = is_perfect_cube(Integer(t.x + t.y));
  const auto l3 = is_perfect_cube(Integer(t.y + t.z));
  const auto l1 = is_perfect_cube(Integer(t.z + t.x));
  if (!l1 || !l2 || !l3 || *l1 + *l2 + *l3 != 0) return std::nullopt;
  if (!l1->fits_slong_p() || !l2->fits_slong_p()) return std::nullopt;
  auto pair = canonical_a9_pair(l1->get_si(), l2->get_si());
  if (!pair || !(a9_general(pair->first, pair->second).primitive == c)) return std::nullopt;
  return pair;
}

FamilySolution a9_from_mu(const Rational& mu) {
  const Integer& n = mu.num();
  const Integer& d = mu.den();
  const Integer d3 = cube(d);
  Triple raw{Integer(3 * n * n * d + 5 * d3), Integer(-(cube(n) + 3 * n * d * d + 4 * d3)),
             Integer(cube(n) + 3 * n * d * d - 4 * d3)};
  return make_solution(FamilyId::A9Mu, {mu}, Rational(9), std::move(raw));
}

std::vector<FamilySolution> square_families(const Integer& n) {
  std::vector<FamilySolution> out;
  if (n < 1) return out;
  if (auto k = is_perfect_cube(n); k && abs(*k) != 1) {
    FamilySolution sol = cube_family(Integer(*k * *k), Integer(1));
    sol.family = FamilyId::SquareCube;
    sol.params = {*k};
    out.push_back(std::move(sol));
  }
  for (unsigned k = 2;; ++k) {
    const Integer f = fibonacci_lucas(2 * k).first;
    if (f > n) break;
    if (f == n) {
      FamilySolution sol = fibonacci_family(2 * k);
      sol.family = FamilyId::SquareFib;
      sol.params = {Rational(static_cast<long>(k))};
      out.push_back(std::move(sol));
      break;
    }
  }
  return out;
}

}  // namespace cubesum
