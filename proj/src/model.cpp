#include "cubesum/model.hpp"

#include <algorithm>
#include <sstream>

#include "cubesum/errors.hpp"

namespace cubesum {

Triple Triple::divided_by(const Integer& d) const {
  Triple r;
  mpz_divexact(r.x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  mpz_divexact(r.y.get_mpz_t(), y.get_mpz_t(), d.get_mpz_t());
  mpz_divexact(r.z.get_mpz_t(), z.get_mpz_t(), d.get_mpz_t());
  return r;
}

Triple Triple::scaled(const Integer& k) const { return {Integer(x * k), Integer(y * k), Integer(z * k)}; }

std::ostream& operator<<(std::ostream& os, const Triple& t) {
  return os << '{' << t.x.get_str() << ", " << t.y.get_str() << ", " << t.z.get_str() << '}';
}

std::string to_string(const Triple& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

bool canonical_less(const Triple& a, const Triple& b) {
  const Integer ma = std::max({abs(a.x), abs(a.y), abs(a.z)});
  const Integer mb = std::max({abs(b.x), abs(b.y), abs(b.z)});
  if (ma != mb) return ma < mb;
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

namespace {

Integer sum(const Triple& t) { return t.x + t.y + t.z; }

Integer sum_of_cubes(const Triple& t) { return t.x * t.x * t.x + t.y * t.y * t.y + t.z * t.z * t.z; }

}  // namespace

bool is_solution(const Coefficient& a, const Triple& t) {
  if (t.is_zero()) return false;
  const Integer s = sum(t);
  return a.num() * sum_of_cubes(t) == a.den() * s * s * s;
}

bool has_vectorlike_pair(const Triple& t) { return t.x + t.y == 0 || t.y + t.z == 0 || t.z + t.x == 0; }

bool is_primitive(const Coefficient& a, const Triple& t) {
  if (!is_solution(a, t)) return false;
  if (t.x == 0 || t.y == 0 || t.z == 0) return false;
  if (gcd3(t.x, t.y, t.z) != 1) return false;
  return !has_vectorlike_pair(t);
}

CanonicalTriple canonicalize(const Triple& t) {
  const std::array<Integer, 3> src = t.as_array();
  std::optional<CanonicalTriple> best;
  for (const bool flip : {false, true}) {
    std::array<Integer, 3> v = src;
    if (flip)
      for (auto& e : v) e = -e;
    std::array<int, 3> idx{0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
      const int c = cmp(abs(v[i]), abs(v[j]));
      if (c != 0) return c > 0;
      return sgn(v[i]) > sgn(v[j]);
    });
    CanonicalTriple cand{{v[idx[0]], v[idx[1]], v[idx[2]]}, flip, idx};
    const bool all_zero = cand.triple.is_zero();
    if (!all_zero && sgn(cand.triple.x) <= 0) continue;
    if (all_zero && flip) continue;
    if (!best) {
      best = std::move(cand);
      continue;
    }
    // Both signs admissible only when the leading magnitude appears with both
    // signs; the larger tuple wins.
    const auto& b = best->triple;
    const auto& c = cand.triple;
    if (std::tie(c.x, c.y, c.z) > std::tie(b.x, b.y, b.z)) best = std::move(cand);
  }
  return *best;
}

CanonicalTriple primitive_class(const Triple& t) {
  const Integer g = gcd3(t.x, t.y, t.z);
  return canonicalize(g == 0 ? t : t.divided_by(g));
}

TuvTriple xyz_to_tuv(const Triple& t) { return {t.x + t.y, t.y + t.z, t.z + t.x}; }

Triple tuv_to_xyz(const TuvTriple& s) {
  const Integer total = s.t + s.u + s.v;
  if (mpz_odd_p(total.get_mpz_t())) throw NonIntegralResult("t + u + v is odd; x, y, z would be half-integers");
  Triple r{Integer(s.t - s.u + s.v), Integer(s.t + s.u - s.v), Integer(-s.t + s.u + s.v)};
  return r.divided_by(2);
}

bool tuv_equation_holds(const Coefficient& a, const TuvTriple& s) {
  const Integer total = s.t + s.u + s.v;
  // (aL - aR)(t+u+v)^3 == 24 aL t u v, after multiplying through by aR.
  return (a.num() - a.den()) * total * total * total == 24 * a.num() * s.t * s.u * s.v;
}

std::optional<Rational> a_from_triple(const Triple& t) {
  const Integer s = sum(t);
  const Integer cubes = sum_of_cubes(t);
  const Integer s3 = s * s * s;
  if (cubes == 0) {
    if (s3 == 0) throw Indeterminate("sum and sum of cubes both vanish for " + to_string(t));
    return std::nullopt;
  }
  return Rational(s3, cubes);
}

std::optional<Rational> a_from_rs(const Rational& r, const Rational& s) {
  const Rational den = Rational(6) * r * r + pow(s, 3) + Rational(2);
  if (den.is_zero()) return std::nullopt;
  return pow(s + Rational(2), 3) / den;
}

RsPair rs_from_triple(const Triple& t) {
  const Integer xy = t.x + t.y;
  if (xy == 0) throw VectorlikePair("x + y == 0 in " + to_string(t));
  RsPair out{Rational(Integer(t.x - t.y), xy), Rational(Integer(2 * t.z), xy)};
  if (sum_of_cubes(t) != 0) {
    const auto direct = a_from_triple(t);
    const auto via_rs = a_from_rs(out.r, out.s);
    if (!direct || !via_rs || *direct != *via_rs)
      throw PreconditionViolated("rs_from_triple: coefficient cross-check failed for " + to_string(t));
  }
  return out;
}

Rational anomaly_scale(const Integer& n, const Triple& t) {
  if (n < 1) throw PreconditionViolated("anomaly_scale: N must be >= 1");
  if (!is_solution(Coefficient(Rational(Integer(n * n))), t))
    throw NotASolution(to_string(t) + " does not solve a = " + Integer(n * n).get_str());
  const Rational scale(sum(t), n);
  // N (z_u - 4 z_q)^3 must reproduce the sum of cubes.
  if (Rational(n) * pow(scale, 3) != Rational(sum_of_cubes(t)))
    throw PreconditionViolated("anomaly_scale: cubic relation failed");
  return scale;
}

}  // namespace cubesum
