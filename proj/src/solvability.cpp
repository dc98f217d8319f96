#include "cubesum/solvability.hpp"

#include <algorithm>
#include <functional>

#include "cubesum/elliptic.hpp"
#include "cubesum/errors.hpp"
#include "cubesum/families.hpp"
#include "cubesum/search.hpp"

namespace cubesum {

std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::AEqualsOne: return "a-equals-one";
    case TheoremId::Theorem_a4: return "theorem-a4";
    case TheoremId::PrimePower: return "prime-power";
    case TheoremId::PQSquared: return "pq-squared";
    case TheoremId::CuratedRankZero: return "curated-rank-zero";
  }
  return "?";
}

namespace {

void require_nonzero(const Coefficient& a) {
  if (a.is_zero()) throw InvalidCoefficient("a = 0 is excluded");
}

/// 24a/(a - 1) when it is an integer >= 2.
std::optional<Integer> level_of(const Coefficient& a) {
  if (a.value() == Rational(1)) return std::nullopt;
  const Rational m = Rational(24) * a.value() / (a.value() - Rational(1));
  if (!m.is_integer() || m.num() < 2) return std::nullopt;
  return m.num();
}

bool all_factors_2_mod_3(const Integer& n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factorize(abs(n)))
    if (p % 3 != 2) return false;
  return true;
}

}  // namespace

std::optional<NoPrimitive> check_prime_power(const Coefficient& a) {
  require_nonzero(a);
  if (a.value() == Rational(-1, 11)) return std::nullopt;
  const auto m = level_of(a);
  if (!m) return std::nullopt;
  const Factorization f = factorize(*m);
  if (f.size() != 1) return std::nullopt;
  const auto& [p, n] = f.front();
  if (p % 3 != 2 || n % 3 == 0) return std::nullopt;
  if (!all_factors_2_mod_3(Integer(*m - 27))) return std::nullopt;
  std::string note = "24a/(a-1) = " + p.get_str() + "^" + std::to_string(n);
  if (a.value() == Rational(25)) note += "; this case is also settled by an independent published argument";
  return NoPrimitive{TheoremId::PrimePower, note};
}

std::optional<NoPrimitive> check_pq_squared(const Coefficient& a) {
  require_nonzero(a);
  const auto m = level_of(a);
  if (!m) return std::nullopt;
  const auto hit = [](long p, const Integer& q) {
    return NoPrimitive{TheoremId::PQSquared, "24a/(a-1) = " + std::to_string(p) + " * " + q.get_str() + "^2"};
  };
  if (*m == 18) return hit(2, 3);
  if (*m == 20) return hit(5, 2);
  if (*m == 28) return hit(7, 2);
  if (*m % 2 != 0) return std::nullopt;
  const auto q = is_perfect_square(Integer(*m / 2));
  if (!q || *q % 3 != 1 || !is_prime(*q)) return std::nullopt;
  if (!is_prime(Integer(2 * *q * *q - 27)) || cubic_residue_4(*q)) return std::nullopt;
  return hit(2, *q);
}

std::vector<Triple> equal_pair_solve(const Coefficient& a, bool integer_only, long bound) {
  require_nonzero(a);
  if (a.is_integer()) {
    if (a.value() == Rational(9)) return {Triple(1, 1, 1), Triple(-5, 4, 4)};
    if (a.value() == Rational(4)) return {Triple(1, 1, 0)};
    return {};
  }
  if (integer_only) throw OutOfTheoremScope("equal-pair classification covers integer a only; got a = " + a.to_string());
  const Integer& l = a.num();
  const Integer& r = a.den();
  std::vector<Triple> out;
  for (long y = 1; y <= bound; ++y) {
    const Integer Y = y;
    const std::array<Integer, 4> c{Integer(l - r), Integer(-6 * r * Y), Integer(-12 * r * Y * Y),
                                   Integer((2 * l - 8 * r) * Y * Y * Y)};
    const auto roots = integer_roots_in_range(c, Integer(-bound), Integer(bound));
    if (!roots) continue;
    for (const Integer& x : *roots)
      if (gcd(x, Y) == 1) out.emplace_back(x, Y, Y);
  }
  return out;
}

std::optional<Solvable> family_witness(const Coefficient& a, long bound) {
  require_nonzero(a);
  const Rational& av = a.value();
  std::optional<Solvable> found;
  const auto attempt = [&](const std::function<FamilySolution()>& make) {
    if (found) return;
    try {
      FamilySolution s = make();
      if (s.a == a && is_primitive(a, s.primitive.triple))
        found = Solvable{s.primitive, "family:" + std::string(family_name(s.family))};
    } catch (const Error&) {
    }
  };

  if (av == Rational(9)) attempt([] { return a9_general(0, 0); });
  if (auto c = rational_cbrt(av)) attempt([&] { return cube_family(c->num(), c->den()); });
  if (auto n = rational_sqrt(av); n && n->is_integer()) {
    for (auto& s : square_families(n->num())) attempt([&] { return s; });
  }
  if (a.is_integer()) {
    for (unsigned n = 1; n < 400; ++n) {
      const Integer f = fibonacci_lucas(n).first;
      if (f * f > abs(a.num())) break;
      attempt([n] { return fibonacci_family(n); });
    }
    if (a.num() % 4 == 0) {
      if (auto c = is_perfect_cube(Integer(-a.num() / 4)); c && (*c + 1) % 3 == 0) {
        if (auto q = is_perfect_square(Integer((*c + 1) / 3))) attempt([&] { return minus_four_family(*q); });
      }
    }
  }
  if (auto t = rational_sqrt(Rational(4) / av + Rational(5))) {
    attempt([&] { return frac_family_5q2(t->num(), t->den()); });
    attempt([&] { return frac_family_5q2(Integer(-t->num()), t->den()); });
  }
  if (auto t = rational_sqrt((Rational(9) / av - Rational(1)) / Rational(2))) {
    attempt([&] { return frac_family_2p2q2(t->num(), t->den()); });
  }
  if (!found) {
    // (aL - aR) p^2 (2p + q) = 6 aL q^3
    const Integer& l = a.num();
    const Integer& r = a.den();
    for (long p = -bound; p <= bound && !found; ++p)
      for (long q = -bound; q <= bound && !found; ++q) {
        if (p == 0 || q == 0) continue;
        const Integer P = p, Q = q;
        if ((l - r) * P * P * (2 * P + Q) == 6 * l * Q * Q * Q) attempt([&] { return cubic_frac_family(P, Q); });
      }
  }
  if (!found && av.num() == av.sign()) {
    // 1/a = k = 6q(p^2 - (q - 1)^2) + 1
    const Integer k = av.den() * av.sign();
    for (long q = -bound; q <= bound && !found; ++q) {
      if (q == 0 || (k - 1) % (6 * q) != 0) continue;
      const Integer Q = q;
      if (auto p = is_perfect_square(Integer((k - 1) / (6 * Q) + (Q - 1) * (Q - 1))))
        attempt([&] { return reciprocal_integer_family(*p, Q); });
    }
  }
  // r^2 = ((s + 2)^3 / a - s^3 - 2) / 6
  for (long s2 = 1; s2 <= bound && !found; ++s2)
    for (long s1 = -bound; s1 <= bound && !found; ++s1) {
      if (gcd(Integer(s1), Integer(s2)) != 1) continue;
      const Rational s{Integer(s1), Integer(s2)};
      const Rational r2 = (pow(s + Rational(2), 3) / av - pow(s, 3) - Rational(2)) / Rational(6);
      if (auto r = rational_sqrt(r2)) attempt([&] { return rs_family(*r, s); });
    }
  return found;
}

namespace {

std::vector<CanonicalTriple> primitive_classes_of(const Coefficient& a, const WeierstrassCurve& curve,
                                                  const std::vector<CurvePoint>& points) {
  std::vector<CanonicalTriple> out;
  for (const auto& p : points) {
    if (p.is_infinity()) continue;
    const Triple t = point_to_triple(curve, p);
    if (!is_primitive(a, t)) continue;
    CanonicalTriple c = canonicalize(t);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const CanonicalTriple& x, const CanonicalTriple& y) { return canonical_less(x.triple, y.triple); });
  return out;
}

}  // namespace

Verdict classify(const Coefficient& a, const ClassifyOptions& options) {
  require_nonzero(a);
  Verdict v{Unknown{}, {}};
  const Rational& av = a.value();

  if (av == Rational(1)) {
    v.outcome = NoPrimitive{TheoremId::AEqualsOne, "t,u,v form reduces to 0 = 24tuv, forcing a vectorlike pair"};
    return v;
  }
  if (av == Rational(4)) {
    v.outcome = NoPrimitive{TheoremId::Theorem_a4, "a = 4 admits no primitive solution"};
    return v;
  }
  if (auto np = check_prime_power(a)) {
    v.outcome = *np;
    return v;
  }
  if (auto np = check_pq_squared(a)) {
    v.outcome = *np;
    return v;
  }

  // Cheap stages all run; the smallest witness wins.
  std::optional<Solvable> witness = family_witness(a, options.family_bound);
  const auto offer = [&witness](Solvable s) {
    if (!witness || canonical_less(s.witness.triple, witness->witness.triple)) witness = std::move(s);
  };

  if (av != Rational(9)) {
    const WeierstrassCurve curve = reduced_model(to_weierstrass(a));
    const TorsionReport tr = torsion(curve);
    TorsionEvidence te{tr.order, primitive_classes_of(a, curve, tr.elements)};
    if (!te.primitive_classes.empty()) offer(Solvable{te.primitive_classes.front(), "torsion"});
    v.evidence.emplace_back(std::move(te));

    if (options.point_bound > 0) {
      const auto pts = integer_point_search(curve, options.point_bound, options.parallelism);
      PointSearchEvidence pe{options.point_bound, pts.size(), primitive_classes_of(a, curve, pts)};
      if (!pe.primitive_classes.empty()) offer(Solvable{pe.primitive_classes.front(), "integer-point"});
      v.evidence.emplace_back(std::move(pe));
    }
  }

  if (!witness && options.search_height >= 1) {
    const SearchResult r = enumerate_primitive({a, options.search_height, options.parallelism, true});
    if (!r.primitives.empty()) witness = Solvable{r.primitives.front(), "search"};
    v.evidence.emplace_back(SearchEvidence{options.search_height, r.primitives.size()});
  }

  if (!witness && options.covering_bound >= 1) {
    const SearchResult r = covering_search(a, options.covering_bound, options.parallelism);
    if (!r.primitives.empty()) witness = Solvable{r.primitives.front(), "covering"};
    v.evidence.emplace_back(CoveringEvidence{options.covering_bound, tuv_coverings(a).size(), r.primitives.size()});
  }

  if (options.use_curated) {
    const CuratedTable& table = options.curated ? *options.curated : CuratedTable::builtin();
    if (auto entry = table.find(a)) {
      if (!witness && entry->no_primitive() && entry->rank == 0) {
        v.outcome = NoPrimitive{TheoremId::CuratedRankZero, "transcribed: " + entry->evidence};
      } else if (!witness && !entry->no_primitive()) {
        for (const auto& t : entry->solutions)
          if (is_primitive(a, t)) {
            witness = Solvable{canonicalize(t), "curated"};
            break;
          }
      }
      v.evidence.emplace_back(CuratedNote{*entry});
    }
  }

  if (witness) {
    if (!is_primitive(a, witness->witness.triple)) throw std::logic_error("classify produced a non-primitive witness");
    v.outcome = std::move(*witness);
  }
  return v;
}

Verdict classify(const Coefficient& a, std::int64_t search_height) {
  ClassifyOptions o;
  o.search_height = search_height;
  return classify(a, o);
}

}  // namespace cubesum
