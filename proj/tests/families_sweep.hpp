#pragma once

// Random valid parameters for each generator, checked against the master
// equation in machine integers with the coefficient computed from the
// generator's defining formula (not from the library).

#include <functional>
#include <string>
#include <vector>

#include "cubesum/errors.hpp"
#include "cubesum/families.hpp"
#include "oracles.hpp"

namespace sweep {

struct Outcome {
  std::string family;
  int checked = 0;
  int failed = 0;
};

inline bool triple_solves(long aL, long aR, const cubesum::Triple& t) {
  if (!t.x.fits_slong_p() || !t.y.fits_slong_p() || !t.z.fits_slong_p()) return false;
  const long g = std::gcd(aL, aR);
  return oracle::solves(aL / g, aR / g, t.x.get_si(), t.y.get_si(), t.z.get_si());
}

using Gen = std::function<bool()>;

inline std::vector<std::pair<std::string, Gen>> generators() {
  using namespace cubesum;
  using oracle::uniform;
  const auto coprime_pair = [](long lo, long hi) {
    for (;;) {
      const long p = uniform(lo, hi), q = uniform(lo, hi);
      if (q != 0 && std::gcd(p, q) == 1) return std::pair<long, long>{p, q};
    }
  };
  std::vector<std::pair<std::string, Gen>> g;
  g.emplace_back("cube", [] {
    for (;;) {
      const long p = uniform(-200, 200), q = uniform(-200, 200);
      if (q == 0 || p == 0 || p == q || p == -2 * q) continue;
      const auto s = cube_family(p, q);
      return triple_solves(p * p * p, q * q * q, s.raw);
    }
  });
  g.emplace_back("frac5q2", [=] {
    for (;;) {
      const auto [p, q] = coprime_pair(-500, 500);
      if (p == 3 * q || p == -3 * q || p == 9 * q || p == -9 * q) continue;
      long aR = p * p - 5 * q * q, aL = 4 * q * q;
      if (aR < 0) aR = -aR, aL = -aL;
      return triple_solves(aL, aR, frac_family_5q2(p, q).raw);
    }
  });
  g.emplace_back("fib", [] {
    for (;;) {
      const unsigned n = static_cast<unsigned>(uniform(1, 15));
      if (n == 2) continue;
      const long f = static_cast<long>(oracle::fib_lucas(n).first);
      return triple_solves(n % 2 ? -f * f : f * f, 1, fibonacci_family(n).raw);
    }
  });
  g.emplace_back("frac2p2q2", [=] {
    for (;;) {
      const auto [p, q] = coprime_pair(-2000, 2000);
      if (p == q || p == -q || p == 2 * q || p == -2 * q) continue;
      return triple_solves(9 * q * q, 2 * p * p + q * q, frac_family_2p2q2(p, q).raw);
    }
  });
  g.emplace_back("cubicfrac", [=] {
    for (;;) {
      const auto [p, q] = coprime_pair(-300, 300);
      if (p == 0 || q == -p || q == -2 * p || 3 * q == -2 * p) continue;
      long aR = 2 * p * p * p + p * p * q - 6 * q * q * q, aL = p * p * (2 * p + q);
      if (aR == 0 || aL == 0) continue;
      if (aR < 0) aR = -aR, aL = -aL;
      return triple_solves(aL, aR, cubic_frac_family(p, q).raw);
    }
  });
  g.emplace_back("rs", [] {
    for (;;) {
      const long r1 = uniform(-30, 30), r2 = uniform(1, 30), s1 = uniform(-30, 30), s2 = uniform(1, 30);
      const Rational r{Integer(r1), Integer(r2)}, s{Integer(s1), Integer(s2)};
      // a = (s + 2)^3/(6r^2 + s^3 + 2), cleared with r = R1/R2, s = S1/S2 reduced.
      const long R1 = r.num().get_si(), R2 = r.den().get_si(), S1 = s.num().get_si(), S2 = s.den().get_si();
      const long aL = (S1 + 2 * S2) * (S1 + 2 * S2) * (S1 + 2 * S2) * R2 * R2;
      long aR = 6 * R1 * R1 * S2 * S2 * S2 + (S1 * S1 * S1 + 2 * S2 * S2 * S2) * R2 * R2;
      if (S1 == 0 || R1 == R2 || R1 == -R2 || aR == 0 || aL == 0) continue;
      if (r == s + Rational(1) || r == -(s + Rational(1))) continue;
      long L = aL;
      if (aR < 0) aR = -aR, L = -L;
      return triple_solves(L, aR, rs_family(r, s).raw);
    }
  });
  g.emplace_back("minus4", [] {
    const long q = uniform(1, 40) * (uniform(0, 1) ? 1 : -1);
    const long k = 3 * q * q - 1;
    const auto s = minus_four_family(q);
    const cubesum::Triple& t = s.raw;
    // a = -4 k^3 can exceed 64 bits only beyond |q| = 40; evaluate in 128 bits.
    const oracle::i128 x = t.x.get_si(), y = t.y.get_si(), z = t.z.get_si(), sum = x + y + z;
    return oracle::i128(-4) * k * k * k * (x * x * x + y * y * y + z * z * z) == sum * sum * sum;
  });
  g.emplace_back("reciprocal", [] {
    for (;;) {
      const long p = uniform(-300, 300), q = uniform(-300, 300);
      if (q == 0 || q == p || q == -p || q == 1 + p || q == 1 - p) continue;
      long inv = 6 * q * (p * p - (q - 1) * (q - 1)) + 1;
      long aL = 1;
      if (inv < 0) inv = -inv, aL = -1;
      return triple_solves(aL, inv, reciprocal_integer_family(p, q).raw);
    }
  });
  g.emplace_back("twovar", [] {
    for (;;) {
      const long p = uniform(-1000, 1000), q = uniform(-1000, 1000);
      if (p == 0 || q == p || q == -p) continue;
      return triple_solves(4 * p * p, p * p + 3 * q * q, two_variable_family(p, q).raw);
    }
  });
  g.emplace_back("a9", [] {
    for (;;) {
      const long l1 = uniform(1, 400), l2 = uniform(1, 400);
      if (l1 < l2 || std::gcd(l1, l2) != 1) continue;
      return triple_solves(9, 1, a9_general(l1, l2).raw);
    }
  });
  g.emplace_back("a9mu", [] {
    for (;;) {
      const long n = uniform(-300, 300), d = uniform(1, 300);
      return triple_solves(9, 1, a9_from_mu(Rational(Integer(n), Integer(d))).raw);
    }
  });
  return g;
}

inline std::vector<Outcome> run(int per_family) {
  std::vector<Outcome> out;
  for (auto& [name, gen] : generators()) {
    Outcome o{name, 0, 0};
    for (int i = 0; i < per_family; ++i) {
      bool ok = false;
      try {
        ok = gen();
      } catch (const std::exception&) {
        ok = false;
      }
      ++o.checked;
      if (!ok) ++o.failed;
    }
    out.push_back(o);
  }
  return out;
}

}  // namespace sweep
