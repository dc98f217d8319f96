#include "cubesum/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>
#include <type_traits>

#include "cubesum/errors.hpp"
#include "cubesum/families.hpp"

namespace cubesum {

namespace {

using i128 = __int128;

// Integer helpers shared by the machine-word and GMP code paths.

int sign_of(i128 v) { return (v > 0) - (v < 0); }
int sign_of(const Integer& v) { return sgn(v); }

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
i128 ceil_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

i128 isqrt(i128 n) {
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}
Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

template <class Int>
struct Cubic {
  Int c3, c2, c1, c0;
  Int operator()(const Int& z) const { return ((c3 * z + c2) * z + c1) * z + c0; }
};

template <class Int>
void roots_on_monotone(const Cubic<Int>& f, Int u, Int v, std::vector<Int>& out) {
  if (u > v) return;
  const Int fu = f(u);
  if (fu == 0) {
    out.push_back(u);
    return;
  }
  const Int fv = f(v);
  if (fv == 0) {
    out.push_back(v);
    return;
  }
  const int su = sign_of(fu);
  if (su == sign_of(fv)) return;
  Int lo = u, hi = v;
  while (hi - lo > 1) {
    Int mid = lo + (hi - lo) / 2;
    const Int fm = f(mid);
    const int sm = sign_of(fm);
    if (sm == 0) {
      out.push_back(mid);
      return;
    }
    if (sm == su)
      lo = mid;
    else
      hi = mid;
  }
}

/// Integer interval containing (-b + sign * sqrt(disc)) / den.
template <class Int>
std::pair<Int, Int> bracket_quadratic_root(const Int& b, const Int& disc, const Int& den, int sign) {
  const Int s = isqrt(disc);
  const Int n1 = -b + (sign > 0 ? s : Int(-s));
  const Int n2 = -b + (sign > 0 ? Int(s + 1) : Int(-(s + 1)));
  Int lo = std::min(floor_div(n1, den), floor_div(n2, den));
  Int hi = std::max(ceil_div(n1, den), ceil_div(n2, den));
  return {lo, hi};
}

/// false when f vanishes identically.
template <class Int>
bool integer_roots(const Cubic<Int>& f, const Int& lo, const Int& hi, std::vector<Int>& out) {
  std::vector<std::pair<Int, Int>> critical;
  if (f.c3 != 0) {
    const Int disc = f.c2 * f.c2 - 3 * f.c3 * f.c1;
    if (disc >= 0) {
      const Int den = 3 * f.c3;
      critical.push_back(bracket_quadratic_root<Int>(f.c2, disc, den, -1));
      critical.push_back(bracket_quadratic_root<Int>(f.c2, disc, den, +1));
    }
  } else if (f.c2 != 0) {
    const Int num = -f.c1, den = 2 * f.c2;
    critical.emplace_back(std::min(floor_div(num, den), ceil_div(num, den)),
                          std::max(floor_div(num, den), ceil_div(num, den)));
  } else if (f.c1 == 0) {
    if (f.c0 == 0) return false;
    return true;
  }
  std::sort(critical.begin(), critical.end());
  // Merge overlapping brackets and clamp to [lo, hi].
  std::vector<std::pair<Int, Int>> merged;
  for (auto [a, b] : critical) {
    if (a < lo) a = lo;
    if (b > hi) b = hi;
    if (a > b) continue;
    if (!merged.empty() && a <= merged.back().second + 1) {
      if (b > merged.back().second) merged.back().second = b;
    } else {
      merged.emplace_back(a, b);
    }
  }
  Int cur = lo;
  for (const auto& [a, b] : merged) {
    roots_on_monotone(f, cur, Int(a - 1), out);
    for (Int z = a; z <= b; ++z)
      if (f(z) == 0) out.push_back(z);
    cur = b + 1;
  }
  roots_on_monotone(f, cur, hi, out);
  return true;
}

long gcd3_small(long x, long y, long z) { return std::gcd(std::gcd(x, y), z); }

struct PairScanner {
  Integer aL, aR;
  bool small;  // fits the 128-bit path
  i128 aL128 = 0, aR128 = 0;

  PairScanner(const Coefficient& a, std::int64_t height) : aL(a.num()), aR(a.den()) {
    const Integer k = abs(aL) + aR;
    small = mpz_sizeinbase(k.get_mpz_t(), 2) <= 36 && height < (std::int64_t{1} << 22);
    if (small) {
      aL128 = *to_int128(aL);
      aR128 = *to_int128(aR);
    }
  }

  // Roots z with |z| <= |y| of the master equation at fixed (x, y).
  void roots(long x, long y, std::vector<long>& out) const {
    const long ybound = y < 0 ? -y : y;
    if (small) {
      const i128 X = x, Y = y, s = X + Y;
      Cubic<i128> f{aL128 - aR128, -3 * aR128 * s, -3 * aR128 * s * s, aL128 * (X * X * X + Y * Y * Y) - aR128 * s * s * s};
      std::vector<i128> r;
      if (!integer_roots<i128>(f, -ybound, ybound, r)) return;  // x + y == 0: vectorlike
      for (i128 z : r) out.push_back(static_cast<long>(z));
    } else {
      const Integer X = x, Y = y, s = X + Y;
      Cubic<Integer> f{Integer(aL - aR), Integer(-3 * aR * s), Integer(-3 * aR * s * s),
                       Integer(aL * (X * X * X + Y * Y * Y) - aR * s * s * s)};
      std::vector<Integer> r;
      if (!integer_roots<Integer>(f, Integer(-ybound), Integer(ybound), r)) return;
      for (const Integer& z : r) out.push_back(z.get_si());
    }
  }
};

}  // namespace

std::optional<std::vector<Integer>> integer_roots_in_range(const std::array<Integer, 4>& coeffs, const Integer& lo,
                                                           const Integer& hi) {
  Cubic<Integer> f{coeffs[0], coeffs[1], coeffs[2], coeffs[3]};
  std::vector<Integer> out;
  if (!integer_roots<Integer>(f, lo, hi, out)) return std::nullopt;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SearchResult enumerate_primitive(const SearchConfig& cfg) {
  if (cfg.a.is_zero()) throw InvalidCoefficient("a = 0 is excluded");
  if (cfg.height < 1) throw PreconditionViolated("search height must be >= 1");
  const std::int64_t height = cfg.height;
  const PairScanner scanner(cfg.a, height);
  const unsigned jobs = std::max(1U, cfg.parallelism);

  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();
  std::atomic<std::int64_t> first_hit{kNone};
  std::vector<std::vector<Triple>> found(jobs);

  auto worker = [&](unsigned id) {
    std::vector<long> zs;
    for (std::int64_t x = 1 + id; x <= height; x += jobs) {
      if (cfg.stop_at_first && x > first_hit.load(std::memory_order_relaxed)) break;
      for (long y = -x; y <= x; ++y) {
        if (y == 0 || y == -x) continue;
        zs.clear();
        scanner.roots(x, y, zs);
        for (long z : zs) {
          if (z == 0 || y + z == 0 || z + x == 0) continue;
          if (gcd3_small(x, y, z) != 1) continue;
          Triple t(x, y, z);
          if (!is_primitive(cfg.a, t)) continue;
          found[id].push_back(std::move(t));
          if (cfg.stop_at_first) {
            std::int64_t cur = first_hit.load();
            while (x < cur && !first_hit.compare_exchange_weak(cur, x)) {
            }
          }
        }
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker, i);
    for (auto& t : pool) t.join();
  }

  SearchResult result;
  const std::int64_t cutoff = cfg.stop_at_first ? first_hit.load() : kNone;
  for (auto& bucket : found)
    for (auto& t : bucket)
      if (t.x <= cutoff) result.primitives.push_back(canonicalize(t));
  std::sort(result.primitives.begin(), result.primitives.end(),
            [](const CanonicalTriple& a, const CanonicalTriple& b) { return canonical_less(a.triple, b.triple); });
  result.primitives.erase(std::unique(result.primitives.begin(), result.primitives.end()), result.primitives.end());
  result.exhausted = cutoff == kNone || cutoff == height;
  result.height = cutoff == kNone ? height : cutoff;
  return result;
}

SearchResult table1_scan(unsigned parallelism) { return enumerate_primitive({Coefficient(9), 200, parallelism, false}); }

std::vector<NScanEntry> n_sequence_scan(long n_max, std::int64_t height, std::int64_t covering_bound,
                                        unsigned parallelism) {
  if (n_max < 1) throw PreconditionViolated("n_sequence_scan: N_max must be >= 1");
  std::vector<NScanEntry> out;
  for (long n = 1; n <= n_max; ++n) {
    NScanEntry entry{n, std::nullopt, {}};
    const Coefficient a(Rational(Integer(n * n)));
    for (const auto& sol : square_families(Integer(n))) {
      if (is_primitive(a, sol.primitive.triple)) {
        entry.witness = sol.primitive;
        entry.source = "family:" + std::string(family_name(sol.family));
        break;
      }
    }
    if (!entry.witness && height >= 1) {
      const SearchResult r = enumerate_primitive({a, height, parallelism, true});
      if (!r.primitives.empty()) {
        entry.witness = r.primitives.front();
        entry.source = "search";
      }
    }
    if (!entry.witness && covering_bound >= 1 && n > 1) {
      const SearchResult r = covering_search(a, covering_bound, parallelism);
      if (!r.primitives.empty()) {
        entry.witness = r.primitives.front();
        entry.source = "covering";
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<std::tuple<long, long, long>> oracle_lemma31(long bound) {
  if (bound < 1) throw PreconditionViolated("oracle_lemma31: bound must be >= 1");
  std::vector<std::tuple<long, long, long>> out;
  for (long q = -bound; q <= bound; ++q) {
    if (q == 0) continue;
    for (long r = -bound; r <= bound; ++r) {
      if (r == 0) continue;
      const i128 Q = q, R = r;
      const i128 val = Q * Q * Q * Q - R * R * R * R + Q * Q * R * R;
      if (val <= 0) continue;
      const i128 t = isqrt(val);
      if (t * t != val) continue;
      const auto tl = static_cast<long>(t);
      if (gcd3_small(q, r, tl) != 1) continue;
      out.emplace_back(q, r, tl);
      out.emplace_back(q, r, -tl);
    }
  }
  return out;
}

std::vector<std::pair<long, long>> oracle_thue(long c, long bound) {
  if (bound < 5) throw PreconditionViolated("oracle_thue: bound must be >= 5");
  std::vector<std::pair<long, long>> out;
  for (long y = -bound; y <= bound; ++y) {
    const Integer rhs = Integer(c) - 2 * Integer(y) * y * y;
    if (auto x = is_perfect_cube(rhs); x && abs(*x) <= bound) out.emplace_back(x->get_si(), y);
  }
  return out;
}

namespace {

unsigned p_valuation(const Integer& n, const Integer& p) {
  unsigned e = 0;
  Integer m = abs(n);
  while (m != 0 && mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

/// c1 X^3 + c2 Y^3 + c3 Z^3 + c4 XYZ = 0 has a solution modulo q = p^e
/// with not all of X, Y, Z divisible by p.
bool has_local_point(const std::array<Integer, 4>& c, long p, long q) {
  std::array<long, 4> m{};
  for (int i = 0; i < 4; ++i) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c[i].get_mpz_t(), static_cast<unsigned long>(q));
    m[i] = r.get_si();
  }
  std::vector<long> cube(q);
  for (long v = 0; v < q; ++v) cube[v] = v * v % q * v % q;
  const auto zero_for_some_z = [&](long x, long y) {
    const long base = (m[0] * cube[x] + m[1] * cube[y]) % q;
    const long xy = x * y % q * m[3] % q;
    for (long z = 0; z < q; ++z)
      if ((base + m[2] * cube[z] + xy * z) % q == 0) return true;
    return false;
  };
  for (long y = 0; y < q; ++y)
    if (zero_for_some_z(1, y)) return true;
  for (long x = 0; x < q; x += p)
    if (zero_for_some_z(x, 1)) return true;
  for (long x = 0; x < q; x += p)
    for (long y = 0; y < q; y += p)
      if ((m[0] * cube[x] + m[1] * cube[y] + m[2] + x * y % q * m[3]) % q == 0) return true;
  return false;
}

std::optional<Triple> triple_from_tuv(Integer t, Integer u, Integer v) {
  if (mpz_odd_p(Integer(t + u + v).get_mpz_t())) {
    t *= 2;
    u *= 2;
    v *= 2;
  }
  Triple x{Integer((t - u + v) / 2), Integer((t + u - v) / 2), Integer((u + v - t) / 2)};
  const Integer g = gcd3(x.x, x.y, x.z);
  if (g == 0) return std::nullopt;
  return x.divided_by(g);
}

template <class Int>
void scan_covering(const Coefficient& a, const Covering& cov, const std::array<Int, 4>& c, std::int64_t bound,
                   std::vector<Triple>& out) {
  std::vector<Int> zs;
  for (std::int64_t xi = 1; xi <= bound; ++xi) {
    const Int X = Int(static_cast<long>(xi));
    const Int X3 = X * X * X;
    for (std::int64_t yi = -xi; yi <= xi; ++yi) {
      if (yi == 0) continue;
      const Int Y = Int(static_cast<long>(yi));
      Cubic<Int> f{c[2], Int(0), Int(c[3] * X * Y), Int(c[0] * X3 + c[1] * Y * Y * Y)};
      zs.clear();
      integer_roots<Int>(f, Int(-X), X, zs);
      for (const Int& z : zs) {
        if (z == 0) continue;
        const Integer Xg = static_cast<long>(xi), Yg = static_cast<long>(yi);
        Integer Zg;
        if constexpr (std::is_same_v<Int, Integer>)
          Zg = z;
        else
          Zg = from_int128(z);
        auto t = triple_from_tuv(cov.d1 * Xg * Xg * Xg, cov.d2 * Yg * Yg * Yg, cov.d3 * Zg * Zg * Zg);
        if (t && is_primitive(a, *t)) out.push_back(std::move(*t));
      }
    }
  }
}

}  // namespace

std::vector<Covering> tuv_coverings(const Coefficient& a) {
  const Integer& l = a.num();
  const Integer& r = a.den();
  if (l == r) throw PreconditionViolated("tuv_coverings: a = 1 has no cubic t,u,v form");
  if (l == 0) throw InvalidCoefficient("a = 0 is excluded");
  std::vector<Integer> primes;
  for (const auto& [p, e] : factorize(abs(Integer(6 * l * (l - r))))) primes.push_back(p);
  const Rational ratio{Integer(24 * l), Integer(l - r)};
  const std::size_t n = primes.size();
  std::vector<int> vr(n);
  // An odd prime can divide two of t, u, v only through a high power of it in aL - aR.
  std::vector<bool> shared(n);
  for (std::size_t i = 0; i < n; ++i) {
    vr[i] = static_cast<int>(p_valuation(ratio.num(), primes[i])) - static_cast<int>(p_valuation(ratio.den(), primes[i]));
    const unsigned beta = p_valuation(Integer(l - r), primes[i]);
    shared[i] = primes[i] == 2 || beta >= (primes[i] == 3 ? 3U : 2U);
  }

  std::vector<std::pair<long, long>> moduli;
  for (const auto& p : primes) {
    const long pl = p.fits_slong_p() ? p.get_si() : 0;
    if (pl == 2)
      moduli.emplace_back(2, 16);
    else if (pl == 3)
      moduli.emplace_back(3, 81);
    else if (pl != 0 && pl <= 37)
      moduli.emplace_back(pl, pl * pl);
    else if (pl != 0 && pl <= 2000)
      moduli.emplace_back(pl, pl);
  }
  std::sort(moduli.begin(), moduli.end(), [](const auto& x, const auto& y) { return x.second < y.second; });

  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 9;
  std::vector<Covering> out;
  for (std::size_t code = 0; code < total; ++code) {
    Integer d1 = 1, d2 = 1, d3 = 1;
    std::size_t rest = code;
    bool admissible = true;
    for (std::size_t i = 0; i < n && admissible; ++i) {
      const int e1 = static_cast<int>(rest % 3), e2 = static_cast<int>(rest / 3 % 3);
      rest /= 9;
      const int e3 = ((-vr[i] - e1 - e2) % 3 + 3) % 3;
      if (!shared[i] && (e1 != 0) + (e2 != 0) + (e3 != 0) > 1) admissible = false;
      for (int k = 0; k < e1; ++k) d1 *= primes[i];
      for (int k = 0; k < e2; ++k) d2 *= primes[i];
      for (int k = 0; k < e3; ++k) d3 *= primes[i];
    }
    if (!admissible) continue;
    const auto k = rational_cbrt(ratio * Rational(Integer(d1 * d2 * d3)));
    if (!k) throw std::logic_error("tuv_coverings: cube condition failed");
    std::array<Integer, 4> c{Integer(k->den() * d1), Integer(k->den() * d2), Integer(k->den() * d3), Integer(-k->num())};
    const Integer g = gcd(gcd3(c[0], c[1], c[2]), c[3]);
    for (auto& ci : c) mpz_divexact(ci.get_mpz_t(), ci.get_mpz_t(), g.get_mpz_t());
    bool local = true;
    for (const auto& [p, q] : moduli)
      if (!(local = has_local_point(c, p, q))) break;
    if (local) out.push_back({d1, d2, d3, k->num(), k->den()});
  }
  return out;
}

SearchResult covering_search(const Coefficient& a, std::int64_t bound, unsigned parallelism) {
  if (a.is_zero()) throw InvalidCoefficient("a = 0 is excluded");
  if (bound < 1) throw PreconditionViolated("covering search bound must be >= 1");
  const std::vector<Covering> coverings = tuv_coverings(a);
  const unsigned jobs = std::max(1U, parallelism);
  std::vector<std::vector<Triple>> found(jobs);
  auto worker = [&](unsigned id) {
    for (std::size_t i = id; i < coverings.size(); i += jobs) {
      const Covering& cov = coverings[i];
      const Integer g = gcd(gcd3(cov.d1, cov.d2, cov.d3), cov.kn);
      std::array<Integer, 4> c{Integer(cov.kd * cov.d1 / g), Integer(cov.kd * cov.d2 / g), Integer(cov.kd * cov.d3 / g),
                               Integer(-cov.kn / g)};
      std::size_t bits = 0;
      for (const auto& ci : c) bits = std::max(bits, mpz_sizeinbase(ci.get_mpz_t(), 2));
      const std::size_t hbits = mpz_sizeinbase(Integer(static_cast<long>(bound)).get_mpz_t(), 2);
      if (bits + 3 * hbits + 6 < 126) {
        std::array<i128, 4> ci{*to_int128(c[0]), *to_int128(c[1]), *to_int128(c[2]), *to_int128(c[3])};
        scan_covering<i128>(a, cov, ci, bound, found[id]);
      } else {
        scan_covering<Integer>(a, cov, c, bound, found[id]);
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
  SearchResult result;
  for (auto& bucket : found)
    for (auto& t : bucket) result.primitives.push_back(canonicalize(t));
  std::sort(result.primitives.begin(), result.primitives.end(),
            [](const CanonicalTriple& x, const CanonicalTriple& y) { return canonical_less(x.triple, y.triple); });
  result.primitives.erase(std::unique(result.primitives.begin(), result.primitives.end()), result.primitives.end());
  result.height = bound;
  return result;
}

}  // namespace cubesum
