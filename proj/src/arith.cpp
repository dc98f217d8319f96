#include "cubesum/arith.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "cubesum/errors.hpp"

namespace cubesum {

std::string to_string(const Integer& n) { return n.get_str(); }

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("malformed integer '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') throw ParseError("malformed integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Integer from_int128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  const auto hi = static_cast<unsigned long>(u >> 64);
  const auto lo = static_cast<unsigned long>(u);
  Integer r = hi;
  r <<= 64;
  r += lo;
  return neg ? Integer(-r) : r;
}

std::optional<__int128> to_int128(const Integer& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 126) return std::nullopt;
  Integer a = abs(v);
  Integer hi = a >> 64;
  Integer lo = a - (hi << 64);
  unsigned __int128 u = (static_cast<unsigned __int128>(hi.get_ui()) << 64) | lo.get_ui();
  const auto r = static_cast<__int128>(u);
  return sgn(v) < 0 ? -r : r;
}

long to_long(const Integer& v) {
  if (!v.fits_slong_p()) throw PreconditionViolated("integer " + v.get_str() + " does not fit in a machine word");
  return v.get_si();
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ZeroInput("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ParseError("sign belongs on the numerator in '" + std::string(text) + "'");
  const Integer den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw ZeroInput("division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}
Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, unsigned exponent) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exponent);
  return Rational(n, d);
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer gcd3(const Integer& x, const Integer& y, const Integer& z) { return gcd(gcd(x, y), z); }

std::optional<Integer> is_perfect_cube(const Integer& n) {
  Integer r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3) != 0) return r;
  return std::nullopt;
}

std::optional<Integer> is_perfect_square(const Integer& n) {
  if (sgn(n) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  auto n = is_perfect_square(r.num());
  if (!n) return std::nullopt;
  auto d = is_perfect_square(r.den());
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

std::optional<Rational> rational_cbrt(const Rational& r) {
  auto n = is_perfect_cube(r.num());
  if (!n) return std::nullopt;
  auto d = is_perfect_cube(r.den());
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

namespace {

constexpr std::array<unsigned long, 13> kDeterministicBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
constexpr std::array<unsigned long, 12> kExtraBases = {43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned s, unsigned long base) {
  Integer a = base;
  a %= n;
  if (a == 0) return true;
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

Integer pollard_brent(const Integer& n, unsigned long c) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer y = 2, x, ys, q = 1, g = 1;
  const unsigned long m = 128;
  unsigned long r = 1;
  auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = f(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      const unsigned long lim = std::min(m, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        y = f(y);
        q = (q * abs(Integer(x - y))) % n;
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(abs(Integer(x - ys)), n);
    } while (g == 1);
  }
  return g;
}

void split_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  if (auto r = is_perfect_square(n)) {
    std::map<Integer, unsigned> inner;
    split_into(*r, inner);
    for (auto& [p, e] : inner) out[p] += 2 * e;
    return;
  }
  for (unsigned long c = 1;; ++c) {
    Integer d = pollard_brent(n, c);
    if (d != n && d != 1) {
      split_into(d, out);
      split_into(Integer(n / d), out);
      return;
    }
  }
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long p : kDeterministicBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Integer d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (unsigned long base : kDeterministicBases) {
    if (!miller_rabin_round(n, d, s, base)) return false;
  }
  static const Integer kDeterministicLimit("3317044064679887385961981", 10);
  if (n < kDeterministicLimit) return true;
  for (unsigned long base : kExtraBases) {
    if (!miller_rabin_round(n, d, s, base)) return false;
  }
  return true;
}

Factorization factorize(const Integer& n) {
  if (n == 0) throw ZeroInput("factorize(0)");
  Integer m = abs(n);
  std::map<Integer, unsigned> found;

  auto divide_out = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e) found[Integer(p)] += e;
  };

  divide_out(2);
  constexpr unsigned long kTrialLimit = 1'000'000;
  for (unsigned long p = 3; p <= kTrialLimit; p += 2) {
    if (Integer(p) * p > m) break;
    divide_out(p);
  }
  if (m > 1) split_into(m, found);

  Factorization out;
  out.reserve(found.size());
  for (auto& [p, e] : found) out.push_back({p, e});
  return out;
}

std::pair<Integer, Integer> fibonacci_lucas(unsigned n) {
  Integer f0 = 0, f1 = 1, l0 = 2, l1 = 1;
  for (unsigned i = 0; i < n; ++i) {
    Integer f2 = f0 + f1;
    Integer l2 = l0 + l1;
    f0 = std::move(f1);
    f1 = std::move(f2);
    l0 = std::move(l1);
    l1 = std::move(l2);
  }
  return {f0, l0};
}

namespace {

void require_prime_1_mod_3(const Integer& q, const char* op) {
  if (!is_prime(q) || mpz_fdiv_ui(q.get_mpz_t(), 3) != 1)
    throw PreconditionViolated(std::string(op) + ": " + q.get_str() + " is not a prime congruent to 1 mod 3");
}

}  // namespace

bool cubic_residue_4(const Integer& q) {
  require_prime_1_mod_3(q, "cubic_residue_4");
  const unsigned long qq = q.get_ui();
  if (!q.fits_ulong_p() || qq > (1UL << 31)) throw PreconditionViolated("cubic_residue_4: modulus too large for a scan");
  for (unsigned long s = 0; s < qq; ++s) {
    if ((s * s % qq) * s % qq == 4 % qq) return true;
  }
  return false;
}

std::pair<Integer, Integer> qlm_representation(const Integer& q) {
  require_prime_1_mod_3(q, "qlm_representation");
  const Integer four_q = 4 * q;
  for (Integer m = 1; 27 * m * m < four_q; ++m) {
    if (auto l = is_perfect_square(Integer(four_q - 27 * m * m)); l && *l > 0) return {*l, m};
  }
  throw PreconditionViolated("qlm_representation: no representation for " + q.get_str());
}

}  // namespace cubesum
