#pragma once

// Exact integer and rational arithmetic plus the number-theoretic predicates
// used throughout the library. Integers are GMP integers; nothing here rounds.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cubesum {

using Integer = mpz_class;

std::string to_string(const Integer& n);
Integer parse_integer(std::string_view text);

/// Conversions between GMP integers and 128-bit machine integers.
Integer from_int128(__int128 v);
std::optional<__int128> to_int128(const Integer& v);
/// Narrowing conversion; throws PreconditionViolated when the value does not fit.
long to_long(const Integer& v);

/// Reduced fraction with positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  /// Throws ZeroInput when den is zero.
  Rational(const Integer& num, const Integer& den);

  /// Accepts "n" or "n/d" with an optional leading sign.
  static Rational parse(std::string_view text);

  const Integer& num() const { return q_.get_num(); }
  const Integer& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  Rational abs() const;

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws ZeroInput on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

struct PrimePower {
  Integer prime;
  unsigned multiplicity = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of |n|, primes strictly increasing.
using Factorization = std::vector<PrimePower>;

Integer gcd(const Integer& a, const Integer& b);
/// Non-negative; gcd3(0, 0, 0) == 0.
Integer gcd3(const Integer& x, const Integer& y, const Integer& z);

std::optional<Integer> is_perfect_cube(const Integer& n);
/// Non-negative root; absent for negative input.
std::optional<Integer> is_perfect_square(const Integer& n);
/// Square root of a rational square, non-negative.
std::optional<Rational> rational_sqrt(const Rational& r);
std::optional<Rational> rational_cbrt(const Rational& r);

/// Deterministic Miller-Rabin below 3.3e24 (first 13 prime bases); beyond that
/// bound additional bases make it probabilistic with negligible error.
bool is_prime(const Integer& n);

/// Trial division up to 1e6, then Brent's variant of Pollard rho.
/// Throws ZeroInput for n == 0. factorize(±1) is empty.
Factorization factorize(const Integer& n);

/// (F_n, L_n) with F_0 = 0, F_1 = 1, L_0 = 2, L_1 = 1.
std::pair<Integer, Integer> fibonacci_lucas(unsigned n);

/// True iff s^3 == 4 (mod q) has a solution. q must be a prime with q == 1 mod 3.
bool cubic_residue_4(const Integer& q);

/// The unique L, M > 0 with 4q = L^2 + 27 M^2 for a prime q == 1 mod 3.
std::pair<Integer, Integer> qlm_representation(const Integer& q);

}  // namespace cubesum
