#pragma once

/// @file arith.hpp
/// @brief Exact integers and rationals, factorization, Legendre symbols and
///        the square-class group Q*/(Q*)^2.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace torsor {

using Integer = mpz_class;
using Rational = mpq_class;

/// Invalid mathematical input: zero where a unit is needed, a point off its
/// curve, a singular curve, a malformed number.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource limit (digit budget, search budget) was exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses `n` or `n/d` in base 10 and returns the canonical rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// True iff q is the square of a rational. q must be canonical.
bool is_rational_square(const Rational& q);

/// Exact square root of a rational square; throws DomainError otherwise.
Rational rational_sqrt(const Rational& q);

/// p-adic valuation of a nonzero integer.
unsigned valuation(const Integer& n, const Integer& p);

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // primes strictly increasing

  Integer value() const;
  bool operator==(const Factorization&) const = default;
};

struct FactorOptions {
  std::size_t max_digits = 64;
};

/// Deterministic primality for n < 3.3e24 (Miller-Rabin with the first
/// thirteen prime bases); BPSW plus random-base rounds above that.
bool is_prime(const Integer& n);

/// Trial division, then Pollard-Brent rho on the remaining cofactor.
Factorization factor(const Integer& n, const FactorOptions& options = {});

/// Legendre symbol (a/p) for an odd prime p.
int legendre(const Integer& a, const Integer& p);

/// An element of Q*/(Q*)^2, stored canonically as the square-free integer
/// sign * prod(primes).
class SquareClass {
 public:
  SquareClass() = default;

  /// Class of a nonzero rational; throws DomainError on zero.
  static SquareClass of(const Rational& q, const FactorOptions& options = {});
  /// Class of an integer already known to be square-free and nonzero.
  static SquareClass from_square_free(const Integer& n);

  int sign() const { return sign_; }
  const std::vector<Integer>& primes() const { return primes_; }
  const Integer& value() const { return value_; }
  bool is_one() const { return sign_ == 1 && primes_.empty(); }

  friend SquareClass operator*(const SquareClass& u, const SquareClass& v);

  friend bool operator==(const SquareClass& u, const SquareClass& v) {
    return u.value_ == v.value_;
  }
  friend std::strong_ordering operator<=>(const SquareClass& u,
                                          const SquareClass& v) {
    const int c = cmp(u.value_, v.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  SquareClass(int sign, std::vector<Integer> primes);

  int sign_ = 1;
  std::vector<Integer> primes_;
  Integer value_ = 1;
};

inline SquareClass square_class(const Rational& q) { return SquareClass::of(q); }
inline SquareClass sc_mul(const SquareClass& u, const SquareClass& v) {
  return u * v;
}

std::string to_string(const SquareClass& c);

/// All square-free integers n with 1 <= |n| <= bound, ascending.
std::vector<Integer> square_free_range(long bound);

}  // namespace torsor
