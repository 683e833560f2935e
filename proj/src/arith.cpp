#include "torsor/arith.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace torsor {

namespace {

constexpr unsigned long kTrialBound = 1UL << 16;
constexpr unsigned long kRhoIterationCap = 50'000'000;

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::size_t decimal_digits(const Integer& n) {
  std::size_t estimate = mpz_sizeinbase(n.get_mpz_t(), 10);
  if (estimate <= 2) return to_string(Integer(abs(n))).size();
  // sizeinbase may overshoot by one
  Integer bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 10, estimate - 1);
  return abs(n) >= bound ? estimate : estimate - 1;
}

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned s, const Integer& base) {
  Integer x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer n1 = n - 1;
  if (x == 1 || x == n1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n1) return true;
  }
  return false;
}

Integer rho_split(const Integer& n) {
  // Brent's cycle detection with batched gcds.
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1, iterations = 0;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (g == 1) {
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
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
        iterations += lim;
      }
      r *= 2;
      if (iterations > kRhoIterationCap) {
        throw BudgetExceeded("factor: Pollard rho iteration cap exceeded for " + to_string(n));
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(Integer(x - ys));
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const Integer& n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  Integer root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    split_into(root, primes);
    split_into(root, primes);
    return;
  }
  const Integer d = rho_split(n);
  split_into(d, primes);
  split_into(Integer(n / d), primes);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  Integer num(std::string(num_text), 10);
  Integer den(std::string(den_text), 10);
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& n) { return n.get_str(10); }

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_rational_square(const Rational& q) {
  return sgn(q) >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) &&
         mpz_perfect_square_p(q.get_den_mpz_t());
}

Rational rational_sqrt(const Rational& q) {
  if (!is_rational_square(q)) throw DomainError("not a rational square: " + to_string(q));
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  return Rational(num, den);
}

unsigned valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw DomainError("valuation of zero");
  Integer rest;
  return static_cast<unsigned>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Integer Factorization::value() const {
  Integer out = sign;
  for (const auto& [p, e] : factors) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), e);
    out *= power;
  }
  return out;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned long, 13> kBases = {2,  3,  5,  7,  11, 13, 17,
                                                           19, 23, 29, 31, 37, 41};
  for (unsigned long b : kBases) {
    if (n == b) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
  }
  static const Integer kDeterministicBound("3317044064679887385961981", 10);
  if (n >= kDeterministicBound) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
  }
  Integer d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  for (unsigned long b : kBases) {
    if (!miller_rabin_round(n, d, s, Integer(b))) return false;
  }
  return true;
}

Factorization factor(const Integer& n, const FactorOptions& options) {
  if (n == 0) throw DomainError("factor: zero has no factorization");
  if (decimal_digits(n) > options.max_digits) {
    throw BudgetExceeded("factor: input exceeds digit budget of " +
                         std::to_string(options.max_digits));
  }
  Factorization out;
  out.sign = sgn(n) < 0 ? -1 : 1;
  Integer rest = abs(n);
  for (unsigned long p = 2; p < kTrialBound && rest > 1; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      out.factors.push_back({Integer(p), e});
    }
  }
  std::vector<Integer> large;
  split_into(rest, large);
  std::sort(large.begin(), large.end());
  for (const auto& p : large) {
    if (!out.factors.empty() && out.factors.back().prime == p) {
      ++out.factors.back().exponent;
    } else {
      out.factors.push_back({p, 1});
    }
  }
  return out;
}

int legendre(const Integer& a, const Integer& p) {
  if (p <= 2 || mpz_even_p(p.get_mpz_t()) || !is_prime(p)) {
    throw DomainError("legendre: modulus " + to_string(p) + " is not an odd prime");
  }
  Integer r = a % p;
  if (r < 0) r += p;
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

SquareClass::SquareClass(int sign, std::vector<Integer> primes)
    : sign_(sign), primes_(std::move(primes)), value_(sign_) {
  for (const auto& p : primes_) value_ *= p;
}

SquareClass SquareClass::of(const Rational& q, const FactorOptions& options) {
  if (sgn(q) == 0) throw DomainError("square class of zero");
  // Class of num/den equals class of num*den.
  const Integer product = q.get_num() * q.get_den();
  const Factorization f = factor(product, options);
  std::vector<Integer> odd;
  for (const auto& [p, e] : f.factors) {
    if (e % 2 == 1) odd.push_back(p);
  }
  return SquareClass(f.sign, std::move(odd));
}

SquareClass SquareClass::from_square_free(const Integer& n) {
  SquareClass c = of(Rational(n));
  if (c.value_ != n) throw DomainError(to_string(n) + " is not square-free");
  return c;
}

SquareClass operator*(const SquareClass& u, const SquareClass& v) {
  std::vector<Integer> primes;
  std::set_symmetric_difference(u.primes_.begin(), u.primes_.end(), v.primes_.begin(),
                                v.primes_.end(), std::back_inserter(primes));
  return SquareClass(u.sign_ * v.sign_, std::move(primes));
}

std::string to_string(const SquareClass& c) { return to_string(c.value()); }

std::vector<Integer> square_free_range(long bound) {
  std::vector<Integer> positive;
  for (long n = 1; n <= bound; ++n) {
    bool free = true;
    for (long d = 2; d * d <= n && free; ++d) free = n % (d * d) != 0;
    if (free) positive.emplace_back(n);
  }
  std::vector<Integer> out;
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) out.push_back(-*it);
  out.insert(out.end(), positive.begin(), positive.end());
  return out;
}

}  // namespace torsor
