#include "support/oracles.hpp"

#include <map>
#include <mutex>

namespace torsor::oracle {

Factorization trial_division(std::int64_t n) {
  Factorization out;
  out.sign = n < 0 ? -1 : 1;
  std::int64_t rest = n < 0 ? -n : n;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) out.factors.push_back({Integer(static_cast<long>(p)), e});
  }
  if (rest > 1) out.factors.push_back({Integer(static_cast<long>(rest)), 1});
  return out;
}

int legendre_by_squares(std::int64_t a, std::int64_t p) {
  const std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  for (std::int64_t z = 1; z < p; ++z) {
    if (z * z % p == r) return 1;
  }
  return -1;
}

namespace {

const std::vector<char>& squares_mod(std::int64_t modulus) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::vector<char>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(modulus);
  if (inserted) {
    it->second.assign(static_cast<std::size_t>(modulus), 0);
    for (std::int64_t z = 0; z < modulus; ++z) {
      it->second[static_cast<std::size_t>(static_cast<__int128>(z) * z % modulus)] = 1;
    }
  }
  return it->second;
}

std::int64_t mod(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

}  // namespace

int hilbert_oracle(std::int64_t a, std::int64_t b, const Place& v, std::int64_t max_modulus) {
  if (a == 0 || b == 0) throw DomainError("hilbert_oracle: zero argument");
  if (v.is_real()) return (a < 0 && b < 0) ? -1 : 1;
  const std::int64_t p = v.prime().get_si();
  unsigned k = 3;
  for (std::int64_t t : {std::int64_t{4}, a, b}) {
    t = t < 0 ? -t : t;
    while (t % p == 0) {
      t /= p;
      ++k;
    }
  }
  std::int64_t modulus = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (modulus > max_modulus / p) throw BudgetExceeded("hilbert_oracle: modulus too large");
    modulus *= p;
  }
  const auto& is_square = squares_mod(modulus);
  const std::int64_t am = mod(a, modulus), bm = mod(b, modulus);
  auto hit = [&](std::int64_t x, std::int64_t y) {
    const __int128 value = static_cast<__int128>(am) * x % modulus * x +
                           static_cast<__int128>(bm) * y % modulus * y;
    return is_square[static_cast<std::size_t>(value % modulus)] != 0;
  };
  // For k >= 2 a primitive triple has x or y prime to p (otherwise p^2
  // divides z^2, so p | z). Scaling by the inverse unit gives x = 1, or
  // p | x and y = 1.
  for (std::int64_t y = 0; y < modulus; ++y) {
    if (hit(1, y)) return 1;
  }
  for (std::int64_t x = 0; x < modulus; x += p) {
    if (hit(x, 1)) return 1;
  }
  return -1;
}

std::int64_t square_free_part(std::int64_t n) {
  const Factorization f = trial_division(n);
  std::int64_t out = f.sign;
  for (const auto& [p, e] : f.factors) {
    if (e % 2) out *= p.get_si();
  }
  return out;
}

Rational random_rational(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> num(-bound, bound), den(1, bound);
  std::int64_t n = 0;
  while (n == 0) n = num(rng);
  Rational q(Integer(static_cast<long>(n)), Integer(static_cast<long>(den(rng))));
  q.canonicalize();
  return q;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<char> composite(static_cast<std::size_t>(bound + 1), 0);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) composite[static_cast<std::size_t>(j)] = 1;
  }
  return out;
}

}  // namespace torsor::oracle
