#include "torsor/local_symbols.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace torsor;

namespace {

Place at(long p) { return Place::finite(p); }

QuaternionClass quat(long a, long b) {
  return {SquareClass::of(Rational(a)), SquareClass::of(Rational(b))};
}

int symbol(long a, long b, const Place& v) { return hilbert_symbol(Rational(a), Rational(b), v); }

}  // namespace

TEST(Place, Validation) {
  EXPECT_THROW(Place::finite(4), DomainError);
  EXPECT_THROW(Place::finite(1), DomainError);
  EXPECT_EQ(to_string(parse_place("real")), "real");
  EXPECT_EQ(parse_place("7"), at(7));
  EXPECT_THROW(parse_place("9"), DomainError);
  EXPECT_TRUE(at(3) < at(5));
  EXPECT_TRUE(at(101) < Place::real());
}

TEST(HilbertSymbol, Examples) {
  EXPECT_EQ(symbol(-1, -1, Place::real()), -1);
  for (long b : {-7L, -1L, 2L, 5L, 12L}) {
    for (const Place& v : {Place::real(), at(2), at(3), at(7)}) EXPECT_EQ(symbol(1, b, v), 1);
  }
  EXPECT_EQ(symbol(-1, 7, at(7)), -1);
  EXPECT_EQ(symbol(-1, 7, at(2)), -1);
  EXPECT_EQ(oracle::hilbert_oracle(-1, 7, at(7)), -1);
  EXPECT_EQ(oracle::hilbert_oracle(-1, 7, at(2)), -1);
}

TEST(HilbertSymbol, RejectsZero) {
  EXPECT_THROW(symbol(0, 3, at(3)), DomainError);
  EXPECT_THROW(symbol(3, 0, Place::real()), DomainError);
}

TEST(HilbertOracle, Examples) {
  EXPECT_EQ(oracle::hilbert_oracle(2, 7, at(7)), 1);
  EXPECT_EQ(oracle::hilbert_oracle(1, 1, at(3)), 1);
  EXPECT_EQ(oracle::hilbert_oracle(-2, 14, at(7)), -1);
  EXPECT_THROW(oracle::hilbert_oracle(1, 1, at(1009), 1000), BudgetExceeded);
}

TEST(HilbertSymbol, AgreesWithOracleOnSmallGrid) {
  std::vector<Place> places{Place::real()};
  for (auto p : oracle::primes_up_to(50)) places.push_back(at(static_cast<long>(p)));
  int mismatches = 0;
  for (long a = -20; a <= 20; ++a) {
    for (long b = -20; b <= 20; ++b) {
      if (a == 0 || b == 0) continue;
      for (const auto& v : places) {
        if (symbol(a, b, v) != oracle::hilbert_oracle(a, b, v)) {
          ++mismatches;
          ADD_FAILURE() << "(" << a << "," << b << ")_" << to_string(v);
        }
      }
    }
  }
  EXPECT_EQ(mismatches, 0);
}

TEST(HilbertSymbolProperty, SymmetricAndBilinear) {
  std::mt19937_64 rng(23);
  const auto primes = oracle::primes_up_to(60);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size());
  for (int i = 0; i < 500; ++i) {
    const Rational a1 = oracle::random_rational(rng, 3000);
    const Rational a2 = oracle::random_rational(rng, 3000);
    const Rational b = oracle::random_rational(rng, 3000);
    const std::size_t k = pick(rng);
    const Place v = k == primes.size() ? Place::real() : at(static_cast<long>(primes[k]));
    EXPECT_EQ(hilbert_symbol(a1, b, v), hilbert_symbol(b, a1, v));
    EXPECT_EQ(hilbert_symbol(Rational(a1 * a2), b, v),
              hilbert_symbol(a1, b, v) * hilbert_symbol(a2, b, v));
    EXPECT_EQ(hilbert_symbol(a1, Rational(-a1), v), 1);
    if (a1 != 1) EXPECT_EQ(hilbert_symbol(a1, Rational(1 - a1), v), 1);
    const Rational r = oracle::random_rational(rng, 50);
    EXPECT_EQ(hilbert_symbol(Rational(a1 * r * r), b, v), hilbert_symbol(a1, b, v));
  }
}

TEST(HilbertSymbolProperty, ProductFormula) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> dist(-1'000'000, 1'000'000);
  for (int i = 0; i < 500; ++i) {
    long a = 0, b = 0;
    while (a == 0) a = dist(rng);
    while (b == 0) b = dist(rng);
    const SquareClass ca = SquareClass::of(Rational(a)), cb = SquareClass::of(Rational(b));
    int product = 1;
    for (const auto& v : candidate_places(ca, cb)) product *= hilbert_symbol(ca, cb, v);
    EXPECT_EQ(product, 1) << a << " " << b;
    EXPECT_EQ(ramified_places({ca, cb}).size() % 2, 0u);
  }
}

TEST(HilbertSymbolProperty, UnramifiedAwayFromCandidates) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> dist(-20, 20);
  const auto primes = oracle::primes_up_to(200);
  for (int i = 0; i < 50; ++i) {
    long a = 0, b = 0;
    while (a == 0) a = dist(rng);
    while (b == 0) b = dist(rng);
    int checked = 0;
    for (auto p : primes) {
      if (p == 2 || a % p == 0 || b % p == 0) continue;
      EXPECT_EQ(symbol(a, b, at(static_cast<long>(p))), 1);
      if (p < 60) EXPECT_EQ(oracle::hilbert_oracle(a, b, at(static_cast<long>(p))), 1);
      if (++checked == 20) break;
    }
    EXPECT_EQ(checked, 20);
  }
}

TEST(Quaternion, Splitting) {
  EXPECT_TRUE(quaternion_splits(quat(3, 1)));
  EXPECT_FALSE(quaternion_splits(quat(-1, 7)));
  EXPECT_TRUE(quaternion_splits(quat(3, -3)));
  EXPECT_FALSE(quaternion_splits(quat(-1, -1)));
}

TEST(Quaternion, RamifiedPlaces) {
  EXPECT_EQ(ramified_places(quat(-1, 7)), (std::vector<Place>{at(2), at(7)}));
  EXPECT_TRUE(ramified_places(quat(1, 5)).empty());
  EXPECT_EQ(ramified_places(quat(-1, -1)), (std::vector<Place>{at(2), Place::real()}));
}
