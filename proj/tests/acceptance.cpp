// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include "support/oracles.hpp"
#include "torsor/classifier.hpp"
#include "torsor/multiquad.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace torsor;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

SquareClass sc(long n) { return SquareClass::of(Rational(n)); }

std::vector<SquareClass> square_frees(long bound) {
  std::vector<SquareClass> out;
  for (const auto& n : square_free_range(bound)) out.push_back(SquareClass::from_square_free(n));
  return out;
}

const Curve kSpecial(1, -1);

const DescentGroup& special_group() {
  static const DescentGroup P = search_descent_group(kSpecial, 100);
  return P;
}

// 1: the period 2, index 4 class, exact, under one second.
Result cassels() {
  const auto t0 = Clock::now();
  const auto r = classify({kSpecial, sc(-1), sc(7)}, search_descent_group(kSpecial, 100));
  const double dt = seconds_since(t0);
  std::ostringstream s;
  s << "period=" << r.period << " index=" << r.index << " generic=" << r.generic_index
    << " ed=" << r.essential_dimension_conjectural << " time=" << dt << "s (limit 1s)";
  return {r.period == 2 && r.index == 4 && r.generic_index == 4 &&
              r.essential_dimension_conjectural == 4 && dt < 1.0,
          s.str()};
}

// 2: P at H = 100 on the special curve.
Result descent_group_exact() {
  const DescentGroup& P = special_group();
  const std::set<DescentPair> expected = {
      {sc(1), sc(1)}, {sc(1), sc(-1)}, {sc(2), sc(2)}, {sc(2), sc(-2)}};
  const std::set<DescentPair> got(P.elements().begin(), P.elements().end());
  std::ostringstream s;
  s << "order=" << P.size() << " provenance=" << to_string(P.provenance());
  return {got == expected && P.size() == 4 && P.provenance() == Provenance::complete, s.str()};
}

// 3: every element of P is trivial.
Result triviality() {
  int bad = 0;
  for (const auto& d : special_group().elements()) {
    const auto r = classify({kSpecial, d.first, d.second}, special_group());
    if (r.period != 1 || r.index != 1) ++bad;
  }
  return {bad == 0, std::to_string(bad) + " of 4 elements misclassified"};
}

// 4: the four-quaternion test agrees with the general criterion.
Result criterion_equivalence() {
  const auto t0 = Clock::now();
  const auto classes = square_frees(30);
  long mismatches = 0, pairs = 0;
  for (const auto& m : classes) {
    for (const auto& n : classes) {
      ++pairs;
      if (index_special(m, n) != index_general({kSpecial, m, n}, special_group()).value) {
        ++mismatches;
      }
    }
  }
  const double dt = seconds_since(t0);
  std::ostringstream s;
  s << mismatches << " mismatches over " << pairs << " pairs, time=" << dt << "s (limit 30s)";
  return {mismatches == 0 && dt < 30.0, s.str()};
}

// 5: product formula on random pairs and brute-force agreement on a grid.
Result hilbert_soundness() {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<long> dist(-1'000'000, 1'000'000);
  long product_failures = 0;
  for (int i = 0; i < 500; ++i) {
    long a = 0, b = 0;
    while (a == 0) a = dist(rng);
    while (b == 0) b = dist(rng);
    const SquareClass ca = sc(a), cb = sc(b);
    int product = 1;
    for (const auto& v : candidate_places(ca, cb)) product *= hilbert_symbol(ca, cb, v);
    if (product != 1) ++product_failures;
  }
  std::vector<Place> places{Place::real()};
  for (auto p : oracle::primes_up_to(50)) places.push_back(Place::finite(Integer(p)));
  long grid_mismatches = 0, checked = 0;
  for (long a = -20; a <= 20; ++a) {
    for (long b = -20; b <= 20; ++b) {
      if (a == 0 || b == 0) continue;
      for (const auto& v : places) {
        ++checked;
        if (hilbert_symbol(sc(a), sc(b), v) != oracle::hilbert_oracle(a, b, v)) {
          ++grid_mismatches;
        }
      }
    }
  }
  std::ostringstream s;
  s << product_failures << " product-formula failures over 500 pairs, " << grid_mismatches
    << " oracle mismatches over " << checked << " symbols";
  return {product_failures == 0 && grid_mismatches == 0, s.str()};
}

// 6: every index-2 class gets an explicit A landing in P.
Result witness_extraction() {
  const DescentGroup& P = special_group();
  const auto classes = square_frees(20);
  long index_two = 0, missing = 0;
  for (const auto& m : classes) {
    for (const auto& n : classes) {
      const TorsorClass t{kSpecial, m, n};
      if (index_special(m, n) != 2) continue;
      ++index_two;
      bool found = false;
      for (const auto& target : P.elements()) {
        const auto A = index_witness(t, target);
        if (!A) continue;
        const Rational& x = *A;
        const DescentPair image{SquareClass::of(m.value() * x * (x - 1)),
                                SquareClass::of(n.value() * x * (x + 1))};
        if (P.contains(image)) {
          found = true;
          break;
        }
      }
      if (!found) ++missing;
    }
  }
  std::ostringstream s;
  s << (index_two - missing) << "/" << index_two << " index-2 classes with a verified witness";
  return {missing == 0 && index_two > 0, s.str()};
}

// 7: halving (25/4, -35/8) on y^2 = x(x-6)(x+6).
Result halving() {
  const Curve c(6, -6);
  const CurvePoint target(Rational(25, 4), Rational(-35, 8));
  const HalvingResult h = halve_point(c, target.x(), target.y());
  bool has_minus_three = false;
  int doubles_back = 0;
  for (const auto& cand : h.candidates) {
    if (cand.x == MultiQuadElement::from_rational(h.ring, -3)) has_minus_three = true;
    const ExtPoint m = ExtPoint::affine(cand.x, cand.y);
    if (ext_on_curve(c, m) && ext_point_add(c, m, m) == ext_from_rational(h.ring, target)) {
      ++doubles_back;
    }
  }
  std::ostringstream s;
  s << h.candidates.size() << " candidates, " << doubles_back << " double back, x_m=-3 "
    << (has_minus_three ? "found" : "missing");
  return {has_minus_three && h.candidates.size() == 4 && doubles_back == 4, s.str()};
}

// 8: per | ind | per^2 and per = 1 <=> ind = 1 on two curves.
Result divisibility() {
  const Curve second(5, -5);
  const DescentGroup P2 = search_descent_group(second, 30, true);
  const auto classes = square_frees(30);
  long violations = 0, checked = 0;
  for (const auto& [curve, P] : {std::pair{kSpecial, special_group()}, std::pair{second, P2}}) {
    for (const auto& m : classes) {
      for (const auto& n : classes) {
        const auto r = classify({curve, m, n}, P, {0});
        ++checked;
        const bool ok = r.index % r.period == 0 && (r.period * r.period) % r.index == 0 &&
                        (r.period == 1) == (r.index == 1);
        if (!ok) ++violations;
      }
    }
  }
  std::ostringstream s;
  s << violations << " violations over " << checked << " classifications on "
    << to_string(kSpecial) << " and " << to_string(second);
  return {violations == 0, s.str()};
}

// 9: the Kummer map is a homomorphism killing 2E.
Result kummer_homomorphism() {
  const Curve c(6, -6);
  std::vector<CurvePoint> points = bounded_point_search(c, 30);
  points.push_back(CurvePoint::identity());
  long violations = 0, checked = 0;
  for (const auto& p : points) {
    if (!kummer_image(c, point_double(c, p)).is_identity()) ++violations;
    for (const auto& q : points) {
      ++checked;
      if (kummer_image(c, point_add(c, p, q)) != kummer_image(c, p) * kummer_image(c, q)) {
        ++violations;
      }
    }
  }
  std::ostringstream s;
  s << violations << " violations over " << points.size() << " points (" << checked << " sums)";
  return {violations == 0, s.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
      {"period 2 index 4 class (-1,7)", cassels},
      {"descent group at H=100", descent_group_exact},
      {"elements of P are trivial", triviality},
      {"special vs general index criterion", criterion_equivalence},
      {"Hilbert symbol soundness", hilbert_soundness},
      {"index-2 witness extraction", witness_extraction},
      {"halving (25/4,-35/8)", halving},
      {"period/index divisibility", divisibility},
      {"Kummer homomorphism", kummer_homomorphism},
  };
  int failures = 0;
  int number = 0;
  for (const auto& [name, check] : criteria) {
    ++number;
    Result r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.pass) ++failures;
    std::printf("[%s] %d. %s: %s\n", r.pass ? "PASS" : "FAIL", number, name, r.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", number - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
