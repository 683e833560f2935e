#include "torsor/elliptic.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

namespace torsor {

namespace {

// Points with x = n/d for a fixed numerator n.
void scan_numerator(const Curve& c, long n, long height, std::vector<CurvePoint>& out) {
  for (long d = 1; d <= height; ++d) {
    if (std::gcd(n, d) != 1) continue;
    const Rational x(n, d);  // coprime, already canonical
    const Rational value = c.rhs(x);
    if (sgn(value) < 0 || !is_rational_square(value)) continue;
    const Rational y = rational_sqrt(value);
    out.emplace_back(x, y);
    if (sgn(y) != 0) out.emplace_back(x, -y);
  }
}

}  // namespace

std::vector<CurvePoint> bounded_point_search_serial(const Curve& c, long height) {
  std::vector<CurvePoint> out;
  for (long n = -height; n <= height; ++n) scan_numerator(c, n, height, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CurvePoint> bounded_point_search(const Curve& c, long height) {
  std::vector<CurvePoint> out;
#pragma omp parallel
  {
    std::vector<CurvePoint> local;
#pragma omp for schedule(dynamic, 4) nowait
    for (long n = -height; n <= height; ++n) scan_numerator(c, n, height, local);
#pragma omp critical(torsor_point_search_merge)
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace torsor
