#include "torsor/classifier.hpp"

#include <omp.h>

namespace torsor {

namespace {

// Only index-4 classes are kept, so no witness search is needed.
constexpr ClassifyOptions kNoWitness{0};

void scan_row(const Curve& c, const DescentGroup& P, const Integer& m,
              const std::vector<Integer>& values, std::vector<ExampleEntry>& out) {
  const SquareClass mc = SquareClass::from_square_free(m);
  for (const auto& n : values) {
    const TorsorClass t{c, mc, SquareClass::from_square_free(n)};
    TorsorClassification result = classify(t, P, kNoWitness);
    if (result.period == 2 && result.index == 4) out.push_back({t.pair(), std::move(result)});
  }
}

}  // namespace

std::vector<ExampleEntry> search_examples_serial(const Curve& c, const DescentGroup& P,
                                                 long bound) {
  const auto values = square_free_range(bound);
  std::vector<ExampleEntry> out;
  for (const auto& m : values) scan_row(c, P, m, values, out);
  return out;
}

std::vector<ExampleEntry> search_examples(const Curve& c, const DescentGroup& P, long bound) {
  const auto values = square_free_range(bound);
  const long rows = static_cast<long>(values.size());
  std::vector<std::vector<ExampleEntry>> per_row(values.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < rows; ++i) scan_row(c, P, values[i], values, per_row[i]);
  std::vector<ExampleEntry> out;
  for (auto& row : per_row) {
    for (auto& e : row) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace torsor
