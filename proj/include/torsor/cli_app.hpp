#pragma once

/// @file cli_app.hpp
/// @brief The `torsor` command line: classify, hilbert, kummer, halve, search.
///
/// Exit status: 0 success, 1 domain error (malformed or invalid input),
/// 2 budget exhaustion.

#include "torsor/classifier.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace torsor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitBudget = 2;

inline constexpr const char* kBudgetEnv = "TORSOR_INDEX_BUDGET";

struct Budgets {
  long height = 100;
  long witness = kDefaultWitnessBudget;
};

/// Applies a TORSOR_INDEX_BUDGET value: either a bare witness budget `N`
/// or a comma list of `height=H` / `witness=W`.
Budgets apply_budget_override(Budgets base, const std::string& spec);

/// "0,a,b" -> curve y^2 = x(x-a)(x-b). The first root must be 0.
Curve parse_curve(const std::string& text);
/// "M,N" -> the pair of square classes.
DescentPair parse_class(const std::string& text);

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torsor::cli
