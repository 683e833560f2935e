#pragma once

/// @file classifier.hpp
/// @brief Period, index and conjectural essential dimension of the torsor
///        class <x-a,M> (x) <x-b,N> of a full 2-torsion curve.
///
/// Index 2 is certified by either
///   - a split quaternion <-(a-b) b M beta, (a-b) a N gamma> for some
///     (beta, gamma) in P, or
///   - a translate (M,N)(beta,gamma) of shape (A,1), (1,A) or (A,A), i.e.
///     a single quaternion <x-a,A>, <x-b,A> or <x,A>.
/// On y^2 = x^3 - x the first test reduces to the four algebras
/// <M,N>, <M,-N>, <2M,2N>, <2M,-2N>.

#include "torsor/arith.hpp"
#include "torsor/elliptic.hpp"
#include "torsor/local_symbols.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torsor {

struct TorsorClass {
  Curve curve;
  SquareClass m;
  SquareClass n;

  DescentPair pair() const { return {m, n}; }
};

enum class Confidence { definite, conditional_on_descent_group };

std::string to_string(Confidence c);

struct Witness {
  enum class Kind { descent_pair_match, quaternion_split, degenerate_shape };

  Kind kind;
  std::optional<Rational> a_value;     // descent_pair_match
  std::optional<DescentPair> target;   // element of P the witness lands on
  std::optional<QuaternionClass> quaternion;  // quaternion_split
  std::optional<TwoTorsionLabel> shape;       // degenerate_shape
};

std::string to_string(Witness::Kind k);

struct TorsorClassification {
  int period = 1;
  int index = 1;
  int generic_index = 1;
  Confidence confidence = Confidence::definite;
  std::optional<Witness> witness;
  long essential_dimension_conjectural = 1;
};

struct Verdict {
  int value;
  Confidence confidence;
};

/// Default candidate budget for index witnesses.
inline constexpr long kDefaultWitnessBudget = 10'000;

/// 1 iff (m,n) lies in P. A verdict of 2 over a search-bounded P is
/// conditional.
Verdict period(const TorsorClass& t, const DescentGroup& P);

/// The four-quaternion criterion on y^2 = x^3 - x.
int index_special(const SquareClass& m, const SquareClass& n);

/// The quaternion <-(a-b) b M beta, (a-b) a N gamma> attached to an element
/// (beta, gamma) of P.
QuaternionClass descent_quaternion(const TorsorClass& t, const DescentPair& beta_gamma);

/// Returns the label sigma/tau/omega when (m,n) is of shape (A,1), (1,A)
/// or (A,A) respectively; (1,1) reports sigma.
std::optional<TwoTorsionLabel> degenerate_shape(const DescentPair& d);

/// Index from the descent-quaternion criterion and the degenerate shapes.
Verdict index_general(const TorsorClass& t, const DescentGroup& P);

/// A rational A with (M A(A-a), N A(A-b)) = target in (Q*/(Q*)^2)^2, or
/// nothing if `budget` candidates are exhausted. Conic points of
/// p X^2 + q Y^2 = W^2 for the descent quaternion <p,q> are tried first and
/// give A = W^2 / ((b-a)(M beta X^2 - N gamma Y^2)); a direct search over
/// A = n/d follows.
std::optional<Rational> index_witness(const TorsorClass& t, const DescentPair& target,
                                      long budget = kDefaultWitnessBudget);

/// True iff (M A(A-a), N A(A-b)) equals target exactly in square classes.
bool witness_holds(const TorsorClass& t, const DescentPair& target, const Rational& A);

/// sum p_i^{r_i} - k + 1 over the factorization of the index; 1 for index 1.
long ed_conjectural(long index);

/// True when the curve is literally y^2 = x(x-1)(x+1).
bool is_special_curve(const Curve& c);

struct ClassifyOptions {
  long witness_budget = kDefaultWitnessBudget;
};

TorsorClassification classify(const TorsorClass& t, const DescentGroup& P,
                              const ClassifyOptions& options = {});

struct ExampleEntry {
  DescentPair pair;
  TorsorClassification classification;
};

/// All square-free pairs |M|,|N| <= bound with period 2 and index 4, in
/// ascending (M, N) order. Parallel over M.
std::vector<ExampleEntry> search_examples(const Curve& c, const DescentGroup& P, long bound);
/// Single-threaded reference for search_examples.
std::vector<ExampleEntry> search_examples_serial(const Curve& c, const DescentGroup& P,
                                                 long bound);

}  // namespace torsor
