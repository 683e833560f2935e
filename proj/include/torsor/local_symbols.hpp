#pragma once

/// @file local_symbols.hpp
/// @brief Hilbert symbols at the places of Q and splitting of quaternion
///        algebras <a,b>.

#include "torsor/arith.hpp"

#include <string>
#include <vector>

namespace torsor {

/// A place of Q: a finite prime or the real place.
class Place {
 public:
  static Place real() { return Place(); }
  /// Throws DomainError unless p is prime.
  static Place finite(const Integer& p);

  bool is_real() const { return real_; }
  /// The prime of a finite place; 0 for the real place.
  const Integer& prime() const { return prime_; }

  friend bool operator==(const Place& u, const Place& v) {
    return u.real_ == v.real_ && u.prime_ == v.prime_;
  }
  /// Finite places by ascending prime, the real place last.
  friend bool operator<(const Place& u, const Place& v) {
    if (u.real_ != v.real_) return v.real_;
    return u.prime_ < v.prime_;
  }

 private:
  Place() = default;
  bool real_ = true;
  Integer prime_ = 0;
};

/// Parses "real", "inf" or a prime.
Place parse_place(const std::string& text);
std::string to_string(const Place& v);

/// The quaternion algebra <a,b> with i^2 = a, j^2 = b, ij = -ji.
struct QuaternionClass {
  SquareClass a;
  SquareClass b;
};

/// (a,b)_v from the closed local formulas.
int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v);
/// Rational arguments are reduced to square classes first. Zero is rejected.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// {odd primes dividing ab} u {2} u {real}, in Place order. Every place
/// outside this set has symbol +1.
std::vector<Place> candidate_places(const SquareClass& a, const SquareClass& b);

/// True iff <a,b> is a matrix algebra, i.e. every local symbol is +1.
bool quaternion_splits(const QuaternionClass& q);

/// Places where <a,b> ramifies; always an even number of them.
std::vector<Place> ramified_places(const QuaternionClass& q);

}  // namespace torsor
