#pragma once

/// @file multiquad.hpp
/// @brief Exact arithmetic in Q(sqrt(d_1), ..., sqrt(d_k)), k <= 3, and
///        point halving on y^2 = x(x-a)(x-b) over such fields.

#include "torsor/arith.hpp"
#include "torsor/elliptic.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace torsor {

/// The ring Q[t_1..t_k]/(t_i^2 - d_i). A field when the d_i are independent
/// modulo squares.
class MultiQuadRing {
 public:
  static constexpr std::size_t kMaxGenerators = 3;

  /// Discriminants must be square-free, different from 1, pairwise distinct.
  static std::shared_ptr<const MultiQuadRing> create(std::vector<Integer> discriminants);

  const std::vector<Integer>& discriminants() const { return discriminants_; }
  std::size_t generators() const { return discriminants_.size(); }
  std::size_t dimension() const { return std::size_t{1} << discriminants_.size(); }

  /// prod_{i in s & t} d_i, so that sqrt(d_s) sqrt(d_t) = overlap * sqrt(d_{s^t}).
  const Integer& overlap(unsigned s, unsigned t) const { return overlap_[s][t]; }

  friend bool operator==(const MultiQuadRing& u, const MultiQuadRing& v) {
    return u.discriminants_ == v.discriminants_;
  }

 private:
  explicit MultiQuadRing(std::vector<Integer> discriminants);

  std::vector<Integer> discriminants_;
  std::array<std::array<Integer, 8>, 8> overlap_;
};

using RingPtr = std::shared_ptr<const MultiQuadRing>;

/// Raised when dividing by an element of zero norm.
class NonInvertible : public DomainError {
 public:
  NonInvertible(const std::string& what, Rational norm)
      : DomainError(what), norm_(std::move(norm)) {}
  const Rational& norm() const { return norm_; }

 private:
  Rational norm_;
};

/// sum over subsets S of c_S * prod_{i in S} sqrt(d_i).
class MultiQuadElement {
 public:
  explicit MultiQuadElement(RingPtr ring);

  static MultiQuadElement from_rational(RingPtr ring, const Rational& q);
  /// coeff * prod_{i in mask} sqrt(d_i)
  static MultiQuadElement monomial(RingPtr ring, unsigned mask, const Rational& coeff = 1);

  const RingPtr& ring() const { return ring_; }
  const Rational& coefficient(unsigned mask) const { return coeffs_.at(mask); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;

  /// Negates sqrt(d_i) for every i in flip_mask.
  MultiQuadElement conjugate(unsigned flip_mask) const;
  /// Product of all 2^k conjugates; a rational.
  Rational norm() const;
  /// Throws NonInvertible when the norm vanishes.
  MultiQuadElement inverse() const;

  MultiQuadElement operator-() const;
  friend MultiQuadElement operator+(const MultiQuadElement& u, const MultiQuadElement& v);
  friend MultiQuadElement operator-(const MultiQuadElement& u, const MultiQuadElement& v);
  friend MultiQuadElement operator*(const MultiQuadElement& u, const MultiQuadElement& v);
  friend MultiQuadElement operator/(const MultiQuadElement& u, const MultiQuadElement& v);
  friend MultiQuadElement operator+(const MultiQuadElement& u, const Rational& q);
  friend MultiQuadElement operator-(const MultiQuadElement& u, const Rational& q);
  friend MultiQuadElement operator*(const MultiQuadElement& u, const Rational& q);
  friend MultiQuadElement operator*(const Rational& q, const MultiQuadElement& u) {
    return u * q;
  }

  friend bool operator==(const MultiQuadElement& u, const MultiQuadElement& v);

 private:
  MultiQuadElement scaled(const Rational& q) const;

  RingPtr ring_;
  std::vector<Rational> coeffs_;
};

std::string to_string(const MultiQuadElement& e);

/// Q(sqrt(q_1), ..., sqrt(q_n)) with perfect squares and multiplicatively
/// dependent radicands dropped, so the underlying ring is a field of degree
/// 2^k' over Q.
class RadicalField {
 public:
  explicit RadicalField(const std::vector<Rational>& radicands);

  const RingPtr& ring() const { return ring_; }
  /// The distinguished square root c * prod_{i in S} sqrt(g_i) of q. Throws
  /// DomainError when q is not a square in the field.
  MultiQuadElement sqrt(const Rational& q) const;
  MultiQuadElement constant(const Rational& q) const {
    return MultiQuadElement::from_rational(ring_, q);
  }

 private:
  std::vector<SquareClass> basis_;
  RingPtr ring_;
};

/// A point of the curve with coordinates in a multiquadratic ring.
struct ExtPoint {
  bool identity = true;
  std::optional<MultiQuadElement> x;
  std::optional<MultiQuadElement> y;

  static ExtPoint affine(MultiQuadElement x, MultiQuadElement y) {
    return {false, std::move(x), std::move(y)};
  }
  friend bool operator==(const ExtPoint& p, const ExtPoint& q);
};

bool ext_on_curve(const Curve& c, const ExtPoint& p);
ExtPoint ext_negate(const ExtPoint& p);
ExtPoint ext_point_add(const Curve& c, const ExtPoint& p, const ExtPoint& q);
ExtPoint ext_from_rational(const RingPtr& ring, const CurvePoint& p);

struct HalfPointCandidate {
  std::array<int, 3> signs;  // (s1, s2, s3)
  MultiQuadElement x;
  MultiQuadElement y;
};

struct HalvingResult {
  RingPtr ring;
  ExtPoint target;
  std::vector<HalfPointCandidate> candidates;
};

/// Halves the point p = (A, y_p) with
///   x_m = A + s1 sqrt((A-a)(A-b)) + s2 sqrt(A(A-a)) + s3 sqrt(A(A-b)),
///   y_m = +-(x_m^2 - ab) / (2 sqrt(A)),
/// keeping the sign choices for which 2m = p holds exactly. If `y` is
/// absent, y_p = sqrt(A) sqrt(A-a) sqrt(A-b) in the working field.
/// Throws DomainError when A is the x-coordinate of a 2-torsion point, or
/// when a supplied y does not lie on the curve.
HalvingResult halve_point(const Curve& c, const Rational& A,
                          const std::optional<Rational>& y = std::nullopt);

}  // namespace torsor
