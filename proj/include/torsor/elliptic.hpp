#pragma once

/// @file elliptic.hpp
/// @brief Curves y^2 = x(x-a)(x-b) over Q, their rational points, the Kummer
///        descent map into (Q*/(Q*)^2)^2 and the descent subgroup P.
///
/// The nontrivial 2-torsion points are labelled sigma = (a,0), tau = (b,0)
/// and omega = (0,0); they pair with the functions x-a, x-b and x
/// respectively. A descent pair (M,N) stands for the biquaternion class
/// <x-a,M> (x) <x-b,N>.

#include "torsor/arith.hpp"

#include <string>
#include <vector>

namespace torsor {

enum class TwoTorsionLabel { sigma, tau, omega };

std::string to_string(TwoTorsionLabel label);

class CurvePoint {
 public:
  /// The identity e.
  CurvePoint() = default;
  CurvePoint(Rational x, Rational y) : identity_(false), x_(std::move(x)), y_(std::move(y)) {}

  static CurvePoint identity() { return {}; }

  bool is_identity() const { return identity_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  friend bool operator==(const CurvePoint& p, const CurvePoint& q) {
    if (p.identity_ || q.identity_) return p.identity_ == q.identity_;
    return p.x_ == q.x_ && p.y_ == q.y_;
  }
  /// Identity first, then by (x, y).
  friend bool operator<(const CurvePoint& p, const CurvePoint& q) {
    if (p.identity_ || q.identity_) return p.identity_ && !q.identity_;
    if (p.x_ != q.x_) return p.x_ < q.x_;
    return p.y_ < q.y_;
  }

 private:
  bool identity_ = true;
  Rational x_;
  Rational y_;
};

std::string to_string(const CurvePoint& p);

class Curve {
 public:
  /// Throws DomainError unless 0, a, b are pairwise distinct.
  Curve(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  /// x(x-a)(x-b)
  Rational rhs(const Rational& x) const;
  bool contains(const CurvePoint& p) const;
  /// Throws DomainError naming `what` if p is not on the curve.
  void require_on_curve(const CurvePoint& p, const char* what) const;

  CurvePoint two_torsion(TwoTorsionLabel label) const;

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  Rational a_;
  Rational b_;
};

std::string to_string(const Curve& c);

CurvePoint negate(const CurvePoint& p);
/// Chord-tangent addition. Throws DomainError on off-curve input.
CurvePoint point_add(const Curve& c, const CurvePoint& p, const CurvePoint& q);
CurvePoint point_double(const Curve& c, const CurvePoint& p);

struct DescentPair {
  SquareClass first;   // partners x - a
  SquareClass second;  // partners x - b

  friend DescentPair operator*(const DescentPair& u, const DescentPair& v) {
    return {u.first * v.first, u.second * v.second};
  }
  friend bool operator==(const DescentPair&, const DescentPair&) = default;
  friend auto operator<=>(const DescentPair&, const DescentPair&) = default;

  bool is_identity() const { return first.is_one() && second.is_one(); }
};

std::string to_string(const DescentPair& d);

/// The Kummer image of a rational point:
///   e            -> (1, 1)
///   (u, y), u != a, b, 0 -> (u - b, u - a)
///   sigma = (a,0) -> (a - b, (a - b) a)
///   tau   = (b,0) -> ((b - a) b, b - a)
///   omega = (0,0) -> image(sigma) * image(tau)
DescentPair kummer_image(const Curve& c, const CurvePoint& p);

enum class Provenance { complete, search_bounded };

std::string to_string(Provenance p);

/// A finite subgroup of (Q*/(Q*)^2)^2, kept sorted.
class DescentGroup {
 public:
  /// The trivial group {(1,1)}.
  DescentGroup() : elements_{DescentPair{}} {}

  /// Closure of `generators` under componentwise multiplication.
  static DescentGroup generated_by(const std::vector<DescentPair>& generators,
                                   Provenance provenance);

  const std::vector<DescentPair>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  Provenance provenance() const { return provenance_; }
  bool contains(const DescentPair& d) const;

 private:
  std::vector<DescentPair> elements_;
  Provenance provenance_ = Provenance::search_bounded;
};

/// All affine points with x = n/d, |n| <= height, 1 <= d <= height, sorted.
/// OpenMP-parallel over numerators.
std::vector<CurvePoint> bounded_point_search(const Curve& c, long height);
/// Single-threaded reference for bounded_point_search.
std::vector<CurvePoint> bounded_point_search_serial(const Curve& c, long height);

/// The group generated by the Kummer images of `points`.
DescentGroup descent_group(const Curve& c, const std::vector<CurvePoint>& points,
                           Provenance provenance = Provenance::search_bounded);

/// True when the curve is y^2 = x(x^2 - s^4) up to the order of a, b, i.e.
/// isomorphic to y^2 = x^3 - x, whose Mordell-Weil group is E[2].
bool mordell_weil_is_two_torsion(const Curve& c);

/// Point search at `height`, with provenance complete exactly when
/// mordell_weil_is_two_torsion(c) holds or the caller asserts it.
DescentGroup search_descent_group(const Curve& c, long height, bool assert_complete = false);

}  // namespace torsor
