#include "torsor/elliptic.hpp"

#include <algorithm>
#include <set>

namespace torsor {

std::string to_string(TwoTorsionLabel label) {
  switch (label) {
    case TwoTorsionLabel::sigma:
      return "sigma";
    case TwoTorsionLabel::tau:
      return "tau";
    case TwoTorsionLabel::omega:
      return "omega";
  }
  return "?";
}

std::string to_string(const CurvePoint& p) {
  if (p.is_identity()) return "O";
  return "(" + to_string(p.x()) + ", " + to_string(p.y()) + ")";
}

Curve::Curve(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(a_) == 0 || sgn(b_) == 0 || a_ == b_) {
    throw DomainError("singular curve: roots 0, " + to_string(a_) + ", " + to_string(b_) +
                      " are not distinct");
  }
}

Rational Curve::rhs(const Rational& x) const { return x * (x - a_) * (x - b_); }

bool Curve::contains(const CurvePoint& p) const {
  return p.is_identity() || p.y() * p.y() == rhs(p.x());
}

void Curve::require_on_curve(const CurvePoint& p, const char* what) const {
  if (!contains(p)) {
    throw DomainError(std::string(what) + ": point " + to_string(p) + " is not on " +
                      to_string(*this));
  }
}

CurvePoint Curve::two_torsion(TwoTorsionLabel label) const {
  switch (label) {
    case TwoTorsionLabel::sigma:
      return {a_, 0};
    case TwoTorsionLabel::tau:
      return {b_, 0};
    case TwoTorsionLabel::omega:
      break;
  }
  return {0, 0};
}

std::string to_string(const Curve& c) {
  auto factor_text = [](const Rational& r) {
    return sgn(r) > 0 ? "(x - " + to_string(r) + ")" : "(x + " + to_string(Rational(-r)) + ")";
  };
  return "y^2 = x" + factor_text(c.a()) + factor_text(c.b());
}

CurvePoint negate(const CurvePoint& p) {
  if (p.is_identity()) return p;
  return {p.x(), -p.y()};
}

CurvePoint point_add(const Curve& c, const CurvePoint& p, const CurvePoint& q) {
  c.require_on_curve(p, "point_add");
  c.require_on_curve(q, "point_add");
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;
  // y^2 = x^3 + a2 x^2 + a4 x
  const Rational a2 = -(c.a() + c.b());
  const Rational a4 = c.a() * c.b();
  Rational slope;
  if (p.x() == q.x()) {
    if (p.y() != q.y() || sgn(p.y()) == 0) return CurvePoint::identity();
    slope = (3 * p.x() * p.x() + 2 * a2 * p.x() + a4) / (2 * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  Rational x3 = slope * slope - a2 - p.x() - q.x();
  Rational y3 = slope * (p.x() - x3) - p.y();
  x3.canonicalize();
  y3.canonicalize();
  return {x3, y3};
}

CurvePoint point_double(const Curve& c, const CurvePoint& p) { return point_add(c, p, p); }

std::string to_string(const DescentPair& d) {
  return "(" + to_string(d.first) + ", " + to_string(d.second) + ")";
}

DescentPair kummer_image(const Curve& c, const CurvePoint& p) {
  c.require_on_curve(p, "kummer_image");
  if (p.is_identity()) return {};
  const Rational& a = c.a();
  const Rational& b = c.b();
  const DescentPair sigma{SquareClass::of(a - b), SquareClass::of((a - b) * a)};
  const DescentPair tau{SquareClass::of((b - a) * b), SquareClass::of(b - a)};
  const Rational& u = p.x();
  if (u == a) return sigma;
  if (u == b) return tau;
  if (sgn(u) == 0) return sigma * tau;
  return {SquareClass::of(u - b), SquareClass::of(u - a)};
}

std::string to_string(Provenance p) {
  return p == Provenance::complete ? "complete" : "search-bounded";
}

DescentGroup DescentGroup::generated_by(const std::vector<DescentPair>& generators,
                                        Provenance provenance) {
  std::set<DescentPair> group{DescentPair{}};
  for (const auto& g : generators) {
    if (group.contains(g)) continue;
    std::vector<DescentPair> coset;
    coset.reserve(group.size());
    for (const auto& h : group) coset.push_back(h * g);
    group.insert(coset.begin(), coset.end());
  }
  DescentGroup out;
  out.elements_.assign(group.begin(), group.end());
  out.provenance_ = provenance;
  return out;
}

bool DescentGroup::contains(const DescentPair& d) const {
  return std::binary_search(elements_.begin(), elements_.end(), d);
}

DescentGroup descent_group(const Curve& c, const std::vector<CurvePoint>& points,
                           Provenance provenance) {
  std::vector<DescentPair> images;
  images.reserve(points.size());
  for (const auto& p : points) images.push_back(kummer_image(c, p));
  return DescentGroup::generated_by(images, provenance);
}

bool mordell_weil_is_two_torsion(const Curve& c) {
  return c.a() == -c.b() && is_rational_square(abs(c.a()));
}

DescentGroup search_descent_group(const Curve& c, long height, bool assert_complete) {
  const auto points = bounded_point_search(c, height);
  std::vector<CurvePoint> generators = points;
  for (auto label : {TwoTorsionLabel::sigma, TwoTorsionLabel::tau}) {
    generators.push_back(c.two_torsion(label));
  }
  const bool complete = assert_complete || mordell_weil_is_two_torsion(c);
  return descent_group(c, generators,
                       complete ? Provenance::complete : Provenance::search_bounded);
}

}  // namespace torsor
