#include "torsor/multiquad.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace torsor {

namespace {

void require_same_ring(const MultiQuadElement& u, const MultiQuadElement& v) {
  if (u.ring() != v.ring() && !(*u.ring() == *v.ring())) {
    throw DomainError("multiquadratic elements from different rings");
  }
}

}  // namespace

MultiQuadRing::MultiQuadRing(std::vector<Integer> discriminants)
    : discriminants_(std::move(discriminants)) {
  const unsigned dim = 1u << discriminants_.size();
  for (unsigned s = 0; s < dim; ++s) {
    for (unsigned t = 0; t < dim; ++t) {
      Integer product = 1;
      for (std::size_t i = 0; i < discriminants_.size(); ++i) {
        if ((s & t) & (1u << i)) product *= discriminants_[i];
      }
      overlap_[s][t] = product;
    }
  }
}

std::shared_ptr<const MultiQuadRing> MultiQuadRing::create(std::vector<Integer> discriminants) {
  if (discriminants.size() > kMaxGenerators) {
    throw DomainError("multiquadratic ring supports at most three generators");
  }
  for (std::size_t i = 0; i < discriminants.size(); ++i) {
    const Integer& d = discriminants[i];
    if (d == 0 || d == 1) throw DomainError("discriminant " + to_string(d) + " is not allowed");
    if (SquareClass::of(Rational(d)).value() != d) {
      throw DomainError("discriminant " + to_string(d) + " is not square-free");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (discriminants[j] == d) throw DomainError("repeated discriminant " + to_string(d));
    }
  }
  return std::shared_ptr<const MultiQuadRing>(new MultiQuadRing(std::move(discriminants)));
}

MultiQuadElement::MultiQuadElement(RingPtr ring)
    : ring_(std::move(ring)), coeffs_(ring_->dimension()) {}

MultiQuadElement MultiQuadElement::from_rational(RingPtr ring, const Rational& q) {
  return monomial(std::move(ring), 0, q);
}

MultiQuadElement MultiQuadElement::monomial(RingPtr ring, unsigned mask, const Rational& coeff) {
  MultiQuadElement e(std::move(ring));
  if (mask >= e.coeffs_.size()) throw DomainError("monomial index out of range");
  e.coeffs_[mask] = coeff;
  return e;
}

bool MultiQuadElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool MultiQuadElement::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

MultiQuadElement MultiQuadElement::conjugate(unsigned flip_mask) const {
  MultiQuadElement out = *this;
  for (unsigned s = 0; s < out.coeffs_.size(); ++s) {
    if (std::popcount(s & flip_mask) % 2 == 1) out.coeffs_[s] = -out.coeffs_[s];
  }
  return out;
}

Rational MultiQuadElement::norm() const {
  MultiQuadElement product = *this;
  for (unsigned flip = 1; flip < coeffs_.size(); ++flip) product = product * conjugate(flip);
  return product.coeffs_[0];
}

MultiQuadElement MultiQuadElement::inverse() const {
  MultiQuadElement others = from_rational(ring_, 1);
  for (unsigned flip = 1; flip < coeffs_.size(); ++flip) others = others * conjugate(flip);
  const Rational n = (*this * others).coeffs_[0];
  if (sgn(n) == 0) {
    throw NonInvertible("element " + to_string(*this) + " has norm 0 and is not invertible", n);
  }
  return others.scaled(1 / n);
}

MultiQuadElement MultiQuadElement::scaled(const Rational& q) const {
  MultiQuadElement out = *this;
  for (auto& c : out.coeffs_) c *= q;
  return out;
}

MultiQuadElement MultiQuadElement::operator-() const { return scaled(-1); }

MultiQuadElement operator+(const MultiQuadElement& u, const MultiQuadElement& v) {
  require_same_ring(u, v);
  MultiQuadElement out = u;
  for (std::size_t s = 0; s < out.coeffs_.size(); ++s) out.coeffs_[s] += v.coeffs_[s];
  return out;
}

MultiQuadElement operator-(const MultiQuadElement& u, const MultiQuadElement& v) {
  require_same_ring(u, v);
  MultiQuadElement out = u;
  for (std::size_t s = 0; s < out.coeffs_.size(); ++s) out.coeffs_[s] -= v.coeffs_[s];
  return out;
}

MultiQuadElement operator*(const MultiQuadElement& u, const MultiQuadElement& v) {
  require_same_ring(u, v);
  MultiQuadElement out(u.ring_);
  const unsigned dim = static_cast<unsigned>(u.coeffs_.size());
  for (unsigned s = 0; s < dim; ++s) {
    if (sgn(u.coeffs_[s]) == 0) continue;
    for (unsigned t = 0; t < dim; ++t) {
      if (sgn(v.coeffs_[t]) == 0) continue;
      out.coeffs_[s ^ t] += u.coeffs_[s] * v.coeffs_[t] * u.ring_->overlap(s, t);
    }
  }
  return out;
}

MultiQuadElement operator/(const MultiQuadElement& u, const MultiQuadElement& v) {
  require_same_ring(u, v);
  return u * v.inverse();
}

MultiQuadElement operator+(const MultiQuadElement& u, const Rational& q) {
  MultiQuadElement out = u;
  out.coeffs_[0] += q;
  return out;
}

MultiQuadElement operator-(const MultiQuadElement& u, const Rational& q) {
  MultiQuadElement out = u;
  out.coeffs_[0] -= q;
  return out;
}

MultiQuadElement operator*(const MultiQuadElement& u, const Rational& q) { return u.scaled(q); }

bool operator==(const MultiQuadElement& u, const MultiQuadElement& v) {
  require_same_ring(u, v);
  return u.coeffs_ == v.coeffs_;
}

std::string to_string(const MultiQuadElement& e) {
  std::ostringstream os;
  bool first = true;
  const auto& ds = e.ring()->discriminants();
  for (unsigned s = 0; s < e.coefficients().size(); ++s) {
    const Rational& c = e.coefficient(s);
    if (sgn(c) == 0) continue;
    std::string radical;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (s & (1u << i)) radical += (radical.empty() ? "" : "*") + ("sqrt(" + to_string(ds[i]) + ")");
    }
    const Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (radical.empty()) {
      os << to_string(magnitude);
    } else if (magnitude == 1) {
      os << radical;
    } else {
      os << to_string(magnitude) << "*" << radical;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

RadicalField::RadicalField(const std::vector<Rational>& radicands) {
  auto in_span = [this](const SquareClass& c) {
    for (unsigned mask = 0; mask < (1u << basis_.size()); ++mask) {
      SquareClass product;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (mask & (1u << i)) product = product * basis_[i];
      }
      if (product == c) return true;
    }
    return false;
  };
  for (const auto& q : radicands) {
    const SquareClass c = SquareClass::of(q);
    if (!in_span(c)) {
      if (basis_.size() == MultiQuadRing::kMaxGenerators) {
        throw DomainError("radical field would exceed degree 8");
      }
      basis_.push_back(c);
    }
  }
  std::vector<Integer> ds;
  for (const auto& c : basis_) ds.push_back(c.value());
  ring_ = MultiQuadRing::create(std::move(ds));
}

MultiQuadElement RadicalField::sqrt(const Rational& q) const {
  if (sgn(q) == 0) return constant(0);
  const SquareClass c = SquareClass::of(q);
  for (unsigned mask = 0; mask < (1u << basis_.size()); ++mask) {
    SquareClass product;
    Integer radicand = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (mask & (1u << i)) {
        product = product * basis_[i];
        radicand *= basis_[i].value();
      }
    }
    if (product == c) {
      Rational ratio = q / Rational(radicand);
      ratio.canonicalize();
      return MultiQuadElement::monomial(ring_, mask, rational_sqrt(ratio));
    }
  }
  throw DomainError(to_string(q) + " has no square root in the working field");
}

bool operator==(const ExtPoint& p, const ExtPoint& q) {
  if (p.identity || q.identity) return p.identity == q.identity;
  return *p.x == *q.x && *p.y == *q.y;
}

bool ext_on_curve(const Curve& c, const ExtPoint& p) {
  if (p.identity) return true;
  const auto& x = *p.x;
  return *p.y * *p.y == x * (x - c.a()) * (x - c.b());
}

ExtPoint ext_negate(const ExtPoint& p) {
  if (p.identity) return p;
  return ExtPoint::affine(*p.x, -*p.y);
}

ExtPoint ext_point_add(const Curve& c, const ExtPoint& p, const ExtPoint& q) {
  if (!ext_on_curve(c, p) || !ext_on_curve(c, q)) {
    throw DomainError("ext_point_add: point not on " + to_string(c));
  }
  if (p.identity) return q;
  if (q.identity) return p;
  const Rational a2 = -(c.a() + c.b());
  const Rational a4 = c.a() * c.b();
  const auto& x1 = *p.x;
  const auto& y1 = *p.y;
  const auto& x2 = *q.x;
  const auto& y2 = *q.y;
  MultiQuadElement slope(x1.ring());
  if (x1 == x2) {
    if (!(y1 == y2) || y1.is_zero()) return {};
    slope = (x1 * x1 * Rational(3) + x1 * (2 * a2) + a4) / (y1 * Rational(2));
  } else {
    slope = (y2 - y1) / (x2 - x1);
  }
  MultiQuadElement x3 = slope * slope - a2 - x1 - x2;
  MultiQuadElement y3 = slope * (x1 - x3) - y1;
  return ExtPoint::affine(std::move(x3), std::move(y3));
}

ExtPoint ext_from_rational(const RingPtr& ring, const CurvePoint& p) {
  if (p.is_identity()) return {};
  return ExtPoint::affine(MultiQuadElement::from_rational(ring, p.x()),
                          MultiQuadElement::from_rational(ring, p.y()));
}

HalvingResult halve_point(const Curve& c, const Rational& A, const std::optional<Rational>& y) {
  if (sgn(A) == 0 || A == c.a() || A == c.b()) {
    throw DomainError("halve_point: x = " + to_string(A) + " is a 2-torsion point");
  }
  if (y && *y * *y != c.rhs(A)) {
    throw DomainError("halve_point: (" + to_string(A) + ", " + to_string(*y) +
                      ") is not on " + to_string(c));
  }
  const RadicalField field({A, A - c.a(), A - c.b()});
  const auto& ring = field.ring();
  const MultiQuadElement root_a = field.sqrt(A);
  const MultiQuadElement root_sigma = field.sqrt(A - c.a());
  const MultiQuadElement root_tau = field.sqrt(A - c.b());

  HalvingResult result;
  result.ring = ring;
  result.target = ExtPoint::affine(field.constant(A), y ? field.constant(*y)
                                                        : root_a * root_sigma * root_tau);
  const ExtPoint target_neg = ext_negate(result.target);

  const MultiQuadElement t1 = root_sigma * root_tau;
  const MultiQuadElement t2 = root_a * root_sigma;
  const MultiQuadElement t3 = root_a * root_tau;
  const MultiQuadElement two_root_a = root_a * Rational(2);
  for (unsigned mask = 0; mask < 8; ++mask) {
    const std::array<int, 3> signs = {(mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1,
                                      (mask & 4) ? -1 : 1};
    const MultiQuadElement xm = t1 * Rational(signs[0]) + t2 * Rational(signs[1]) +
                                t3 * Rational(signs[2]) + A;
    MultiQuadElement ym = (xm * xm - c.a() * c.b()) / two_root_a;
    ExtPoint m = ExtPoint::affine(xm, ym);
    if (!ext_on_curve(c, m)) continue;
    const ExtPoint doubled = ext_point_add(c, m, m);
    if (doubled == target_neg) {
      ym = -ym;
    } else if (!(doubled == result.target)) {
      continue;
    }
    const bool seen = std::any_of(result.candidates.begin(), result.candidates.end(),
                                  [&](const HalfPointCandidate& h) { return h.x == xm; });
    if (!seen) result.candidates.push_back({signs, xm, ym});
  }
  return result;
}

}  // namespace torsor
