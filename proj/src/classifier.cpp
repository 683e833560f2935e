#include "torsor/classifier.hpp"

#include <array>
#include <numeric>

namespace torsor {

namespace {

Confidence confidence_for(const DescentGroup& P, int verdict) {
  if (verdict == 1 || P.provenance() == Provenance::complete) return Confidence::definite;
  return Confidence::conditional_on_descent_group;
}

struct ConicPoint {
  Integer x, y, w;
};

// Tries to turn a point of p X^2 + q Y^2 = W^2 into a witness A.
class WitnessBuilder {
 public:
  WitnessBuilder(const TorsorClass& t, const DescentPair& target)
      : t_(t), target_(target) {
    const Rational& a = t.curve.a();
    const Rational& b = t.curve.b();
    m_beta_ = Rational(t.m.value() * target.first.value());
    n_gamma_ = Rational(t.n.value() * target.second.value());
    p_ = -(a - b) * b * m_beta_;
    q_ = (a - b) * a * n_gamma_;
    p_.canonicalize();
    q_.canonicalize();
    p_free_ = SquareClass::of(p_).value();
    q_free_ = SquareClass::of(q_).value();
    Rational rp = p_ / Rational(p_free_), rq = q_ / Rational(q_free_);
    rp.canonicalize();
    rq.canonicalize();
    scale_p_ = rational_sqrt(rp);
    scale_q_ = rational_sqrt(rq);
  }

  QuaternionClass quaternion() const {
    return {SquareClass::from_square_free(p_free_), SquareClass::from_square_free(q_free_)};
  }

  // p' X'^2 + q' Y'^2 = W^2 in integers.
  bool on_conic(const ConicPoint& c) const {
    return p_free_ * c.x * c.x + q_free_ * c.y * c.y == c.w * c.w;
  }

  std::optional<Rational> from_point(const ConicPoint& c) const {
    // p X^2 = p' X'^2 with X = X' / scale_p.
    const Rational x = Rational(c.x) / scale_p_;
    const Rational y = Rational(c.y) / scale_q_;
    Rational d = m_beta_ * x * x - n_gamma_ * y * y;
    d.canonicalize();
    if (sgn(d) == 0) return std::nullopt;
    Rational A = Rational(c.w * c.w) / ((t_.curve.b() - t_.curve.a()) * d);
    A.canonicalize();
    if (!witness_holds(t_, target_, A)) return std::nullopt;
    return A;
  }

  // Second intersection of the conic with the line through `base` in
  // direction v.
  ConicPoint reflect(const ConicPoint& base, const std::array<long, 3>& v) const {
    const Integer qv = p_free_ * v[0] * v[0] + q_free_ * v[1] * v[1] - Integer(v[2]) * v[2];
    const Integer bv = p_free_ * base.x * v[0] + q_free_ * base.y * v[1] - base.w * v[2];
    ConicPoint out{qv * base.x - 2 * bv * v[0], qv * base.y - 2 * bv * v[1],
                   qv * base.w - 2 * bv * v[2]};
    Integer g;
    mpz_gcd(g.get_mpz_t(), out.x.get_mpz_t(), out.y.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.w.get_mpz_t());
    if (g > 1) {
      out.x /= g;
      out.y /= g;
      out.w /= g;
    }
    return out;
  }

  const Integer& p_free() const { return p_free_; }
  const Integer& q_free() const { return q_free_; }

 private:
  const TorsorClass& t_;
  const DescentPair& target_;
  Rational m_beta_, n_gamma_, p_, q_, scale_p_, scale_q_;
  Integer p_free_, q_free_;
};

std::optional<Rational> conic_witness(const WitnessBuilder& builder, long& remaining) {
  for (long r = 0; remaining > 0; ++r) {
    // The shell max(X', Y') = r.
    for (long i = 0; i <= r && remaining > 0; ++i) {
      const std::array<std::pair<long, long>, 2> cells = {{{r, i}, {i, r}}};
      for (std::size_t c = 0; c < (i == r ? 1u : 2u) && remaining > 0; ++c) {
        --remaining;
        const auto [x, y] = cells[c];
        if (x == 0 && y == 0) continue;
        const Integer value = builder.p_free() * x * x + builder.q_free() * y * y;
        if (value < 0 || !mpz_perfect_square_p(value.get_mpz_t())) continue;
        ConicPoint base{Integer(x), Integer(y), sqrt(value)};
        if (auto A = builder.from_point(base)) return A;
        // Spread the base point around the conic until all coordinates are
        // nonzero.
        for (long v0 = -2; v0 <= 2 && remaining > 0; ++v0) {
          for (long v1 = -2; v1 <= 2 && remaining > 0; ++v1) {
            for (long v2 = -2; v2 <= 2 && remaining > 0; ++v2) {
              --remaining;
              const ConicPoint next = builder.reflect(base, {v0, v1, v2});
              if (next.x == 0 && next.y == 0 && next.w == 0) continue;
              if (!builder.on_conic(next)) continue;
              if (auto A = builder.from_point(next)) return A;
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Rational> direct_witness(const TorsorClass& t, const DescentPair& target,
                                       long& remaining) {
  for (long h = 1; remaining > 0; ++h) {
    // Heights max(|n|, d) = h.
    for (long d = 1; d <= h && remaining > 0; ++d) {
      for (long n = -h; n <= h && remaining > 0; ++n) {
        if (std::max(std::labs(n), d) != h || std::gcd(n, d) != 1) continue;
        --remaining;
        const Rational A(n, d);
        if (witness_holds(t, target, A)) return A;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(Confidence c) {
  return c == Confidence::definite ? "definite" : "conditional-on-descent-group";
}

std::string to_string(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::descent_pair_match:
      return "descent-pair-match";
    case Witness::Kind::quaternion_split:
      return "quaternion-split";
    case Witness::Kind::degenerate_shape:
      return "degenerate-shape";
  }
  return "?";
}

Verdict period(const TorsorClass& t, const DescentGroup& P) {
  const int value = P.contains(t.pair()) ? 1 : 2;
  return {value, confidence_for(P, value)};
}

int index_special(const SquareClass& m, const SquareClass& n) {
  const SquareClass one;
  const SquareClass minus_one = SquareClass::from_square_free(-1);
  const SquareClass two = SquareClass::from_square_free(2);
  const std::array<DescentPair, 4> trivial = {DescentPair{one, one}, DescentPair{one, minus_one},
                                              DescentPair{two, two}, DescentPair{two, minus_one * two}};
  for (const auto& d : trivial) {
    if (d == DescentPair{m, n}) return 1;
  }
  const std::array<QuaternionClass, 4> algebras = {
      QuaternionClass{m, n}, QuaternionClass{m, minus_one * n},
      QuaternionClass{two * m, two * n}, QuaternionClass{two * m, minus_one * two * n}};
  for (const auto& q : algebras) {
    if (quaternion_splits(q)) return 2;
  }
  return 4;
}

QuaternionClass descent_quaternion(const TorsorClass& t, const DescentPair& beta_gamma) {
  const Rational& a = t.curve.a();
  const Rational& b = t.curve.b();
  const SquareClass left = SquareClass::of(-(a - b) * b) * t.m * beta_gamma.first;
  const SquareClass right = SquareClass::of((a - b) * a) * t.n * beta_gamma.second;
  return {left, right};
}

std::optional<TwoTorsionLabel> degenerate_shape(const DescentPair& d) {
  if (d.second.is_one()) return TwoTorsionLabel::sigma;  // <x-a, A>
  if (d.first.is_one()) return TwoTorsionLabel::tau;     // <x-b, A>
  if (d.first == d.second) return TwoTorsionLabel::omega;  // <x, A>
  return std::nullopt;
}

Verdict index_general(const TorsorClass& t, const DescentGroup& P) {
  if (P.contains(t.pair())) return {1, Confidence::definite};
  for (const auto& bg : P.elements()) {
    if (quaternion_splits(descent_quaternion(t, bg)) || degenerate_shape(t.pair() * bg)) {
      return {2, confidence_for(P, 2)};
    }
  }
  return {4, confidence_for(P, 4)};
}

bool witness_holds(const TorsorClass& t, const DescentPair& target, const Rational& A) {
  const Rational& a = t.curve.a();
  const Rational& b = t.curve.b();
  if (sgn(A) == 0 || A == a || A == b) return false;
  return SquareClass::of(Rational(t.m.value()) * A * (A - a)) == target.first &&
         SquareClass::of(Rational(t.n.value()) * A * (A - b)) == target.second;
}

std::optional<Rational> index_witness(const TorsorClass& t, const DescentPair& target,
                                      long budget) {
  const WitnessBuilder builder(t, target);
  // A witness forces a point on the conic, so a ramified quaternion means
  // none exists.
  if (!quaternion_splits(builder.quaternion())) return std::nullopt;
  long remaining = budget;
  if (auto A = conic_witness(builder, remaining)) return A;
  return direct_witness(t, target, remaining);
}

long ed_conjectural(long index) {
  if (index < 1) throw DomainError("ed_conjectural: index must be positive");
  const Factorization f = factor(Integer(index));
  long sum = 0;
  for (const auto& [p, e] : f.factors) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), e);
    sum += power.get_si();
  }
  return sum - static_cast<long>(f.factors.size()) + 1;
}

bool is_special_curve(const Curve& c) { return c.a() == 1 && c.b() == -1; }

TorsorClassification classify(const TorsorClass& t, const DescentGroup& P,
                              const ClassifyOptions& options) {
  TorsorClassification out;
  out.period = period(t, P).value;
  if (is_special_curve(t.curve)) {
    out.index = index_special(t.m, t.n);
  } else {
    out.index = index_general(t, P).value;
  }
  out.generic_index = out.index;
  out.confidence = confidence_for(P, out.index);
  out.essential_dimension_conjectural = ed_conjectural(out.index);

  if (out.index != 2) return out;
  std::optional<DescentPair> split_at;
  for (const auto& bg : P.elements()) {
    const QuaternionClass q = descent_quaternion(t, bg);
    if (!quaternion_splits(q)) continue;
    if (!split_at) split_at = bg;
    if (auto A = index_witness(t, bg, options.witness_budget)) {
      out.witness = Witness{Witness::Kind::descent_pair_match, A, bg, q, std::nullopt};
      return out;
    }
  }
  if (split_at) {
    out.witness = Witness{Witness::Kind::quaternion_split, std::nullopt, split_at,
                          descent_quaternion(t, *split_at), std::nullopt};
    return out;
  }
  for (const auto& bg : P.elements()) {
    if (auto label = degenerate_shape(t.pair() * bg)) {
      out.witness = Witness{Witness::Kind::degenerate_shape, std::nullopt, bg, std::nullopt,
                            label};
      return out;
    }
  }
  return out;
}

}  // namespace torsor
