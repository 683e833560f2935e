#include "torsor/local_symbols.hpp"

#include <algorithm>
#include <set>

namespace torsor {

namespace {

// (u-1)/2 mod 2 and (u^2-1)/8 mod 2 for an odd integer u.
int epsilon(const Integer& u) { return mpz_fdiv_ui(u.get_mpz_t(), 4) == 3 ? 1 : 0; }

int omega(const Integer& u) {
  const unsigned long r = mpz_fdiv_ui(u.get_mpz_t(), 8);
  return (r == 3 || r == 5) ? 1 : 0;
}

struct Split {
  unsigned exponent;
  Integer unit;
};

Split split_off(const Integer& n, const Integer& p) {
  Split s{0, n};
  s.exponent = static_cast<unsigned>(
      mpz_remove(s.unit.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
  return s;
}

int sign_of_parity(unsigned long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

Place Place::finite(const Integer& p) {
  if (!is_prime(p)) throw DomainError("place: " + to_string(p) + " is not prime");
  Place v;
  v.real_ = false;
  v.prime_ = p;
  return v;
}

Place parse_place(const std::string& text) {
  if (text == "real" || text == "inf" || text == "infinity") return Place::real();
  const Rational q = parse_rational(text);
  if (q.get_den() != 1) throw DomainError("malformed place '" + text + "'");
  return Place::finite(q.get_num());
}

std::string to_string(const Place& v) {
  return v.is_real() ? std::string("real") : to_string(v.prime());
}

int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v) {
  if (v.is_real()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
  const Integer& p = v.prime();
  const Split sa = split_off(a.value(), p);
  const Split sb = split_off(b.value(), p);
  if (p == 2) {
    const unsigned long e = epsilon(sa.unit) * epsilon(sb.unit) +
                            sa.exponent * omega(sb.unit) + sb.exponent * omega(sa.unit);
    return sign_of_parity(e);
  }
  int s = sign_of_parity(static_cast<unsigned long>(sa.exponent) * sb.exponent *
                         epsilon(p));
  if (sb.exponent % 2 == 1) s *= legendre(sa.unit, p);
  if (sa.exponent % 2 == 1) s *= legendre(sb.unit, p);
  return s;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (sgn(a) == 0 || sgn(b) == 0) throw DomainError("hilbert symbol of zero");
  return hilbert_symbol(SquareClass::of(a), SquareClass::of(b), v);
}

std::vector<Place> candidate_places(const SquareClass& a, const SquareClass& b) {
  std::set<Place> places{Place::real(), Place::finite(2)};
  for (const auto* c : {&a, &b}) {
    for (const auto& p : c->primes()) places.insert(Place::finite(p));
  }
  return {places.begin(), places.end()};
}

bool quaternion_splits(const QuaternionClass& q) {
  const auto places = candidate_places(q.a, q.b);
  return std::all_of(places.begin(), places.end(),
                     [&](const Place& v) { return hilbert_symbol(q.a, q.b, v) == 1; });
}

std::vector<Place> ramified_places(const QuaternionClass& q) {
  std::vector<Place> out;
  for (const auto& v : candidate_places(q.a, q.b)) {
    if (hilbert_symbol(q.a, q.b, v) == -1) out.push_back(v);
  }
  return out;
}

}  // namespace torsor
