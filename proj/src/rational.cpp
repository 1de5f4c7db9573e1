#include "fibrous/rational.hpp"

#include <stdexcept>

namespace fibrous::lazy {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) return Rational(Integer(-num), Integer(-den));
  return Rational(Integer(num), Integer(den));
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

Integer floor(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer quot = n / d;  // truncates toward zero
  if (n < 0 && quot * d != n) --quot;
  return quot;
}

Integer next_integer_above(const Rational& q) { return floor(q) + 1; }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational distance_q(const Rational& x, const Rational& y) { return abs(x - y); }

Rational chebyshev_distance(const QVec& x, const QVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
  Rational best = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational d = abs(x[i] - y[i]);
    if (d > best) best = d;
  }
  return best;
}

Rational max_norm(const QVec& v) {
  Rational best = 0;
  for (const auto& c : v)
    if (abs(c) > best) best = abs(c);
  return best;
}

Rational squared_euclidean(const Q2& a, const Q2& b) {
  Rational dx = a[0] - b[0], dy = a[1] - b[1];
  return dx * dx + dy * dy;
}

Integer power(const Integer& p, unsigned long n) {
  Integer out = 1;
  for (unsigned long i = 0; i < n; ++i) out *= p;
  return out;
}

bool divides(const Integer& d, const Integer& v) { return v % d == 0; }

}  // namespace fibrous::lazy
