#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fibrous::lazy {

using Integer = boost::multiprecision::cpp_int;
/// Always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
/// Neighbourhood indices; ℕ starts at 1.
using Natural = Integer;

using Q2 = std::array<Rational, 2>;
using QVec = std::vector<Rational>;

Rational make_rational(long long num, long long den = 1);

/// Parses "a", "-a" or "a/b".
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

Integer floor(const Rational& q);

/// Smallest integer strictly greater than q.
Integer next_integer_above(const Rational& q);

Rational abs(const Rational& q);

/// |x - y|
Rational distance_q(const Rational& x, const Rational& y);

/// max_i |x_i - y_i|
Rational chebyshev_distance(const QVec& x, const QVec& y);

Rational max_norm(const QVec& v);

Rational squared_euclidean(const Q2& a, const Q2& b);

/// p^n for n >= 0.
Integer power(const Integer& p, unsigned long n);

/// True when d divides v (d != 0).
bool divides(const Integer& d, const Integer& v);

}  // namespace fibrous::lazy
