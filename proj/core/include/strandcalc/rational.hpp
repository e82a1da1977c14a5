#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace strandcalc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(num, den);
}

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Int binomial(const Int& n, int k) {
  if (k < 0) return 0;
  Int num = 1;
  for (int i = 0; i < k; ++i) num *= (n - i);
  return num / factorial(k);
}

// Fuss-Catalan numbers A_n(6,1) = C(6n+1, n) / (6n+1).
inline Int fuss_catalan_6(int n) {
  return binomial(Int(6 * n + 1), n) / (6 * n + 1);
}

}  // namespace strandcalc
