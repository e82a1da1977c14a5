#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strandcalc/polynomial.hpp"

namespace strandcalc {

// Exact rational function of the symbolic size N.
//
// Canonical form: numerator and denominator coprime, denominator monic.
// Equality of canonical forms coincides with functional equality, so values
// are usable as cheap map keys and test oracles.
class RatPolyN {
 public:
  RatPolyN() : num_(), den_{Rat(1)} {}
  RatPolyN(const Rat& c) : num_(c), den_{Rat(1)} {}
  RatPolyN(int c) : num_(Rat(c)), den_{Rat(1)} {}
  RatPolyN(Poly num, Poly den);
  explicit RatPolyN(Poly num) : num_(std::move(num)), den_{Rat(1)} {}

  static RatPolyN n() { return RatPolyN(Poly::n()); }
  // N^power for any integer power (negative powers go to the denominator).
  static RatPolyN n_power(int power);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RatPolyN operator-() const;
  RatPolyN operator+(const RatPolyN& o) const;
  RatPolyN operator-(const RatPolyN& o) const;
  RatPolyN operator*(const RatPolyN& o) const;
  RatPolyN operator/(const RatPolyN& o) const;  // throws on division by zero
  RatPolyN& operator+=(const RatPolyN& o) { return *this = *this + o; }
  RatPolyN& operator-=(const RatPolyN& o) { return *this = *this - o; }
  RatPolyN& operator*=(const RatPolyN& o) { return *this = *this * o; }
  bool operator==(const RatPolyN& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatPolyN& o) const { return !(*this == o); }

  // Exact evaluation; throws if n is a pole.
  Rat evaluate_at(const Rat& n) const;

  // Largest power of N with nonzero coefficient in the large-N sense:
  // deg(num) - deg(den). Only valid for nonzero values.
  int leading_exponent() const;
  Rat leading_coefficient() const;

  // Coefficients c_0..c_terms-1 of the expansion
  //   f = N^leading_exponent() * sum_j c_j N^-j.
  std::vector<Rat> expand_large_n(int terms) const;

  std::string to_string() const;

 private:
  void canonicalize();
  Poly num_, den_;
};

// Unique rational function within the degree bounds passing through all
// samples. Needs at least d_num + d_den + 2 distinct sample points; throws
// on rank deficiency (more samples needed) or inconsistent samples.
RatPolyN interpolate_rational(const std::vector<std::pair<Rat, Rat>>& samples,
                              int d_num, int d_den);

}  // namespace strandcalc
