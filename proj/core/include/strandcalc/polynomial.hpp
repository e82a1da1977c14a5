#pragma once

#include <initializer_list>
#include <vector>

#include "strandcalc/rational.hpp"

namespace strandcalc {

// Dense univariate polynomial in N over exact rationals, ascending powers.
// Invariant: no trailing zero coefficient; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& c) { if (c != 0) coeff_.push_back(c); }
  explicit Poly(std::vector<Rat> coeff) : coeff_(std::move(coeff)) { trim(); }
  Poly(std::initializer_list<Rat> coeff) : coeff_(coeff) { trim(); }

  static Poly monomial(const Rat& c, int power);
  // The variable N itself.
  static Poly n() { return monomial(1, 1); }

  bool is_zero() const { return coeff_.empty(); }
  int degree() const { return static_cast<int>(coeff_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coefficients() const { return coeff_; }
  Rat coefficient(int power) const;
  const Rat& leading() const;

  Rat evaluate(const Rat& x) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return coeff_ == o.coeff_; }

  // Quotient and remainder; the divisor must be nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  // Exact division; throws if the remainder is nonzero.
  Poly divide_exact(const Poly& b) const;

  // Monic gcd over the rationals.
  static Poly gcd(Poly a, Poly b);

  // Scale so the leading coefficient is 1.
  Poly monic() const;

  std::string to_string(const std::string& var = "N") const;

 private:
  void trim();
  std::vector<Rat> coeff_;
};

}  // namespace strandcalc
