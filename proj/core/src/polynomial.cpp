#include "strandcalc/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace strandcalc {

void Poly::trim() {
  while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

Poly Poly::monomial(const Rat& c, int power) {
  Poly p;
  if (c == 0) return p;
  p.coeff_.assign(power + 1, Rat(0));
  p.coeff_[power] = c;
  return p;
}

Rat Poly::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coeff_.size())) return 0;
  return coeff_[power];
}

const Rat& Poly::leading() const {
  if (coeff_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return coeff_.back();
}

Rat Poly::evaluate(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeff_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.coeff_.resize(std::max(coeff_.size(), o.coeff_.size()), Rat(0));
  for (size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] += coeff_[i];
  for (size_t i = 0; i < o.coeff_.size(); ++i) r.coeff_[i] += o.coeff_[i];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  Poly r;
  r.coeff_.assign(coeff_.size() + o.coeff_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == 0) continue;
    for (size_t j = 0; j < o.coeff_.size(); ++j) r.coeff_[i + j] += coeff_[i] * o.coeff_[j];
  }
  r.trim();
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  q = Poly();
  r = a;
  if (a.degree() < b.degree()) return;
  q.coeff_.assign(a.degree() - b.degree() + 1, Rat(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rat factor = r.leading() / b.leading();
    q.coeff_[shift] = factor;
    r = r - Poly::monomial(factor, shift) * b;
  }
  q.trim();
}

Poly Poly::divide_exact(const Poly& b) const {
  Poly q, r;
  divmod(*this, b, q, r);
  if (!r.is_zero()) throw std::invalid_argument("polynomial division is not exact");
  return q;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  Rat lead = r.leading();
  for (auto& c : r.coeff_) c /= lead;
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    const Rat& c = coeff_[p];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    if (a != 1 || p == 0) os << rat_to_string(a);
    if (p > 0) {
      if (a != 1) os << "*";
      os << var;
      if (p > 1) os << "^" << p;
    }
    first = false;
  }
  return os.str();
}

}  // namespace strandcalc
