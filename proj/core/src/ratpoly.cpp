#include "strandcalc/ratpoly.hpp"

#include <stdexcept>

namespace strandcalc {

RatPolyN::RatPolyN(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RatPolyN with zero denominator");
  canonicalize();
}

void RatPolyN::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly{Rat(1)};
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  Rat lead = den_.leading();
  if (lead != 1) {
    num_ = num_ * Poly(Rat(1) / lead);
    den_ = den_.monic();
  }
}

RatPolyN RatPolyN::n_power(int power) {
  if (power >= 0) return RatPolyN(Poly::monomial(1, power));
  return RatPolyN(Poly{Rat(1)}, Poly::monomial(1, -power));
}

RatPolyN RatPolyN::operator-() const {
  RatPolyN r = *this;
  r.num_ = -r.num_;
  return r;
}

RatPolyN RatPolyN::operator+(const RatPolyN& o) const {
  return RatPolyN(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatPolyN RatPolyN::operator-(const RatPolyN& o) const {
  return RatPolyN(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatPolyN RatPolyN::operator*(const RatPolyN& o) const {
  return RatPolyN(num_ * o.num_, den_ * o.den_);
}

RatPolyN RatPolyN::operator/(const RatPolyN& o) const {
  if (o.is_zero()) throw std::domain_error("RatPolyN division by zero");
  return RatPolyN(num_ * o.den_, den_ * o.num_);
}

Rat RatPolyN::evaluate_at(const Rat& n) const {
  Rat d = den_.evaluate(n);
  if (d == 0) throw std::domain_error("evaluation at a pole: N = " + rat_to_string(n));
  return num_.evaluate(n) / d;
}

int RatPolyN::leading_exponent() const {
  if (is_zero()) throw std::logic_error("leading exponent of zero");
  return num_.degree() - den_.degree();
}

Rat RatPolyN::leading_coefficient() const {
  if (is_zero()) throw std::logic_error("leading coefficient of zero");
  return num_.leading() / den_.leading();
}

std::vector<Rat> RatPolyN::expand_large_n(int terms) const {
  std::vector<Rat> out(std::max(terms, 0), Rat(0));
  if (is_zero() || terms <= 0) return out;
  // In x = 1/N: f = x^(dden-dnum) * (reversed num)(x) / (reversed den)(x),
  // and the reversed denominator has nonzero constant term.
  int dn = num_.degree(), dd = den_.degree();
  std::vector<Rat> p(dn + 1), q(dd + 1);
  for (int i = 0; i <= dn; ++i) p[i] = num_.coefficient(dn - i);
  for (int i = 0; i <= dd; ++i) q[i] = den_.coefficient(dd - i);
  for (int j = 0; j < terms; ++j) {
    Rat acc = j <= dn ? p[j] : Rat(0);
    for (int i = 1; i <= std::min(j, dd); ++i) acc -= q[i] * out[j - i];
    out[j] = acc / q[0];
  }
  return out;
}

std::string RatPolyN::to_string() const {
  if (den_ == Poly{Rat(1)}) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatPolyN interpolate_rational(const std::vector<std::pair<Rat, Rat>>& samples,
                              int d_num, int d_den) {
  if (d_num < 0 || d_den < 0) throw std::invalid_argument("negative degree bound");
  const int cols = d_num + d_den + 2;
  {
    std::vector<Rat> xs;
    for (auto& s : samples) xs.push_back(s.first);
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
      throw std::invalid_argument("duplicate sample points");
  }
  if (static_cast<int>(samples.size()) < cols)
    throw std::invalid_argument("rank deficiency: need at least " + std::to_string(cols) +
                                " samples, more samples required");

  // Homogeneous system p(x_i) - v_i q(x_i) = 0 in the coefficients of p, q.
  std::vector<std::vector<Rat>> m(samples.size(), std::vector<Rat>(cols, Rat(0)));
  for (size_t r = 0; r < samples.size(); ++r) {
    const Rat& x = samples[r].first;
    const Rat& v = samples[r].second;
    Rat pw = 1;
    for (int j = 0; j <= d_num; ++j) { m[r][j] = pw; pw *= x; }
    pw = 1;
    for (int j = 0; j <= d_den; ++j) { m[r][d_num + 1 + j] = -v * pw; pw *= x; }
  }

  // Exact Gaussian elimination to row echelon form.
  std::vector<int> pivot_of_col(cols, -1);
  size_t row = 0;
  for (int col = 0; col < cols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rat inv = Rat(1) / m[row][col];
    for (int j = col; j < cols; ++j) m[row][j] *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = col; j < cols; ++j) m[r][j] -= f * m[row][j];
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  // Pick the first free column and set it to 1 to get a nullspace vector.
  int free_col = -1;
  for (int col = 0; col < cols; ++col)
    if (pivot_of_col[col] < 0) { free_col = col; break; }
  if (free_col < 0)
    throw std::invalid_argument("inconsistent samples: no rational function within bounds");
  std::vector<Rat> sol(cols, Rat(0));
  sol[free_col] = 1;
  for (int col = 0; col < cols; ++col)
    if (pivot_of_col[col] >= 0) sol[col] = -m[pivot_of_col[col]][free_col];

  Poly num(std::vector<Rat>(sol.begin(), sol.begin() + d_num + 1));
  Poly den(std::vector<Rat>(sol.begin() + d_num + 1, sol.end()));
  if (den.is_zero())
    throw std::invalid_argument("inconsistent samples: degenerate denominator");
  RatPolyN f(num, den);

  // Re-verify every sample against the canonical result.
  for (auto& s : samples) {
    Rat d = f.denominator().evaluate(s.first);
    if (d == 0 || f.numerator().evaluate(s.first) != s.second * d)
      throw std::invalid_argument("inconsistent samples: no rational function within bounds");
  }
  return f;
}

}  // namespace strandcalc
