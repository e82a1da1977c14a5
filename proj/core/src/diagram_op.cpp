#include "strandcalc/diagram_op.hpp"

#include <stdexcept>

namespace strandcalc {

DiagramOperator DiagramOperator::identity(int arity) {
  return single(Pairing::identity(arity));
}

DiagramOperator DiagramOperator::single(const Pairing& p, RatPolyN weight) {
  DiagramOperator op(p.arity());
  op.add_term(p, weight);
  return op;
}

void DiagramOperator::add_term(const Pairing& p, const RatPolyN& w) {
  if (p.arity() != arity_) throw std::invalid_argument("term arity mismatch");
  if (w.is_zero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, w);
    return;
  }
  it->second += w;
  if (it->second.is_zero()) terms_.erase(it);
}

RatPolyN DiagramOperator::weight_of(const Pairing& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? RatPolyN() : it->second;
}

DiagramOperator DiagramOperator::operator+(const DiagramOperator& o) const {
  if (arity_ != o.arity_) throw std::invalid_argument("operator arity mismatch");
  DiagramOperator r = *this;
  for (auto& [p, w] : o.terms_) r.add_term(p, w);
  return r;
}

DiagramOperator DiagramOperator::operator-(const DiagramOperator& o) const {
  return *this + o.scaled(RatPolyN(-1));
}

DiagramOperator DiagramOperator::scaled(const RatPolyN& f) const {
  DiagramOperator r(arity_);
  if (f.is_zero()) return r;
  for (auto& [p, w] : terms_) r.terms_.emplace(p, w * f);
  return r;
}

bool DiagramOperator::operator==(const DiagramOperator& o) const {
  if (arity_ != o.arity_ || terms_.size() != o.terms_.size()) return false;
  for (auto& [p, w] : terms_) {
    auto it = o.terms_.find(p);
    if (it == o.terms_.end() || !(it->second == w)) return false;
  }
  return true;
}

DiagramOperator DiagramOperator::transposed() const {
  DiagramOperator r(arity_);
  for (auto& [p, w] : terms_) r.terms_.emplace(p.transposed(), w);
  return r;
}

std::pair<Pairing, int> glue_pairings(const Pairing& a, const Pairing& b) {
  const int m = a.arity();
  // Points: a.in 0..m-1, middle m..2m-1 (a.out fused with b.in), b.out 2m..3m-1.
  // Walk the path from each outer point; middle points have degree two.
  std::vector<uint8_t> result(2 * m, 255);
  std::vector<char> seen_mid(m, 0);
  auto a_step = [&](int p) {  // p in a-coordinates 0..2m-1
    return a.partner(p);
  };
  auto b_step = [&](int p) {  // p in b-coordinates 0..2m-1
    return b.partner(p);
  };
  auto trace_from = [&](int start_outer) -> int {
    // start_outer: global id in {0..m-1} U {2m..3m-1}; returns global partner.
    bool in_a = start_outer < m;
    int p = in_a ? a_step(start_outer) : b_step(start_outer - m);
    // p is now in local coordinates of the side we stepped in.
    while (true) {
      if (in_a) {
        if (p < m) return p;           // landed on a.in
        seen_mid[p - m] = 1;           // crossed to the middle, continue in b
        in_a = false;
        p = b_step(p - m);
      } else {
        if (p >= m) return p + m;      // landed on b.out
        seen_mid[p] = 1;               // back through the middle into a
        in_a = true;
        p = a_step(p + m);
      }
    }
  };
  for (int p = 0; p < m; ++p) {
    if (result[p] != 255) continue;
    int q_global = trace_from(p);
    int q_local = q_global < m ? q_global : q_global - m;
    result[p] = static_cast<uint8_t>(q_local);
    result[q_local] = static_cast<uint8_t>(p);
  }
  for (int p = 2 * m; p < 3 * m; ++p) {
    int local = p - m;
    if (result[local] != 255) continue;
    int q_global = trace_from(p);
    int q_local = q_global < m ? q_global : q_global - m;
    result[local] = static_cast<uint8_t>(q_local);
    result[q_local] = static_cast<uint8_t>(local);
  }
  // Loops: middle cycles never reached from an outer point.
  int loops = 0;
  for (int i = 0; i < m; ++i) {
    if (seen_mid[i]) continue;
    ++loops;
    // Walk the cycle through alternating a/b steps starting at middle i.
    int p = i;
    do {
      seen_mid[p] = 1;
      int q = a_step(p + m);           // a-side step from middle point
      if (q < m) throw std::logic_error("middle cycle left the middle in a");
      seen_mid[q - m] = 1;
      int r = b_step(q - m);           // b-side step back to the middle
      if (r >= m) throw std::logic_error("middle cycle left the middle in b");
      p = r;
    } while (p != i);
  }
  return {Pairing(std::move(result)), loops};
}

DiagramOperator compose_operators(const DiagramOperator& a, const DiagramOperator& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("compose: arity mismatch");
  DiagramOperator out(a.arity());
  for (auto& [pa, wa] : a.terms()) {
    for (auto& [pb, wb] : b.terms()) {
      auto [glued, loops] = glue_pairings(pa, pb);
      RatPolyN w = wa * wb;
      if (loops > 0) w *= RatPolyN::n_power(loops);
      out.add_term(glued, w);
    }
  }
  return out;
}

int closure_cycles(const Pairing& p) {
  const int m = p.arity();
  std::vector<char> seen(2 * m, 0);
  int cycles = 0;
  for (int s = 0; s < 2 * m; ++s) {
    if (seen[s]) continue;
    ++cycles;
    int q = s;
    do {
      seen[q] = 1;
      q = p.partner(q);           // matching step
      seen[q] = 1;
      q = q < m ? q + m : q - m;  // closure step in <-> out
    } while (q != s);
  }
  return cycles;
}

RatPolyN trace_close(const DiagramOperator& a) {
  RatPolyN total;
  for (auto& [p, w] : a.terms())
    total += w * RatPolyN::n_power(closure_cycles(p));
  return total;
}

}  // namespace strandcalc
