#pragma once

#include <unordered_map>

#include "strandcalc/pairing.hpp"
#include "strandcalc/ratpoly.hpp"

namespace strandcalc {

// Weighted sparse sum of pairings: an element of the walled Brauer-type
// algebra on m strands with RatPolyN coefficients. Houses the irreducible
// projectors and the self-energy intermediates.
class DiagramOperator {
 public:
  using TermMap = std::unordered_map<Pairing, RatPolyN, Pairing::Hash>;

  explicit DiagramOperator(int arity = 5) : arity_(arity) {}

  static DiagramOperator identity(int arity);
  static DiagramOperator single(const Pairing& p, RatPolyN weight = RatPolyN(1));

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // No zero-weight terms are stored.
  void add_term(const Pairing& p, const RatPolyN& w);
  RatPolyN weight_of(const Pairing& p) const;

  DiagramOperator operator+(const DiagramOperator& o) const;
  DiagramOperator operator-(const DiagramOperator& o) const;
  DiagramOperator scaled(const RatPolyN& f) const;
  bool operator==(const DiagramOperator& o) const;

  DiagramOperator transposed() const;
  bool is_transpose_symmetric() const { return *this == transposed(); }

 private:
  int arity_;
  TermMap terms_;
};

// Diagrammatic composition: glue the out-side of a to the in-side of b;
// every closed loop contributes a multiplicative factor N.
DiagramOperator compose_operators(const DiagramOperator& a, const DiagramOperator& b);

// Connect in-point i to out-point i; each term contributes weight * N^#loops.
RatPolyN trace_close(const DiagramOperator& a);

// Gluing of two single pairings: resulting pairing plus closed-loop count.
std::pair<Pairing, int> glue_pairings(const Pairing& a, const Pairing& b);

// Cycle count of the i <-> i closure of a single pairing (1..m cycles).
int closure_cycles(const Pairing& p);

}  // namespace strandcalc
