#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "strandcalc/rational.hpp"

namespace strandcalc {

// Perfect matching on 2m labeled strand endpoints: in-side 0..m-1,
// out-side m..2m-1. m = 5 for edge diagrams, m = 15 for the vertex kernel.
class Pairing {
 public:
  Pairing() = default;
  // From a partner array: partner[partner[p]] == p, partner[p] != p.
  explicit Pairing(std::vector<uint8_t> partner);
  // From a pair list.
  Pairing(int m, const std::vector<std::pair<int, int>>& pairs);

  // The unbroken pairing i -> out side sigma(i); sigma in one-line notation.
  static Pairing unbroken(const std::array<int, 5>& sigma);
  static Pairing identity(int m);

  int arity() const { return static_cast<int>(partner_.size()) / 2; }
  int partner(int p) const { return partner_[p]; }
  const std::vector<uint8_t>& partners() const { return partner_; }

  // Sorted pair list (a < b), canonical.
  std::vector<std::pair<int, int>> pairs() const;

  // Swap in-side and out-side.
  Pairing transposed() const;

  bool operator==(const Pairing& o) const { return partner_ == o.partner_; }
  bool operator<(const Pairing& o) const { return partner_ < o.partner_; }

  struct Hash {
    size_t operator()(const Pairing& p) const {
      size_t h = 1469598103934665603ull;
      for (uint8_t b : p.partner_) { h ^= b; h *= 1099511628211ull; }
      return h;
    }
  };

 private:
  std::vector<uint8_t> partner_;
};

// All (2m-1)!! perfect matchings on 2m points, lexicographic order.
std::vector<Pairing> all_pairings(int m);

enum class EdgeKind : uint8_t { Unbroken, Broken, DoublyBroken };

// Propagator edge taxonomy: unbroken (5 traversing strands, carries a
// permutation), broken (3 traversing), doubly-broken (1 traversing).
struct EdgeClass {
  EdgeKind kind = EdgeKind::Unbroken;
  std::array<int, 5> sigma{};  // valid for unbroken only

  int sign() const;  // signature of sigma; +1 for broken/doubly-broken
};

// Total on arity-5 pairings: every pairing is exactly one of the three kinds.
EdgeClass classify_pairing(const Pairing& p);

int permutation_sign(const std::array<int, 5>& sigma);

}  // namespace strandcalc
