#include "strandcalc/pairing.hpp"

#include <stdexcept>

namespace strandcalc {

Pairing::Pairing(std::vector<uint8_t> partner) : partner_(std::move(partner)) {
  if (partner_.size() % 2 != 0) throw std::invalid_argument("odd number of endpoints");
  for (size_t p = 0; p < partner_.size(); ++p) {
    size_t q = partner_[p];
    if (q >= partner_.size() || q == p || partner_[q] != p)
      throw std::invalid_argument("not an involution without fixed points");
  }
}

Pairing::Pairing(int m, const std::vector<std::pair<int, int>>& pairs) {
  partner_.assign(2 * m, 255);
  if (static_cast<int>(pairs.size()) != m)
    throw std::invalid_argument("pair list has wrong size");
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= 2 * m || b >= 2 * m || a == b ||
        partner_[a] != 255 || partner_[b] != 255)
      throw std::invalid_argument("invalid pair list");
    partner_[a] = static_cast<uint8_t>(b);
    partner_[b] = static_cast<uint8_t>(a);
  }
}

Pairing Pairing::unbroken(const std::array<int, 5>& sigma) {
  std::vector<uint8_t> partner(10);
  for (int i = 0; i < 5; ++i) {
    partner[i] = static_cast<uint8_t>(5 + sigma[i]);
    partner[5 + sigma[i]] = static_cast<uint8_t>(i);
  }
  return Pairing(std::move(partner));
}

Pairing Pairing::identity(int m) {
  std::vector<uint8_t> partner(2 * m);
  for (int i = 0; i < m; ++i) {
    partner[i] = static_cast<uint8_t>(m + i);
    partner[m + i] = static_cast<uint8_t>(i);
  }
  return Pairing(std::move(partner));
}

std::vector<std::pair<int, int>> Pairing::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < static_cast<int>(partner_.size()); ++p)
    if (p < partner_[p]) out.emplace_back(p, partner_[p]);
  return out;
}

Pairing Pairing::transposed() const {
  int m = arity();
  auto flip = [m](int p) { return p < m ? p + m : p - m; };
  std::vector<uint8_t> partner(partner_.size());
  for (int p = 0; p < static_cast<int>(partner_.size()); ++p)
    partner[flip(p)] = static_cast<uint8_t>(flip(partner_[p]));
  return Pairing(std::move(partner));
}

namespace {
void enumerate_rec(std::vector<uint8_t>& partner, std::vector<char>& used, int n,
                   std::vector<Pairing>& out) {
  int first = -1;
  for (int p = 0; p < n; ++p)
    if (!used[p]) { first = p; break; }
  if (first < 0) {
    out.emplace_back(partner);
    return;
  }
  used[first] = 1;
  for (int q = first + 1; q < n; ++q) {
    if (used[q]) continue;
    used[q] = 1;
    partner[first] = static_cast<uint8_t>(q);
    partner[q] = static_cast<uint8_t>(first);
    enumerate_rec(partner, used, n, out);
    used[q] = 0;
  }
  used[first] = 0;
}
}  // namespace

std::vector<Pairing> all_pairings(int m) {
  std::vector<uint8_t> partner(2 * m, 0);
  std::vector<char> used(2 * m, 0);
  std::vector<Pairing> out;
  enumerate_rec(partner, used, 2 * m, out);
  return out;
}

int permutation_sign(const std::array<int, 5>& sigma) {
  int sign = 1;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (sigma[i] > sigma[j]) sign = -sign;
  return sign;
}

int EdgeClass::sign() const {
  return kind == EdgeKind::Unbroken ? permutation_sign(sigma) : 1;
}

EdgeClass classify_pairing(const Pairing& p) {
  if (p.arity() != 5) throw std::invalid_argument("edge classification needs arity 5");
  int traversing = 0;
  EdgeClass c;
  c.sigma = {-1, -1, -1, -1, -1};
  for (int i = 0; i < 5; ++i) {
    int q = p.partner(i);
    if (q >= 5) {
      c.sigma[i] = q - 5;
      ++traversing;
    }
  }
  switch (traversing) {
    case 5: c.kind = EdgeKind::Unbroken; break;
    case 3: c.kind = EdgeKind::Broken; c.sigma = {}; break;
    case 1: c.kind = EdgeKind::DoublyBroken; c.sigma = {}; break;
    default: throw std::logic_error("impossible traversing count");
  }
  return c;
}

}  // namespace strandcalc
