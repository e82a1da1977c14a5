#pragma once

#include "strandcalc/diagram_op.hpp"

namespace strandcalc {

enum class Rep : uint8_t { A, S };  // antisymmetric / symmetric traceless

// Projector on completely antisymmetric rank-5 tensors:
// 120 unbroken terms with weight sign(sigma)/120.
DiagramOperator build_antisymmetric();

// Projector on symmetric traceless rank-5 tensors: 120 unbroken terms with
// weight 1/120, 600 broken with weight -1/(60(N+6)), 225 doubly-broken with
// weight 1/(60(N+4)(N+6)).
DiagramOperator build_symmetric_traceless();

DiagramOperator build_projector(Rep rep);

struct ProjectorReport {
  bool idempotent = false;
  bool symmetric = false;
  RatPolyN dimension;
};

// Checks P o P == P exactly, transpose symmetry, and the irrep dimension
// trace_close(P). Accepts any user-supplied candidate operator.
ProjectorReport verify_projector(const DiagramOperator& p);

enum class VertexFlavor : uint8_t { Cyclic, Colorable };

// Interaction kernel: a 15-pair matching over the 30 strand slots of six
// half-edges. Slot numbering: half-edge h in 0..5, slot k in 0..4 maps to
// endpoint 5h + k. The cyclic flavor is invariant under rotating the six
// half-edges by one position; the colorable flavor joins equal slot
// positions only.
struct VertexKernel {
  VertexFlavor flavor;
  std::vector<uint8_t> partner;  // involution on 30 slots

  int pair_count() const { return 15; }
  std::vector<std::pair<int, int>> pairs() const;
};

VertexKernel build_vertex(VertexFlavor flavor);

}  // namespace strandcalc
