#pragma once

#include "mild4/exterior.hpp"

namespace mild4 {

enum class LineLabel { Decomposable, Generic };
enum class Orbit : int { O1 = 1, O2 = 2, O3 = 3, O4 = 4 };

// Canonical representatives:
//   lines   (0,0,0,0,0,1) and (0,0,1,1,0,0)
//   planes  (1) {e6, e1}   (2) {e6, e3}   (3) {e6, (0,0,1,1,0,0)}
//           (4) {(0,0,1,1,0,0), (0,1,0,0,g,0)} with g the smallest generator
Subspace canonical_line(const FieldCtx& F, LineLabel l);
Subspace canonical_plane(const FieldCtx& F, Orbit o);

struct LineReduction {
  LineLabel label;
  GroupWord witness;
  Subspace canonical;
};

struct PlaneReduction {
  Orbit label;
  GroupWord witness;
  Subspace canonical;
};

// Constructive normal form of a line: returns a witness word carrying the
// input onto the canonical representative, machine-checked before returning.
// The label agrees with the vanishing of the Pluecker form.
LineReduction reduce_line(const FieldCtx& F, const Vec6& v);  // ZeroVector

// Constructive normal form of a plane with witness, machine-checked.
PlaneReduction reduce_plane(const FieldCtx& F, const Subspace& u);  // BadDimension

bool verify_witness(const FieldCtx& F, const Subspace& u, const LineReduction& r);
bool verify_witness(const FieldCtx& F, const Subspace& u, const PlaneReduction& r);

}  // namespace mild4
