#pragma once

#include <string>
#include <vector>

#include "mild4/linalg.hpp"

namespace mild4 {

// Ordered bracket basis x12 < x13 < x14 < x23 < x24 < x34 of the degree-2
// component. kPairs[k] holds the 1-based index pair of basis column k.
inline constexpr int kPairs[6][2] = {{1, 2}, {1, 3}, {1, 4},
                                     {2, 3}, {2, 4}, {3, 4}};
int pair_index(int i, int j);  // 1-based i < j

enum class TokKind { AddCol, SwapCol, ScaleCol };

// Elementary column operations on GL4: AddCol(i,j,a) sends c_j -> c_j + a c_i
// (a = 0 allowed, acts as the identity), SwapCol exchanges c_i and c_j,
// ScaleCol(i,a) sends c_i -> a c_i with a != 0.
struct GenToken {
  TokKind kind = TokKind::AddCol;
  int i = 0, j = 0;
  Fe a = 0;

  static GenToken add_col(int i, int j, Fe a);
  static GenToken swap_col(int i, int j);
  static GenToken scale_col(int i, Fe a);

  bool operator==(const GenToken&) const = default;
};

// A word in the elementary generators, applied left to right as right
// multiplications on row vectors. Serialized as e.g. "A(1,2;2) S(3,4) C(1;2)".
struct GroupWord {
  std::vector<GenToken> tokens;

  bool empty() const { return tokens.empty(); }
  GroupWord inverse(const FieldCtx& F) const;
  std::string str() const;
  static GroupWord parse(const FieldCtx& F, const std::string& text);

  bool operator==(const GroupWord&) const = default;
};

Mat token_gl4(const FieldCtx& F, const GenToken& t);

// The induced action on the degree-2 component in the ordered bracket basis:
// psi(A)[rs][ij] = a_{ri} a_{sj} - a_{si} a_{rj}. A homomorphism satisfying
// psi(A^T) = psi(A)^T and det psi(A) = det(A)^3. Throws SingularMatrix.
Mat psi(const FieldCtx& F, const Mat& a);

Mat token_gl6(const FieldCtx& F, const GenToken& t);
Mat word_gl6(const FieldCtx& F, const GroupWord& w);

Subspace act(const FieldCtx& F, const Subspace& u, const GroupWord& w);
Subspace act_matrix(const FieldCtx& F, const Subspace& u, const Mat& m6);

// Induced action on orthogonal complements: u_perp * (M^{-1})^T.
Subspace dual_act(const FieldCtx& F, const Subspace& u_perp, const GroupWord& w);

// Q(v) = v1 v6 - v2 v5 + v3 v4; vanishes exactly on decomposable wedges and
// scales by det(A) under the action.
Fe pluecker_form(const FieldCtx& F, const Vec6& v);

// psi-images of all elementary generators (AddCol over a != 0, the six swaps,
// ScaleCol over a != 0,1), used by the orbit BFS.
std::vector<Mat> group_generators_gl6(const FieldCtx& F);

}  // namespace mild4
