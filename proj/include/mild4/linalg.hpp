#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "mild4/fp.hpp"

namespace mild4 {

// Dense row-major matrix over F_p. Entries are reduced residues; the modulus
// lives in the FieldCtx passed to each operation.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Fe> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  static Mat identity(int n);

  Fe& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  Fe at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  bool operator==(const Mat&) const = default;
};

using Vec6 = std::array<Fe, 6>;

Mat mat_mul(const FieldCtx& F, const Mat& x, const Mat& y);
Mat transpose(const Mat& m);
Vec6 row_times(const FieldCtx& F, const Vec6& v, const Mat& m);  // v * m, m 6x6

// Unique reduced row echelon form and rank.
std::pair<Mat, int> rref(const FieldCtx& F, Mat m);
int rank(const FieldCtx& F, const Mat& m);
Fe determinant(const FieldCtx& F, Mat m);
Mat inverse(const FieldCtx& F, const Mat& m);  // throws SingularMatrix

// Right kernel {x : m x = 0}, returned as RREF rows.
Mat kernel_basis(const FieldCtx& F, const Mat& m);

// A subspace of F_p^n held by its unique RREF basis (leading ones, strictly
// increasing pivot columns, zeros above and below pivots, no zero rows).
// Equal subspaces compare equal entry-wise.
class Subspace {
 public:
  Subspace() = default;
  static Subspace from_rows(const FieldCtx& F, const Mat& rows);
  static Subspace from_row(const FieldCtx& F, const Vec6& row);

  int ambient_dim() const { return basis_.cols; }
  int dim() const { return basis_.rows; }
  const Mat& basis() const { return basis_; }
  Vec6 row6(int r) const;

  bool operator==(const Subspace&) const = default;
  std::uint64_t hash() const;

 private:
  explicit Subspace(Mat b) : basis_(std::move(b)) {}
  Mat basis_;
};

// Annihilator of the row space under the standard dot product. Over F_p the
// complement always has complementary dimension even though it may meet u.
Subspace orthogonal_complement(const FieldCtx& F, const Subspace& u);

}  // namespace mild4
