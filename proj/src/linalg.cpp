#include "mild4/linalg.hpp"

#include <algorithm>

namespace mild4 {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const FieldCtx& F, const Mat& x, const Mat& y) {
  Mat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      Fe v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        out.at(i, j) = F.add(out.at(i, j), F.mul(v, y.at(k, j)));
    }
  }
  return out;
}

Mat transpose(const Mat& m) {
  Mat out(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

Vec6 row_times(const FieldCtx& F, const Vec6& v, const Mat& m) {
  Vec6 out{};
  for (int r = 0; r < 6; ++r) {
    Fe c = v[static_cast<std::size_t>(r)];
    if (c == 0) continue;
    for (int j = 0; j < 6; ++j)
      out[static_cast<std::size_t>(j)] =
          F.add(out[static_cast<std::size_t>(j)], F.mul(c, m.at(r, j)));
  }
  return out;
}

std::pair<Mat, int> rref(const FieldCtx& F, Mat m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i) {
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r)
      for (int k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(r, k));
    Fe s = F.inv(m.at(r, c));
    for (int k = c; k < m.cols; ++k) m.at(r, k) = F.mul(m.at(r, k), s);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      Fe f = m.at(i, c);
      if (f == 0) continue;
      for (int k = c; k < m.cols; ++k)
        m.at(i, k) = F.sub(m.at(i, k), F.mul(f, m.at(r, k)));
    }
    ++r;
  }
  return {std::move(m), r};
}

int rank(const FieldCtx& F, const Mat& m) { return rref(F, m).second; }

Fe determinant(const FieldCtx& F, Mat m) {
  if (m.rows != m.cols)
    throw Error(Errc::BadDimension, "determinant of a non-square matrix");
  Fe det = 1;
  for (int c = 0; c < m.cols; ++c) {
    int piv = -1;
    for (int i = c; i < m.rows; ++i) {
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(c, k));
      det = F.neg(det);
    }
    det = F.mul(det, m.at(c, c));
    Fe inv = F.inv(m.at(c, c));
    for (int i = c + 1; i < m.rows; ++i) {
      Fe f = F.mul(m.at(i, c), inv);
      if (f == 0) continue;
      for (int k = c; k < m.cols; ++k)
        m.at(i, k) = F.sub(m.at(i, k), F.mul(f, m.at(c, k)));
    }
  }
  return det;
}

Mat inverse(const FieldCtx& F, const Mat& m) {
  if (m.rows != m.cols)
    throw Error(Errc::BadDimension, "inverse of a non-square matrix");
  int n = m.rows;
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto [red, rk] = rref(F, std::move(aug));
  (void)rk;  // pivots may land in the augmented half; test the left block
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (red.at(i, j) != (i == j ? 1u : 0u))
        throw Error(Errc::SingularMatrix, "matrix is not invertible");
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = red.at(i, n + j);
  return out;
}

Mat kernel_basis(const FieldCtx& F, const Mat& m) {
  auto [red, rk] = rref(F, m);
  int n = m.cols;
  std::vector<int> pivot_col(rk);
  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < rk; ++r) {
    int c = 0;
    while (red.at(r, c) == 0) ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }
  Mat ker(n - rk, n);
  int row = 0;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    ker.at(row, f) = 1;
    for (int r = 0; r < rk; ++r) ker.at(row, pivot_col[r]) = F.neg(red.at(r, f));
    ++row;
  }
  return rref(F, std::move(ker)).first;
}

Subspace Subspace::from_rows(const FieldCtx& F, const Mat& rows) {
  auto [red, rk] = rref(F, rows);
  Mat basis(rk, rows.cols);
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < rows.cols; ++j) basis.at(i, j) = red.at(i, j);
  return Subspace(std::move(basis));
}

Subspace Subspace::from_row(const FieldCtx& F, const Vec6& row) {
  Mat m(1, 6);
  for (int j = 0; j < 6; ++j) m.at(0, j) = row[static_cast<std::size_t>(j)];
  return from_rows(F, m);
}

Vec6 Subspace::row6(int r) const {
  Vec6 out{};
  for (int j = 0; j < 6; ++j) out[static_cast<std::size_t>(j)] = basis_.at(r, j);
  return out;
}

std::uint64_t Subspace::hash() const {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(basis_.rows));
  mix(static_cast<std::uint64_t>(basis_.cols));
  for (Fe v : basis_.a) mix(v);
  return h;
}

Subspace orthogonal_complement(const FieldCtx& F, const Subspace& u) {
  return Subspace::from_rows(F, kernel_basis(F, u.basis()));
}

}  // namespace mild4
