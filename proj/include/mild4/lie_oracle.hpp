#pragma once

#include <vector>

#include "mild4/linalg.hpp"

namespace mild4 {

// Four degree-2 relators as rows of a 4x6 coefficient matrix in the ordered
// bracket basis. Construction does not force rank 4; the graded-dimension
// operations reject rank-deficient input with RankDeficient and the
// classifier reports it as a failed surjectivity condition instead.
struct QuadraticPresentation {
  FieldCtx ctx;
  Mat rel;  // 4x6
};

// a[n-1] = dimension of the degree-n graded component of the quotient.
struct GradedDims {
  std::vector<int> a;
  int max_degree() const { return static_cast<int>(a.size()); }
};

// Memory for the word-coordinate eliminations grows as 4^c.
inline constexpr int kDegreeCap = 6;

// Dimension of the degree-n component of the free Lie algebra on m
// generators: (1/n) sum over d | n of mu(d) m^{n/d}.
long long witt_dim(int m, int n);

// Graded dimensions of the quotient by the relator ideal, computed inside
// the free associative algebra: degree-n ideal components are spanned by
// brackets of a spanning set of the previous component with the generators,
// and dimensions come from Gaussian elimination in word coordinates.
GradedDims quotient_dims(const QuadraticPresentation& q, int c);

// a3 = 4 and a4 = 6; needs dims computed to degree >= 4 (InsufficientDegree).
bool is_mild(const GradedDims& d);

// True iff prod_{n<=c}(1 - t^n)^{-a_n} agrees with 1/(1 - mt + mt^2) through
// degree c.
bool series_check(const GradedDims& d, int m);

// Coefficients of prod_{n<=c}(1 - t^n)^{a_n} - (1 - 4t + 4t^2) through t^c.
std::vector<long long> question_d_probe(const QuadraticPresentation& q, int c);

// Whether the two-step nilpotent quotient has an element with centralizer of
// dimension exactly 5, decided by scanning projective degree-1 directions and
// ranking the induced map into the 2-dimensional degree-2 part.
bool has_five_dim_centralizer(const QuadraticPresentation& q);

}  // namespace mild4
