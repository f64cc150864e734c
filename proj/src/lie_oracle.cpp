#include "mild4/lie_oracle.hpp"

#include <cstddef>
#include <string>

#include "mild4/exterior.hpp"

namespace mild4 {

namespace {

// Row-echelon accumulator over F_p with dense rows, kept ordered by leading
// column. Rows are only forward-reduced; that is enough for ranks and for a
// spanning set of the next graded component.
struct EchelonBasis {
  const FieldCtx& F;
  std::size_t cols;
  std::vector<std::vector<Fe>> rows;
  std::vector<std::size_t> leads;

  EchelonBasis(const FieldCtx& f, std::size_t c) : F(f), cols(c) {}

  int dim() const { return static_cast<int>(rows.size()); }

  void insert(std::vector<Fe> v) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      Fe c = v[leads[k]];
      if (c == 0) continue;
      const auto& row = rows[k];
      for (std::size_t j = leads[k]; j < cols; ++j)
        if (row[j] != 0) v[j] = F.sub(v[j], F.mul(c, row[j]));
    }
    std::size_t lead = 0;
    while (lead < cols && v[lead] == 0) ++lead;
    if (lead == cols) return;
    Fe s = F.inv(v[lead]);
    for (std::size_t j = lead; j < cols; ++j) v[j] = F.mul(v[j], s);
    std::size_t pos = 0;
    while (pos < leads.size() && leads[pos] < lead) ++pos;
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    leads.insert(leads.begin() + static_cast<std::ptrdiff_t>(pos), lead);
  }
};

// [u, x_k] = u (x) k - k (x) u in word coordinates: a degree-n word with
// index i contributes +c at i*4+k and -c at k*4^n + i.
std::vector<Fe> bracket_with_generator(const FieldCtx& F, const std::vector<Fe>& u, int k) {
  std::size_t n = u.size();
  std::vector<Fe> out(n * 4, 0);
  std::size_t shift = n * static_cast<std::size_t>(k);
  for (std::size_t i = 0; i < n; ++i) {
    Fe c = u[i];
    if (c == 0) continue;
    std::size_t right = i * 4 + static_cast<std::size_t>(k);
    out[right] = F.add(out[right], c);
    out[shift + i] = F.sub(out[shift + i], c);
  }
  return out;
}

// x_{ij} embeds into the free associative algebra as word(i,j) - word(j,i).
std::vector<Fe> embed_relator(const FieldCtx& F, const Mat& rel, int row) {
  std::vector<Fe> v(16, 0);
  for (int col = 0; col < 6; ++col) {
    Fe c = rel.at(row, col);
    if (c == 0) continue;
    int i = kPairs[col][0] - 1, j = kPairs[col][1] - 1;
    std::size_t ij = static_cast<std::size_t>(i * 4 + j);
    std::size_t ji = static_cast<std::size_t>(j * 4 + i);
    v[ij] = F.add(v[ij], c);
    v[ji] = F.sub(v[ji], c);
  }
  return v;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int moebius(int n) {
  int mu = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

long long witt_dim(int m, int n) {
  long long sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    sum += moebius(d) * ipow(m, n / d);
  }
  return sum / n;
}

GradedDims quotient_dims(const QuadraticPresentation& q, int c) {
  if (c < 2) throw Error(Errc::InsufficientDegree, "need max degree >= 2");
  if (c > kDegreeCap)
    throw Error(Errc::DegreeTooLarge,
                "max degree " + std::to_string(c) + " exceeds the cap " + std::to_string(kDegreeCap));
  const FieldCtx& F = q.ctx;
  if (rank(F, q.rel) != 4)
    throw Error(Errc::RankDeficient, "relator matrix has rank < 4");

  GradedDims out;
  out.a.push_back(4);

  // Ideal components: r_2 is the relator span, and each next component is
  // spanned by brackets with the generators -- nested brackets reduce to this
  // left-normed form by the Jacobi identity since the ideal is generated in
  // degree 2 and the ambient algebra in degree 1.
  EchelonBasis cur(F, 16);
  for (int r = 0; r < 4; ++r) cur.insert(embed_relator(F, q.rel, r));
  if (cur.dim() != 4)
    throw Error(Errc::InternalInvariantViolation, "relator embedding lost rank");
  out.a.push_back(static_cast<int>(witt_dim(4, 2)) - cur.dim());

  for (int n = 3; n <= c; ++n) {
    EchelonBasis next(F, cur.cols * 4);
    for (const auto& u : cur.rows)
      for (int k = 0; k < 4; ++k) next.insert(bracket_with_generator(F, u, k));
    out.a.push_back(static_cast<int>(witt_dim(4, n)) - next.dim());
    cur.cols = next.cols;
    cur.rows = std::move(next.rows);
    cur.leads = std::move(next.leads);
  }
  return out;
}

bool is_mild(const GradedDims& d) {
  if (d.max_degree() < 4)
    throw Error(Errc::InsufficientDegree, "mildness needs dimensions through degree 4");
  return d.a[2] == 4 && d.a[3] == 6;
}

bool series_check(const GradedDims& d, int m) {
  int c = d.max_degree();
  // enveloping-algebra series prod (1 - t^n)^{-a_n}, truncated
  std::vector<long long> u(static_cast<std::size_t>(c) + 1, 0);
  u[0] = 1;
  for (int n = 1; n <= c; ++n)
    for (int rep = 0; rep < d.a[static_cast<std::size_t>(n - 1)]; ++rep)
      for (int i = n; i <= c; ++i) u[i] += u[i - n];
  // target 1/(1 - mt + mt^2): c_0 = 1, c_1 = m, c_k = m(c_{k-1} - c_{k-2})
  long long prev2 = 1, prev1 = m;
  if (u[0] != 1) return false;
  if (c >= 1 && u[1] != prev1) return false;
  for (int k = 2; k <= c; ++k) {
    long long cur = m * (prev1 - prev2);
    if (u[k] != cur) return false;
    prev2 = prev1;
    prev1 = cur;
  }
  return true;
}

std::vector<long long> question_d_probe(const QuadraticPresentation& q, int c) {
  GradedDims d = quotient_dims(q, c);
  std::vector<long long> poly(static_cast<std::size_t>(c) + 1, 0);
  poly[0] = 1;
  for (int n = 1; n <= c; ++n)
    for (int rep = 0; rep < d.a[static_cast<std::size_t>(n - 1)]; ++rep)
      for (int i = c; i >= n; --i) poly[i] -= poly[i - n];
  poly[0] -= 1;
  if (c >= 1) poly[1] += 4;
  if (c >= 2) poly[2] -= 4;
  return poly;
}

bool has_five_dim_centralizer(const QuadraticPresentation& q) {
  const FieldCtx& F = q.ctx;
  auto [red, rk] = rref(F, q.rel);
  if (rk != 4) throw Error(Errc::RankDeficient, "relator matrix has rank < 4");

  int pivot_col[4];
  bool is_pivot[6] = {false, false, false, false, false, false};
  for (int r = 0; r < 4; ++r) {
    int c = 0;
    while (red.at(r, c) == 0) ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }
  int free_col[2];
  int nf = 0;
  for (int c = 0; c < 6; ++c)
    if (!is_pivot[c]) free_col[nf++] = c;

  // projection of the 6 bracket coordinates onto the 2-dimensional quotient:
  // x_{pivot_r} = -sum_f red[r][f] x_f modulo the relator span
  Fe proj[2][6] = {};
  for (int k = 0; k < 2; ++k) {
    proj[k][free_col[k]] = 1;
    for (int r = 0; r < 4; ++r) proj[k][pivot_col[r]] = F.neg(red.at(r, free_col[k]));
  }

  std::uint32_t p = F.p();
  // projective degree-1 directions: first nonzero coordinate normalized to 1
  std::vector<std::array<Fe, 4>> points;
  for (int lead = 0; lead < 4; ++lead) {
    std::array<Fe, 4> a{};
    a[static_cast<std::size_t>(lead)] = 1;
    std::size_t tail = static_cast<std::size_t>(3 - lead);
    std::uint64_t combos = 1;
    for (std::size_t k = 0; k < tail; ++k) combos *= p;
    for (std::uint64_t code = 0; code < combos; ++code) {
      std::uint64_t rest = code;
      for (std::size_t k = static_cast<std::size_t>(lead) + 1; k < 4; ++k) {
        a[k] = static_cast<Fe>(rest % p);
        rest /= p;
      }
      points.push_back(a);
    }
  }

  for (const auto& a : points) {
    // the map b -> [a, b] into the degree-2 quotient, one column per generator
    Fe m[2][4] = {};
    for (int col = 0; col < 4; ++col) {
      Fe w6[6] = {};
      for (int i = 0; i < 4; ++i) {
        if (i == col || a[static_cast<std::size_t>(i)] == 0) continue;
        if (i < col) {
          int idx = pair_index(i + 1, col + 1);
          w6[idx] = F.add(w6[idx], a[static_cast<std::size_t>(i)]);
        } else {
          int idx = pair_index(col + 1, i + 1);
          w6[idx] = F.sub(w6[idx], a[static_cast<std::size_t>(i)]);
        }
      }
      for (int k = 0; k < 2; ++k) {
        Fe s = 0;
        for (int j = 0; j < 6; ++j) s = F.add(s, F.mul(proj[k][j], w6[j]));
        m[k][col] = s;
      }
    }
    bool top_zero = (m[0][0] | m[0][1] | m[0][2] | m[0][3]) == 0;
    bool bot_zero = (m[1][0] | m[1][1] | m[1][2] | m[1][3]) == 0;
    if (top_zero && bot_zero) continue;  // rank 0: centralizer has dimension 6
    bool rank2 = false;
    for (int c1 = 0; c1 < 4 && !rank2; ++c1)
      for (int c2 = c1 + 1; c2 < 4 && !rank2; ++c2)
        if (F.sub(F.mul(m[0][c1], m[1][c2]), F.mul(m[0][c2], m[1][c1])) != 0) rank2 = true;
    if (!rank2) return true;  // rank 1: centralizer has dimension 2 + 3 = 5
  }
  return false;
}

}  // namespace mild4
