// Acceptance suite: runs the release criteria end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "mild4/classify.hpp"

using namespace mild4;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int num, bool ok, const char* desc, double seconds) {
  std::printf("%s  %2d  %s (%.2fs)\n", ok ? "PASS" : "FAIL", num, desc, seconds);
  if (!ok) ++failures;
}

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

QuadraticPresentation canonical_presentation(const FieldCtx& F, Orbit o) {
  Subspace comp = orthogonal_complement(F, canonical_plane(F, o));
  return QuadraticPresentation{F, comp.basis()};
}

QuadraticPresentation random_rank4(const FieldCtx& F, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, F.p() - 1);
  for (;;) {
    Mat rel(4, 6);
    for (Fe& v : rel.a) v = d(rng);
    if (rank(F, rel) == 4) return QuadraticPresentation{F, rel};
  }
}

Mat random_invertible4(const FieldCtx& F, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, F.p() - 1);
  for (;;) {
    Mat m(4, 4);
    for (Fe& v : m.a) v = d(rng);
    if (determinant(F, m) != 0) return m;
  }
}

template <typename Fn>
void for_each_plane(const FieldCtx& F, Fn&& fn) {
  std::uint32_t p = F.p();
  for (int p1 = 0; p1 < 6; ++p1)
    for (int p2 = p1 + 1; p2 < 6; ++p2) {
      std::vector<std::pair<int, int>> free_pos;
      for (int c = p1 + 1; c < 6; ++c)
        if (c != p2) free_pos.emplace_back(0, c);
      for (int c = p2 + 1; c < 6; ++c) free_pos.emplace_back(1, c);
      std::uint64_t combos = 1;
      for (std::size_t k = 0; k < free_pos.size(); ++k) combos *= p;
      for (std::uint64_t code = 0; code < combos; ++code) {
        Mat m(2, 6);
        m.at(0, p1) = 1;
        m.at(1, p2) = 1;
        std::uint64_t rest = code;
        for (const auto& [row, col] : free_pos) {
          m.at(row, col) = static_cast<Fe>(rest % p);
          rest /= p;
        }
        fn(Subspace::from_rows(F, m));
      }
    }
}

// enveloping series prod (1 - t^n)^{-a_n} through degree 4
std::vector<long long> enveloping_series(const GradedDims& d) {
  std::vector<long long> u(5, 0);
  u[0] = 1;
  for (int n = 1; n <= 4 && n <= d.max_degree(); ++n)
    for (int rep = 0; rep < d.a[static_cast<std::size_t>(n - 1)]; ++rep)
      for (int i = n; i <= 4; ++i) u[static_cast<std::size_t>(i)] += u[static_cast<std::size_t>(i - n)];
  return u;
}

long long count_lyndon(int m, int n) {
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  long long count = 0;
  for (;;) {
    bool lyndon = true;
    for (int rot = 1; rot < n && lyndon; ++rot) {
      for (int k = 0; k < n; ++k) {
        int a = w[static_cast<std::size_t>(k)];
        int b = w[static_cast<std::size_t>((k + rot) % n)];
        if (a != b) {
          lyndon = a < b;
          break;
        }
        if (k == n - 1) lyndon = false;
      }
    }
    if (lyndon) ++count;
    int pos = n - 1;
    while (pos >= 0 && w[static_cast<std::size_t>(pos)] == m - 1) {
      w[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++w[static_cast<std::size_t>(pos)];
  }
  return count;
}

struct SweepStats {
  bool routes_agree = true;
  bool witnesses_sound = true;
  bool mildness_consistent = true;
  std::uint64_t inputs = 0;
};

void sweep_presentation(const FieldCtx& F, const QuadraticPresentation& q, SweepStats& st) {
  Subspace comp = orthogonal_complement(F, Subspace::from_rows(F, q.rel));
  PlaneReduction pr = reduce_plane(F, comp);
  Orbit red = pr.label;
  Orbit quad = classify_by_quadric(q);
  GradedDims dims = quotient_dims(q, 4);
  Orbit inv = (dims.a[2] == 4 && dims.a[3] == 6)
                  ? (has_five_dim_centralizer(q) ? Orbit::O1 : Orbit::O4)
                  : orbit_from_dims(dims.a[2], dims.a[3], false);

  st.routes_agree = st.routes_agree && red == inv && inv == quad;
  st.witnesses_sound = st.witnesses_sound && verify_witness(F, comp, pr);

  bool orbit_mild = red == Orbit::O1 || red == Orbit::O4;
  bool dims_mild = dims.a[2] == 4 && dims.a[3] == 6;
  bool series_mild = enveloping_series(dims) == std::vector<long long>{1, 4, 12, 32, 80};
  st.mildness_consistent =
      st.mildness_consistent && orbit_mild == dims_mild && dims_mild == series_mild;
  ++st.inputs;
}

}  // namespace

int main() {
  // 1. the four published prime sets land in orbits 1..4, under a second each
  {
    bool ok = true;
    double worst = 0;
    const std::vector<std::uint32_t> sets[4] = {
        {31, 37, 43, 67}, {67, 79, 97, 127}, {61, 73, 79, 97}, {31, 37, 61, 67}};
    auto t0 = Clock::now();
    for (int k = 0; k < 4; ++k) {
      auto t = Clock::now();
      ClassificationReport rep = classify_prime_set(3, sets[k]);
      double dt = elapsed(t);
      worst = std::max(worst, dt);
      ok = ok && rep.orbit && static_cast<int>(*rep.orbit) == k + 1 && dt < 1.0;
    }
    report(1, ok, "published prime sets classify as orbits 1,2,3,4 in under 1s each",
           elapsed(t0));
  }

  // 2. graded dimension table of the four canonical presentations
  {
    auto t0 = Clock::now();
    FieldCtx F(3);
    auto d1 = quotient_dims(canonical_presentation(F, Orbit::O1), 4);
    auto d2 = quotient_dims(canonical_presentation(F, Orbit::O2), 4);
    auto d3 = quotient_dims(canonical_presentation(F, Orbit::O3), 4);
    auto d4 = quotient_dims(canonical_presentation(F, Orbit::O4), 4);
    bool ok = d1.a == std::vector<int>{4, 2, 4, 6} && d2.a[0] == 4 && d2.a[1] == 2 &&
              d2.a[2] == 5 && d3.a == std::vector<int>{4, 2, 4, 7} &&
              d4.a == std::vector<int>{4, 2, 4, 6};
    double dt = elapsed(t0);
    ok = ok && dt < 5.0;
    report(2, ok, "canonical presentations reproduce the dimension table in under 5s", dt);
  }

  // 3. exhaustive p = 3 census: 2 line orbits over 364 lines, 4 plane orbits
  //    over 11011 planes, in under 5 minutes
  {
    auto t0 = Clock::now();
    FieldCtx F(3);
    OrbitCensus lines = enumerate_orbits(F, 1);
    OrbitCensus planes = enumerate_orbits(F, 2);
    std::uint64_t lsum = 0, psum = 0;
    for (const auto& oc : lines.orbits) lsum += oc.size;
    for (const auto& oc : planes.orbits) psum += oc.size;
    double dt = elapsed(t0);
    bool ok = lines.orbits.size() == 2 && lines.total == 364 && lsum == 364 &&
              planes.orbits.size() == 4 && planes.total == 11011 && psum == 11011 &&
              dt < 300.0;
    report(3, ok, "exhaustive p=3 census: 2 line orbits (364), 4 plane orbits (11011)", dt);
  }

  // 4..6 share one sweep over all 11011 planes at p = 3 plus 1000 random
  // rank-4 presentations at each of p = 5, 7, 11
  {
    auto t0 = Clock::now();
    SweepStats st;
    FieldCtx F3(3);
    for_each_plane(F3, [&](const Subspace& u) {
      QuadraticPresentation q{F3, orthogonal_complement(F3, u).basis()};
      sweep_presentation(F3, q, st);
    });
    std::mt19937 rng(20260809);
    for (std::uint32_t p : {5u, 7u, 11u}) {
      FieldCtx F(p);
      for (int k = 0; k < 1000; ++k) sweep_presentation(F, random_rank4(F, rng), st);
    }
    double dt = elapsed(t0);
    bool counted = st.inputs == 11011 + 3000;
    report(4, st.routes_agree && counted,
           "reduction, invariant, and quadric routes agree on 11011+3000 inputs", dt);
    report(5, st.witnesses_sound && counted, "every reduction witness verifies", 0.0);
    report(6, st.mildness_consistent && counted,
           "orbit in {1,4} <=> (a3,a4)=(4,6) <=> series 1,4,12,32,80 everywhere", 0.0);
  }

  // 7. representation identities on 10^4 samples per prime
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::mt19937 rng(424242);
    for (std::uint32_t p : {3u, 5u, 7u}) {
      FieldCtx F(p);
      std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
      for (int k = 0; k < 10000 && ok; ++k) {
        Mat a = random_invertible4(F, rng);
        Mat b = random_invertible4(F, rng);
        Mat pa = psi(F, a);
        ok = ok && psi(F, mat_mul(F, a, b)) == mat_mul(F, pa, psi(F, b));
        ok = ok && psi(F, transpose(a)) == transpose(pa);
        Fe det = determinant(F, a);
        ok = ok && determinant(F, pa) == F.mul(det, F.mul(det, det));
        Vec6 v{};
        for (Fe& x : v) x = d(rng);
        ok = ok && pluecker_form(F, row_times(F, v, pa)) == F.mul(det, pluecker_form(F, v));
      }
    }
    report(7, ok, "psi homomorphism/transpose/determinant and Q-scaling on 3x10^4 samples",
           elapsed(t0));
  }

  // 8. the eight displayed stabilizer effects hold for random parameters;
  //    the column-3/4 swap carries the sign forced by det psi = det^3 on the
  //    last coordinate, so that display is checked modulo the stabilized
  //    vector (all others are exact)
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::mt19937 rng(31415);
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
      FieldCtx F(p);
      std::uniform_int_distribution<std::uint32_t> d(0, p - 1), nz(1, p - 1);
      for (int trial = 0; trial < 2000 && ok; ++trial) {
        Fe b = nz(rng);
        Fe bi = F.inv(b), nb = F.neg(b), nbi = F.neg(bi);
        Vec6 r{1, d(rng), d(rng), d(rng), d(rng), d(rng)};
        auto apply = [&F](Vec6 x, std::initializer_list<GenToken> toks) {
          for (const auto& t : toks) x = row_times(F, x, token_gl6(F, t));
          return x;
        };
        Vec6 g1 = apply(r, {GenToken::add_col(3, 2, bi), GenToken::add_col(2, 3, nb),
                            GenToken::swap_col(2, 3), GenToken::scale_col(2, nbi),
                            GenToken::scale_col(3, b)});
        ok = ok && g1 == Vec6{1, F.add(r[1], b), r[2], r[3], r[4], F.add(r[5], F.mul(b, r[4]))};
        Vec6 g2 = apply(r, {GenToken::add_col(4, 2, bi), GenToken::add_col(2, 4, nb),
                            GenToken::swap_col(2, 4), GenToken::scale_col(2, nbi),
                            GenToken::scale_col(4, b)});
        ok = ok && g2 == Vec6{1, r[1], F.add(r[2], b), r[3], r[4], F.sub(r[5], F.mul(b, r[3]))};
        Vec6 g3 = apply(r, {GenToken::add_col(3, 1, bi), GenToken::add_col(1, 3, nb),
                            GenToken::swap_col(1, 3), GenToken::scale_col(1, nbi),
                            GenToken::scale_col(3, b)});
        ok = ok && g3 == Vec6{1, r[1], r[2], F.sub(r[3], b), r[4], F.add(r[5], F.mul(b, r[2]))};
        Vec6 g4 = apply(r, {GenToken::add_col(4, 1, bi), GenToken::add_col(1, 4, nb),
                            GenToken::swap_col(1, 4), GenToken::scale_col(1, nbi),
                            GenToken::scale_col(4, b)});
        ok = ok && g4 == Vec6{1, r[1], r[2], r[3], F.sub(r[4], b), F.sub(r[5], F.mul(b, r[1]))};

        Fe a = nz(rng);
        Vec6 s{0, d(rng), d(rng), d(rng), d(rng), d(rng)};
        Vec6 t12 = row_times(F, s, token_gl6(F, GenToken::swap_col(1, 2)));
        ok = ok && t12 == Vec6{0, s[3], s[4], s[1], s[2], s[5]};
        Vec6 t34 = row_times(F, s, token_gl6(F, GenToken::swap_col(3, 4)));
        ok = ok && t34 == Vec6{0, s[2], s[1], s[4], s[3], F.neg(s[5])};
        Vec6 m12 = row_times(F, s, token_gl6(F, GenToken::add_col(1, 2, a)));
        ok = ok && m12 == Vec6{0, s[1], s[2], F.add(s[3], F.mul(a, s[1])),
                               F.add(s[4], F.mul(a, s[2])), s[5]};
        Vec6 m43 = row_times(F, s, token_gl6(F, GenToken::add_col(4, 3, a)));
        ok = ok && m43 == Vec6{0, F.add(s[1], F.mul(a, s[2])), s[2],
                               F.add(s[3], F.mul(a, s[4])), s[4], s[5]};
      }
    }
    report(8, ok, "all eight displayed stabilizer effects hold for random parameters",
           elapsed(t0));
  }

  // 9. second-smallest primitive roots reproduce the same orbit labels
  {
    auto t0 = Clock::now();
    bool ok = true;
    const std::vector<std::uint32_t> sets[4] = {
        {31, 37, 43, 67}, {67, 79, 97, 127}, {61, 73, 79, 97}, {31, 37, 61, 67}};
    FieldCtx F(3);
    for (int k = 0; k < 4; ++k) {
      PrimeSet s = validate(3, sets[k]);
      std::array<std::uint32_t, 4> roots{};
      for (int j = 0; j < 4; ++j) roots[j] = nth_primitive_root(s.q[j], 1);
      auto orbit = classify_fast(presentation_from_linking(linking_matrix(s, roots), F));
      ok = ok && orbit && static_cast<int>(*orbit) == k + 1;
    }
    report(9, ok, "second-smallest primitive roots give identical orbit labels", elapsed(t0));
  }

  // 10. Witt dimensions against Lyndon-word enumeration
  {
    auto t0 = Clock::now();
    bool ok = true;
    for (int m = 2; m <= 4; ++m)
      for (int n = 1; n <= 6; ++n) ok = ok && witt_dim(m, n) == count_lyndon(m, n);
    const long long expect4[6] = {4, 6, 20, 60, 204, 670};
    for (int n = 1; n <= 6; ++n) ok = ok && witt_dim(4, n) == expect4[n - 1];
    report(10, ok, "Witt dimensions match Lyndon enumeration for m<=4, n<=6", elapsed(t0));
  }

  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
