#include "mild4/classify.hpp"

#include <deque>
#include <string>
#include <unordered_set>

namespace mild4 {

namespace {

Subspace complement_plane(const QuadraticPresentation& q) {
  const FieldCtx& F = q.ctx;
  Subspace rowspace = Subspace::from_rows(F, q.rel);
  if (rowspace.dim() != 4) throw Error(Errc::RankDeficient, "relator matrix has rank < 4");
  return orthogonal_complement(F, rowspace);
}

}  // namespace

std::tuple<Orbit, GroupWord, Subspace> classify_by_reduction(const QuadraticPresentation& q) {
  const FieldCtx& F = q.ctx;
  Subspace comp = complement_plane(q);
  PlaneReduction pr = reduce_plane(F, comp);
  if (!verify_witness(F, comp, pr))
    throw Error(Errc::InternalInvariantViolation, "reduction witness failed verification");
  return {pr.label, pr.witness, comp};
}

Orbit orbit_from_dims(int a3, int a4, bool five_dim_centralizer) {
  if (a3 == 5) return Orbit::O2;
  if (a3 == 4 && a4 == 7) return Orbit::O3;
  if (a3 == 4 && a4 == 6) return five_dim_centralizer ? Orbit::O1 : Orbit::O4;
  throw Error(Errc::InternalInvariantViolation,
              "graded dimensions (a3, a4) = (" + std::to_string(a3) + ", " +
                  std::to_string(a4) + ") match no orbit");
}

Orbit classify_by_invariants(const QuadraticPresentation& q) {
  GradedDims d = quotient_dims(q, 4);
  int a3 = d.a[2], a4 = d.a[3];
  if (a3 == 4 && a4 == 6) return has_five_dim_centralizer(q) ? Orbit::O1 : Orbit::O4;
  return orbit_from_dims(a3, a4, false);
}

Orbit classify_by_quadric(const QuadraticPresentation& q) {
  const FieldCtx& F = q.ctx;
  Subspace comp = complement_plane(q);
  Vec6 u = comp.row6(0), v = comp.row6(1);
  Vec6 sum{};
  for (int k = 0; k < 6; ++k) sum[k] = F.add(u[k], v[k]);
  Fe quu = pluecker_form(F, u);
  Fe qvv = pluecker_form(F, v);
  // polarization: B(u,v) = (Q(u+v) - Q(u) - Q(v)) / 2, p odd
  Fe quv = F.mul(F.sub(F.sub(pluecker_form(F, sum), quu), qvv), F.inv(2));
  if (quu == 0 && qvv == 0 && quv == 0) return Orbit::O2;  // Gram rank 0
  Fe det = F.sub(F.mul(quu, qvv), F.mul(quv, quv));
  if (det == 0) return Orbit::O3;  // Gram rank 1
  switch (F.square_class(F.neg(det))) {
    case SquareClass::Square: return Orbit::O1;     // isotropic rank-2 form
    case SquareClass::NonSquare: return Orbit::O4;  // anisotropic rank-2 form
    case SquareClass::Zero: break;
  }
  throw Error(Errc::InternalInvariantViolation, "unreachable quadric discriminant");
}

std::optional<Orbit> classify_fast(const QuadraticPresentation& q) {
  if (rank(q.ctx, q.rel) != 4) return std::nullopt;
  return classify_by_quadric(q);
}

ClassificationReport classify(const QuadraticPresentation& q) {
  const FieldCtx& F = q.ctx;
  ClassificationReport rep;
  rep.p = F.p();
  rep.rel = q.rel;

  int rk = rank(F, q.rel);
  if (rk < 4) {
    rep.orbit = std::nullopt;
    rep.mild = false;
    rep.notes.push_back("CupProductNotSurjective: relator matrix has rank " +
                        std::to_string(rk) + " < 4");
    return rep;
  }

  auto [red_label, witness, comp] = classify_by_reduction(q);
  GradedDims dims = quotient_dims(q, 4);
  Orbit inv_label = (dims.a[2] == 4 && dims.a[3] == 6)
                        ? (has_five_dim_centralizer(q) ? Orbit::O1 : Orbit::O4)
                        : orbit_from_dims(dims.a[2], dims.a[3], false);
  Orbit quad_label = classify_by_quadric(q);

  rep.methods.reduction = red_label;
  rep.methods.invariants = inv_label;
  rep.methods.quadric = quad_label;
  rep.methods.agree = (red_label == inv_label && inv_label == quad_label);
  if (!rep.methods.agree)
    throw Error(Errc::InternalInvariantViolation, "classification routes disagree");

  rep.orbit = red_label;
  rep.witness = witness;
  rep.complement = comp;
  rep.dims = dims;
  rep.mild = (red_label == Orbit::O1 || red_label == Orbit::O4);
  // the three mildness signals must never come apart
  if (rep.mild != is_mild(dims) || rep.mild != series_check(dims, 4))
    throw Error(Errc::InternalInvariantViolation, "mildness signals disagree");
  return rep;
}

ClassificationReport classify_prime_set(std::uint32_t p, const std::vector<std::uint32_t>& q) {
  PrimeSet s = validate(p, q);
  LinkingData link = linking_matrix(s);
  FieldCtx F(p);
  QuadraticPresentation pres = presentation_from_linking(link, F);
  ClassificationReport rep = classify(pres);
  rep.primes = s.q;
  rep.linking = link;
  return rep;
}

namespace {

std::uint64_t subspace_count(std::uint32_t p, int dim) {
  // Gaussian binomial [6 choose dim]_p
  auto pw = [p](int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= p;
    return r;
  };
  if (dim == 1) return (pw(6) - 1) / (p - 1);
  return (pw(6) - 1) * (pw(5) - 1) / ((pw(2) - 1) * (p - 1));
}

std::uint64_t subspace_key(std::uint32_t p, const Subspace& s) {
  std::uint64_t key = static_cast<std::uint64_t>(s.dim());
  for (int r = 0; r < s.dim(); ++r)
    for (int c = 0; c < 6; ++c) key = key * p + s.basis().at(r, c);
  return key;
}

// BFS fast path: canonical bases as flat rows with allocation-free image
// computation. Products are accumulated in 64 bits and reduced once per
// entry (p < 2^15, six terms, no overflow).
using FlatRows = std::array<Fe, 12>;

FlatRows flat_image(const FieldCtx& F, const FlatRows& in, int dim, const Mat& g) {
  std::uint32_t p = F.p();
  FlatRows out{};
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < 6; ++c) {
      std::uint64_t acc = 0;
      for (int k = 0; k < 6; ++k)
        acc += static_cast<std::uint64_t>(in[static_cast<std::size_t>(r * 6 + k)]) *
               g.at(k, c);
      out[static_cast<std::size_t>(r * 6 + c)] = static_cast<Fe>(acc % p);
    }
  }
  // canonicalize in place; rows stay independent under an invertible image
  auto lead_of = [&out](int r) {
    int c = 0;
    while (c < 6 && out[static_cast<std::size_t>(r * 6 + c)] == 0) ++c;
    return c;
  };
  auto scale_row = [&](int r, Fe s) {
    for (int c = 0; c < 6; ++c) {
      Fe& v = out[static_cast<std::size_t>(r * 6 + c)];
      v = F.mul(v, s);
    }
  };
  auto eliminate = [&](int dst, int src, int col) {
    Fe f = out[static_cast<std::size_t>(dst * 6 + col)];
    if (f == 0) return;
    for (int c = col; c < 6; ++c)
      out[static_cast<std::size_t>(dst * 6 + c)] =
          F.sub(out[static_cast<std::size_t>(dst * 6 + c)],
                F.mul(f, out[static_cast<std::size_t>(src * 6 + c)]));
  };
  int l0 = lead_of(0);
  scale_row(0, F.inv(out[static_cast<std::size_t>(l0)]));
  if (dim == 2) {
    eliminate(1, 0, l0);
    int l1 = lead_of(1);
    scale_row(1, F.inv(out[static_cast<std::size_t>(6 + l1)]));
    eliminate(0, 1, l1);
    if (l1 < l0)
      for (int c = 0; c < 6; ++c)
        std::swap(out[static_cast<std::size_t>(c)], out[static_cast<std::size_t>(6 + c)]);
  }
  return out;
}

std::uint64_t flat_key(std::uint32_t p, const FlatRows& rows, int dim) {
  std::uint64_t key = static_cast<std::uint64_t>(dim);
  for (int k = 0; k < dim * 6; ++k) key = key * p + rows[static_cast<std::size_t>(k)];
  return key;
}

// Enumerates canonical RREF bases in a fixed order: pivot columns
// lexicographically, then the free entries as an odometer.
template <typename Fn>
void for_each_line(const FieldCtx& F, Fn&& fn) {
  std::uint32_t p = F.p();
  for (int pc = 0; pc < 6; ++pc) {
    int nfree = 5 - pc;
    std::uint64_t combos = 1;
    for (int k = 0; k < nfree; ++k) combos *= p;
    for (std::uint64_t code = 0; code < combos; ++code) {
      Mat m(1, 6);
      m.at(0, pc) = 1;
      std::uint64_t rest = code;
      for (int c = pc + 1; c < 6; ++c) {
        m.at(0, c) = static_cast<Fe>(rest % p);
        rest /= p;
      }
      fn(Subspace::from_rows(F, m));
    }
  }
}

template <typename Fn>
void for_each_plane(const FieldCtx& F, Fn&& fn) {
  std::uint32_t p = F.p();
  for (int p1 = 0; p1 < 6; ++p1) {
    for (int p2 = p1 + 1; p2 < 6; ++p2) {
      // free positions: row 0 right of p1 excluding column p2, row 1 right of p2
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
}

}  // namespace

OrbitCensus enumerate_orbits(const FieldCtx& F, int dim) {
  if (dim != 1 && dim != 2)
    throw Error(Errc::BadDimension, "orbit census supports dim 1 or 2");
  std::uint32_t p = F.p();
  std::uint64_t total = subspace_count(p, dim);
  if (total > 10'000'000ull)
    throw Error(Errc::TooLarge, "Grassmannian has " + std::to_string(total) +
                                    " subspaces, over the 10^7 guard");

  std::vector<Mat> gens = group_generators_gl6(F);
  std::unordered_set<std::uint64_t> visited;
  visited.reserve(static_cast<std::size_t>(total) * 2);

  OrbitCensus census;
  census.dim = dim;
  census.total = total;

  auto bfs_from = [&](const Subspace& start) {
    if (!visited.insert(subspace_key(p, start)).second) return;
    OrbitClass oc;
    oc.representative = start;
    oc.size = 1;
    FlatRows seed{};
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < 6; ++c)
        seed[static_cast<std::size_t>(r * 6 + c)] = start.basis().at(r, c);
    std::deque<FlatRows> queue{seed};
    while (!queue.empty()) {
      FlatRows s = queue.front();
      queue.pop_front();
      for (const Mat& g : gens) {
        FlatRows img = flat_image(F, s, dim, g);
        if (visited.insert(flat_key(p, img, dim)).second) {
          ++oc.size;
          queue.push_back(img);
        }
      }
    }
    if (dim == 1) {
      auto lr = reduce_line(F, start.row6(0));
      oc.label = lr.label == LineLabel::Decomposable ? "decomposable" : "generic";
    } else {
      oc.label = std::to_string(static_cast<int>(reduce_plane(F, start).label));
    }
    census.orbits.push_back(std::move(oc));
  };

  if (dim == 1)
    for_each_line(F, bfs_from);
  else
    for_each_plane(F, bfs_from);

  std::uint64_t covered = 0;
  for (const auto& oc : census.orbits) covered += oc.size;
  if (covered != total)
    throw Error(Errc::InternalInvariantViolation, "orbit sizes do not cover the Grassmannian");
  return census;
}

void search_prime_sets(std::uint32_t p, std::uint32_t max_prime,
                       std::optional<Orbit> target,
                       std::optional<std::uint64_t> limit, bool full_verify,
                       const std::function<void(const SearchHit&)>& sink) {
  if (max_prime > 100'000u)
    throw Error(Errc::TooLarge, "prime bound " + std::to_string(max_prime) + " exceeds 10^5");
  FieldCtx F(p);

  std::vector<std::uint32_t> primes;
  for (std::uint32_t n = 3; n <= max_prime; n += 2)
    if (n % p == 1 && is_prime(n)) primes.push_back(n);

  std::uint64_t emitted = 0;
  std::size_t np = primes.size();
  for (std::size_t i = 0; i + 3 < np; ++i)
    for (std::size_t j = i + 1; j + 2 < np; ++j)
      for (std::size_t k = j + 1; k + 1 < np; ++k)
        for (std::size_t l = k + 1; l < np; ++l) {
          if (limit && emitted >= *limit) return;
          PrimeSet s{p, {primes[i], primes[j], primes[k], primes[l]}};
          LinkingData link = linking_matrix(s);
          QuadraticPresentation pres = presentation_from_linking(link, F);
          std::optional<Orbit> orbit;
          if (full_verify) {
            ClassificationReport rep = classify(pres);
            orbit = rep.orbit;
          } else {
            orbit = classify_fast(pres);
          }
          if (!orbit) continue;  // dependent relators: no orbit to report
          if (target && *orbit != *target) continue;
          sink(SearchHit{s, *orbit, *orbit == Orbit::O1 || *orbit == Orbit::O4});
          ++emitted;
        }
}

}  // namespace mild4
