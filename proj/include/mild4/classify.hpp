#pragma once

#include <functional>
#include <optional>
#include <string>
#include <tuple>

#include "mild4/koch.hpp"
#include "mild4/reduce.hpp"

namespace mild4 {

struct RouteLabels {
  std::optional<Orbit> reduction;
  std::optional<Orbit> invariants;
  std::optional<Orbit> quadric;
  bool agree = true;
};

struct ClassificationReport {
  std::uint32_t p = 0;
  Mat rel;
  std::optional<std::array<std::uint32_t, 4>> primes;
  std::optional<LinkingData> linking;
  std::optional<Orbit> orbit;  // absent when the relators are dependent
  bool mild = false;
  GradedDims dims;
  GroupWord witness;
  std::optional<Subspace> complement;
  RouteLabels methods;
  std::vector<std::string> notes;
};

// Route 1: reduce the orthogonal complement plane to its canonical normal
// form; returns (label, verified witness, complement).
std::tuple<Orbit, GroupWord, Subspace> classify_by_reduction(const QuadraticPresentation& q);

// Route 2: graded dimensions a3, a4 plus the centralizer invariant.
Orbit classify_by_invariants(const QuadraticPresentation& q);
Orbit orbit_from_dims(int a3, int a4, bool five_dim_centralizer);

// Route 3: rank and discriminant class of the Pluecker form restricted to the
// complement plane (Gram matrix of the polarization; p odd).
Orbit classify_by_quadric(const QuadraticPresentation& q);

// Quadric route only; nullopt when the relators are dependent.
std::optional<Orbit> classify_fast(const QuadraticPresentation& q);

// Runs all three routes, insists that they agree, and cross-checks the three
// mildness signals against each other. Route disagreement throws
// InternalInvariantViolation; dependent relators yield a report with no orbit
// and an explanatory note.
ClassificationReport classify(const QuadraticPresentation& q);
ClassificationReport classify_prime_set(std::uint32_t p, const std::vector<std::uint32_t>& q);

struct OrbitClass {
  Subspace representative;  // first member in enumeration order
  std::uint64_t size = 0;
  std::string label;  // "1".."4" for planes, "decomposable"/"generic" for lines
};

struct OrbitCensus {
  int dim = 0;
  std::uint64_t total = 0;
  std::vector<OrbitClass> orbits;
};

// Exact orbit partition of the dim-1 or dim-2 subspaces of F_p^6 by BFS over
// the generator images, keyed on canonical RREF forms. Guarded by a subspace
// count of 10^7 (TooLarge).
OrbitCensus enumerate_orbits(const FieldCtx& F, int dim);

struct SearchHit {
  PrimeSet s;
  Orbit orbit;
  bool mild = false;
};

// Streams 4-subsets of the primes <= max_prime congruent to 1 mod p in
// lexicographic order, classifying each (quadric fast path, or all three
// routes when full_verify). Sets with dependent relators are skipped.
void search_prime_sets(std::uint32_t p, std::uint32_t max_prime,
                       std::optional<Orbit> target,
                       std::optional<std::uint64_t> limit, bool full_verify,
                       const std::function<void(const SearchHit&)>& sink);

}  // namespace mild4
