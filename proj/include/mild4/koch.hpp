#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mild4/lie_oracle.hpp"

namespace mild4 {

struct PrimeSet {
  std::uint32_t p = 0;
  std::array<std::uint32_t, 4> q{};
};

// Linking data: l[i][j] is the image in F_p of -log_{g_j}(q_i mod q_j), where
// g_j is the chosen primitive root mod q_j; the diagonal is an unused zero
// sentinel. roots and the raw logs are kept for reporting, and diag[i] holds
// (q_i - 1)/p mod p, the coefficient of the dropped degree-2 power factor.
struct LinkingData {
  std::uint32_t p = 0;
  Mat l;  // 4x4
  std::array<std::uint32_t, 4> roots{};
  std::array<std::array<std::uint32_t, 4>, 4> dlogs{};
  std::array<Fe, 4> diag{};
};

// Checks p is an odd prime and the q_i are distinct primes congruent to
// 1 mod p, all below 2^31.
PrimeSet validate(std::uint32_t p, const std::vector<std::uint32_t>& q);

std::uint32_t primitive_root(std::uint32_t q);
std::uint32_t nth_primitive_root(std::uint32_t q, int k);  // k = 0 is smallest

// Baby-step/giant-step: the unique r in [0, q-1) with g^r = a mod q.
std::uint64_t discrete_log(std::uint64_t a, std::uint64_t g, std::uint64_t q);

LinkingData linking_matrix(const PrimeSet& s);
LinkingData linking_matrix(const PrimeSet& s, const std::array<std::uint32_t, 4>& roots);

// Row i has +l[i][j] in bracket column (i,j) for i < j and -l[i][j] in
// column (j,i) for i > j; the sign comes from bracket antisymmetry.
QuadraticPresentation presentation_from_linking(const LinkingData& d, const FieldCtx& F);

}  // namespace mild4
