#include "mild4/koch.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "mild4/exterior.hpp"

namespace mild4 {

PrimeSet validate(std::uint32_t p, const std::vector<std::uint32_t>& q) {
  FieldCtx ctx(p);  // rejects even, composite, oversized moduli
  if (q.size() != 4)
    throw Error(Errc::BadDimension, "expected exactly 4 primes, got " + std::to_string(q.size()));
  PrimeSet s;
  s.p = p;
  for (std::size_t i = 0; i < 4; ++i) {
    std::uint32_t qi = q[i];
    if (qi >= (1u << 31))
      throw Error(Errc::TooLarge, "q[" + std::to_string(i) + "] = " + std::to_string(qi) +
                                      " exceeds the 2^31 bound");
    if (!is_prime(qi))
      throw Error(Errc::NotPrime, "q[" + std::to_string(i) + "] = " + std::to_string(qi) +
                                      " is not prime");
    if (qi % p != 1)
      throw Error(Errc::NotCongruentOneModP,
                  "q[" + std::to_string(i) + "] = " + std::to_string(qi) + " is " +
                      std::to_string(qi % p) + " mod " + std::to_string(p) + ", expected 1");
    for (std::size_t j = 0; j < i; ++j)
      if (q[j] == qi)
        throw Error(Errc::DuplicatePrime, "q[" + std::to_string(j) + "] and q[" +
                                              std::to_string(i) + "] are both " +
                                              std::to_string(qi));
    s.q[i] = qi;
  }
  return s;
}

static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t acc = 1;
  b %= m;
  while (e) {
    if (e & 1) acc = acc * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return acc;
}

std::uint32_t nth_primitive_root(std::uint32_t q, int k) {
  if (!is_prime(q) || q < 3)
    throw Error(Errc::NotPrime, std::to_string(q) + " is not an odd prime");
  std::uint32_t n = q - 1;
  std::uint32_t factors[32];
  int nf = 0;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      factors[nf++] = d;
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors[nf++] = n;

  int seen = 0;
  for (std::uint32_t g = 2; g < q; ++g) {
    bool primitive = true;
    for (int f = 0; f < nf; ++f) {
      if (pow_mod(g, (q - 1) / factors[f], q) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive && seen++ == k) return g;
  }
  throw Error(Errc::InternalInvariantViolation, "primitive root search exhausted");
}

std::uint32_t primitive_root(std::uint32_t q) { return nth_primitive_root(q, 0); }

std::uint64_t discrete_log(std::uint64_t a, std::uint64_t g, std::uint64_t q) {
  a %= q;
  if (a == 0) throw Error(Errc::NotAUnit, "discrete log of 0");
  if (a == 1) return 0;
  std::uint64_t order = q - 1;
  auto m = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(order))) + 1;
  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(m);
  std::uint64_t cur = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = cur * g % q;
  }
  std::uint64_t giant = pow_mod(pow_mod(g, m, q), order - 1, q);  // g^{-m}
  cur = a;
  for (std::uint64_t i = 0; i <= m; ++i) {
    auto it = baby.find(cur);
    if (it != baby.end()) return (i * m + it->second) % order;
    cur = cur * giant % q;
  }
  throw Error(Errc::InternalInvariantViolation, "baby-step/giant-step found no solution");
}

LinkingData linking_matrix(const PrimeSet& s, const std::array<std::uint32_t, 4>& roots) {
  LinkingData d;
  d.p = s.p;
  d.roots = roots;
  d.l = Mat(4, 4);
  for (int i = 0; i < 4; ++i) d.diag[i] = static_cast<Fe>(((s.q[i] - 1) / s.p) % s.p);
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) {
      if (i == j) continue;
      std::uint64_t raw = discrete_log(s.q[i] % s.q[j], roots[j], s.q[j]);
      d.dlogs[i][j] = static_cast<std::uint32_t>(raw);
      // l_ij is the image of -raw; well-defined mod p because p | q_j - 1
      d.l.at(i, j) = static_cast<Fe>((s.p - raw % s.p) % s.p);
    }
  }
  return d;
}

LinkingData linking_matrix(const PrimeSet& s) {
  std::array<std::uint32_t, 4> roots{};
  for (int j = 0; j < 4; ++j) roots[j] = primitive_root(s.q[j]);
  return linking_matrix(s, roots);
}

QuadraticPresentation presentation_from_linking(const LinkingData& d, const FieldCtx& F) {
  if (d.p != F.p())
    throw Error(Errc::BadDimension, "linking data modulus does not match the field");
  Mat rel(4, 6);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      Fe l = d.l.at(i, j);
      if (i < j)
        rel.at(i, pair_index(i + 1, j + 1)) = F.add(rel.at(i, pair_index(i + 1, j + 1)), l);
      else
        rel.at(i, pair_index(j + 1, i + 1)) =
            F.sub(rel.at(i, pair_index(j + 1, i + 1)), l);
    }
  }
  return QuadraticPresentation{F, std::move(rel)};
}

}  // namespace mild4
