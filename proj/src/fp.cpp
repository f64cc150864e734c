#include "mild4/fp.hpp"

namespace mild4 {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::BadDimension: return "BadDimension";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::InsufficientDegree: return "InsufficientDegree";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotCongruentOneModP: return "NotCongruentOneModP";
    case Errc::DuplicatePrime: return "DuplicatePrime";
    case Errc::PEven: return "PEven";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldCtx::FieldCtx(std::uint32_t p) : p_(p) {
  if (p % 2 == 0)
    throw Error(Errc::PEven, "modulus " + std::to_string(p) + " is even; need an odd prime");
  if (p >= (1u << 15))
    throw Error(Errc::TooLarge, "modulus " + std::to_string(p) + " exceeds the 2^15 bound");
  if (!is_prime(p))
    throw Error(Errc::NotPrime, "modulus " + std::to_string(p) + " is not prime");
}

Fe FieldCtx::pow(Fe base, std::uint64_t e) const {
  std::uint64_t acc = 1, b = base % p_;
  while (e) {
    if (e & 1) acc = acc * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<Fe>(acc);
}

Fe FieldCtx::inv(Fe x) const {
  if (x == 0) throw Error(Errc::NotAUnit, "inverse of zero mod " + std::to_string(p_));
  return pow(x, p_ - 2);
}

SquareClass FieldCtx::square_class(Fe a) const {
  if (a == 0) return SquareClass::Zero;
  return pow(a, (p_ - 1) / 2) == 1 ? SquareClass::Square : SquareClass::NonSquare;
}

Fe FieldCtx::sqrt(Fe a) const {
  if (a == 0) return 0;
  for (Fe r = 1; r < p_; ++r)
    if (mul(r, r) == a) return r;
  throw Error(Errc::InternalInvariantViolation,
              "sqrt of a nonresidue " + std::to_string(a) + " mod " + std::to_string(p_));
}

Fe FieldCtx::smallest_generator() const {
  // distinct prime factors of p - 1
  std::uint32_t n = p_ - 1;
  std::uint32_t factors[16];
  int nf = 0;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors[nf++] = d;
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors[nf++] = n;

  for (Fe g = 2; g < p_; ++g) {
    bool primitive = true;
    for (int k = 0; k < nf; ++k) {
      if (pow(g, (p_ - 1) / factors[k]) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw Error(Errc::InternalInvariantViolation, "no generator mod " + std::to_string(p_));
}

}  // namespace mild4
