#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mild4 {

// Field elements are fully reduced residues in [0, p); all arithmetic goes
// through FieldCtx, so value equality is bit-exact. That is what canonical
// subspace comparison and orbit hashing rely on.
using Fe = std::uint32_t;

enum class Errc {
  SingularMatrix,
  ZeroVector,
  BadDimension,
  RankDeficient,
  DegreeTooLarge,
  InsufficientDegree,
  NotPrime,
  NotCongruentOneModP,
  DuplicatePrime,
  PEven,
  NotAUnit,
  TooLarge,
  InternalInvariantViolation,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Deterministic trial division; inputs stay below 2^31 throughout.
bool is_prime(std::uint64_t n);

enum class SquareClass { Zero, Square, NonSquare };

// Arithmetic in F_p for an odd prime p < 2^15, so products fit in 64-bit
// intermediates with plenty of room.
class FieldCtx {
 public:
  explicit FieldCtx(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  Fe reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Fe>(r < 0 ? r + p_ : r);
  }
  Fe add(Fe x, Fe y) const {
    Fe s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  Fe sub(Fe x, Fe y) const { return x >= y ? x - y : x + p_ - y; }
  Fe neg(Fe x) const { return x == 0 ? 0 : p_ - x; }
  Fe mul(Fe x, Fe y) const {
    return static_cast<Fe>(static_cast<std::uint64_t>(x) * y % p_);
  }
  Fe pow(Fe base, std::uint64_t e) const;
  Fe inv(Fe x) const;  // x must be nonzero

  // Euler criterion: a^((p-1)/2) is 1 for squares and p-1 for nonsquares.
  SquareClass square_class(Fe a) const;

  // Smallest square root of a quadratic residue (0 maps to 0). p is tiny, so
  // a direct scan beats carrying a Tonelli-Shanks implementation around.
  Fe sqrt(Fe a) const;

  // Smallest g in [2, p) generating the multiplicative group.
  Fe smallest_generator() const;

  bool operator==(const FieldCtx&) const = default;

 private:
  std::uint32_t p_;
};

}  // namespace mild4
