#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "porc/errors.hpp"

namespace porc {

/// Canonical representative in [0, p-1].
using Residue = std::uint64_t;
__extension__ typedef unsigned __int128 Wide;  // products of two residues

/// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(std::uint64_t n);

/// All primes in [lo, hi], ascending. Sieve of Eratosthenes.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// The prime field F_p for an odd prime p >= 5.
///
/// Products are formed in 128-bit arithmetic, so any p below 2^62 is safe;
/// the sweeps in this project stay far below 2^32.
class PrimeField {
 public:
  /// Throws std::invalid_argument unless p is a prime >= 5 and < 2^62.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }

  /// Reduces a signed integer to its canonical residue.
  Residue from_int(std::int64_t v) const noexcept;

  Residue add(Residue a, Residue b) const noexcept {
    const Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((static_cast<Wide>(a) * b) % p_);
  }
  Residue pow(Residue base, std::uint64_t exp) const noexcept;

  /// Multiplicative inverse; throws DivisionByZero for a == 0 (mod p).
  Residue inv(Residue a) const;
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  /// Euler's criterion: -1, 0 or +1.
  int legendre(Residue a) const noexcept;

  /// Square roots of a. Empty when a is a non-residue, {0} when a == 0,
  /// otherwise the two roots in ascending order. Tonelli-Shanks with the
  /// smallest quadratic non-residue, so the result is deterministic.
  std::vector<Residue> sqrt(Residue a) const;

  /// The n-th roots of unity in F_p, ascending.
  std::vector<Residue> roots_of_unity(unsigned n) const;

  /// Smallest generator of the multiplicative group.
  Residue primitive_root() const;

  bool operator==(const PrimeField& other) const noexcept { return p_ == other.p_; }

 private:
  std::uint64_t p_;
  Residue non_residue_ = 0;
};

Residue fp_inv(Residue a, const PrimeField& F);
int legendre(Residue a, const PrimeField& F);
std::vector<Residue> sqrt_mod(Residue a, const PrimeField& F);

/// Dense univariate polynomial over F_p, coefficients lowest degree first.
/// The zero polynomial has no coefficients.
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(const PrimeField& F, std::vector<Residue> coeffs);
  /// Builds from signed integer coefficients, lowest degree first.
  static FpPoly from_ints(const PrimeField& F, std::initializer_list<std::int64_t> coeffs);

  const std::vector<Residue>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Residue eval(const PrimeField& F, Residue x) const noexcept;

  bool operator==(const FpPoly&) const = default;

 private:
  void normalize();
  std::vector<Residue> coeffs_;
};

/// Distinct roots of f in F_p, ascending. Uses a full scan for small p and
/// gcd(f, x^p - x) plus equal-degree splitting otherwise.
std::vector<Residue> poly_roots(const FpPoly& f, const PrimeField& F);

/// Always takes the gcd / splitting route, regardless of p.
std::vector<Residue> poly_roots_splitting(const FpPoly& f, const PrimeField& F);

/// Moduli below this bound are handled by direct evaluation in poly_roots.
inline constexpr std::uint64_t kRootScanLimit = 4096;

}  // namespace porc
