#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "porc/finite_field.hpp"

namespace porc {

/// p = a^2 - 12 b^2 with the smallest positive a.
struct NormFormRep {
  std::uint64_t p = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

/// p = a^2 + b^2 with a odd and a + ib = 1 mod (2 + 2i). The sign of b is
/// fixed to b >= 0; conjugation does not change a.
struct GaussRep {
  std::uint64_t p = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
};

/// Number of (x, y) in F_p^2 with x^4 + 6x^2 - 3 = 0 and y^2 = x^3 - x.
struct VpCount {
  std::uint64_t p = 0;
  unsigned count = 0;
  bool positive() const noexcept { return count > 0; }
};

/// x^4 + 6x^2 - 3
FpPoly quartic_poly(const PrimeField& F);
/// y^8 + 360y^4 - 48
FpPoly octic_poly(const PrimeField& F);
/// z^4 + 360z^2 - 48
FpPoly quartic360_poly(const PrimeField& F);

VpCount count_vp(const PrimeField& F);
bool quartic_has_root(const PrimeField& F);
bool octic_has_root(const PrimeField& F);
bool quartic360_has_root(const PrimeField& F);

struct OcticEquivalence {
  bool vp_positive = false;
  bool octic = false;
  /// Every octic root y gives x = -(y^6 + 388 y^2)/208 on both curves.
  /// Vacuously true when no roots exist or when 208 = 0 mod p.
  bool witness_roundtrip_ok = true;
  std::size_t roots_checked = 0;
  bool equivalent() const noexcept { return vp_positive == octic; }
};
OcticEquivalence octic_equivalence(const PrimeField& F);

/// Requires p = 1 mod 12. Throws std::invalid_argument otherwise and
/// InvariantViolation if no representation exists with b <= p.
NormFormRep represent_norm_form(std::uint64_t p);

struct NormFormCriterion {
  NormFormRep rep;
  Residue a_mod3 = 0;
  bool quartic360 = false;
  bool consistent = false;  // (a = 1 mod 3) <=> quartic360
};
NormFormCriterion norm_form_criterion(std::uint64_t p);

/// Affine points on y^2 = x^3 - x over F_p.
std::uint64_t ec_count_naive(const PrimeField& F);

/// Cornacchia plus normalisation. Requires p = 1 mod 4.
GaussRep gauss_representation(std::uint64_t p);

/// p - 2a for the normalised Gaussian representation. Requires p = 1 mod 4.
std::uint64_t ec_count_formula(std::uint64_t p);

struct DensityScan {
  std::uint64_t max = 0;
  std::uint64_t n_primes = 0;     // all primes 5 <= p <= max
  std::uint64_t n_1mod12 = 0;
  std::uint64_t n_quartic = 0;    // x^4 + 6x^2 - 3 has a root
  std::uint64_t n_both = 0;       // V_p > 0
  double frac_quartic = 0.0;      // n_quartic / n_1mod12
  double frac_both = 0.0;         // n_both / n_1mod12
  double frac_both_overall = 0.0; // n_both / n_primes
};
/// Requires max >= 100.
DensityScan density_scan(std::uint64_t max);

struct SubcongruenceClass {
  std::uint64_t c = 0;
  std::optional<std::uint64_t> witness_vp_positive;
  std::optional<std::uint64_t> witness_vp_zero;
  bool has_both() const noexcept { return witness_vp_positive && witness_vp_zero; }
};
/// Classes c mod 12d with c = 1 mod 12 and gcd(c, 12d) = 1, each with the
/// smallest prime p <= max in the class having V_p > 0 and V_p = 0.
std::vector<SubcongruenceClass> subcongruence_scan(std::uint64_t d, std::uint64_t max);

}  // namespace porc
