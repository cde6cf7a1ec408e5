#include "porc/diophantine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace porc {

namespace {

// floor(sqrt(n)) for n < 2^126
Wide isqrt128(Wide n) {
  if (n == 0) return 0;
  auto x = static_cast<Wide>(std::sqrt(static_cast<long double>(n)));
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

std::uint64_t isqrt64(std::uint64_t n) { return static_cast<std::uint64_t>(isqrt128(n)); }

unsigned vp_from_quartic_roots(const PrimeField& F, const std::vector<Residue>& roots) {
  unsigned count = 0;
  for (Residue x : roots) {
    const Residue rhs = F.sub(F.mul(F.mul(x, x), x), x);
    switch (F.legendre(rhs)) {
      case 1: count += 2; break;
      case 0: count += 1; break;
      default: break;
    }
  }
  return count;
}

}  // namespace

FpPoly quartic_poly(const PrimeField& F) { return FpPoly::from_ints(F, {-3, 0, 6, 0, 1}); }
FpPoly octic_poly(const PrimeField& F) { return FpPoly::from_ints(F, {-48, 0, 0, 0, 360, 0, 0, 0, 1}); }
FpPoly quartic360_poly(const PrimeField& F) { return FpPoly::from_ints(F, {-48, 0, 360, 0, 1}); }

VpCount count_vp(const PrimeField& F) {
  return VpCount{F.p(), vp_from_quartic_roots(F, poly_roots(quartic_poly(F), F))};
}

bool quartic_has_root(const PrimeField& F) { return !poly_roots(quartic_poly(F), F).empty(); }
bool octic_has_root(const PrimeField& F) { return !poly_roots(octic_poly(F), F).empty(); }
bool quartic360_has_root(const PrimeField& F) { return !poly_roots(quartic360_poly(F), F).empty(); }

OcticEquivalence octic_equivalence(const PrimeField& F) {
  OcticEquivalence r;
  r.vp_positive = count_vp(F).positive();
  const auto ys = poly_roots(octic_poly(F), F);
  r.octic = !ys.empty();

  const Residue c208 = F.from_int(208);
  if (c208 == 0) return r;  // p = 13: back-substitution undefined, octic rootless anyway
  const Residue minus_inv208 = F.neg(F.inv(c208));
  const FpPoly quartic = quartic_poly(F);
  for (Residue y : ys) {
    const Residue y2 = F.mul(y, y);
    const Residue y6 = F.mul(F.mul(y2, y2), y2);
    const Residue x = F.mul(minus_inv208, F.add(y6, F.mul(F.from_int(388), y2)));
    const bool on_quartic = quartic.eval(F, x) == 0;
    const bool on_curve = y2 == F.sub(F.mul(F.mul(x, x), x), x);
    r.witness_roundtrip_ok = r.witness_roundtrip_ok && on_quartic && on_curve;
    ++r.roots_checked;
  }
  return r;
}

NormFormRep represent_norm_form(std::uint64_t p) {
  if (p % 12 != 1) {
    throw std::invalid_argument("represent_norm_form: " + std::to_string(p) + " is not 1 mod 12");
  }
  for (std::uint64_t b = 0; b <= p; ++b) {
    const Wide s = static_cast<Wide>(p) +
                                12 * static_cast<Wide>(b) * b;
    const Wide a = isqrt128(s);
    if (a * a == s) {
      NormFormRep rep{p, static_cast<std::uint64_t>(a), b};
      if (static_cast<Wide>(rep.a) * rep.a !=
          p + 12 * static_cast<Wide>(rep.b) * rep.b) {
        throw InvariantViolation("represent_norm_form: a^2 - 12b^2 != p");
      }
      return rep;
    }
  }
  throw InvariantViolation("represent_norm_form: no representation of " + std::to_string(p) +
                           " with b <= p");
}

NormFormCriterion norm_form_criterion(std::uint64_t p) {
  NormFormCriterion r;
  r.rep = represent_norm_form(p);
  r.a_mod3 = r.rep.a % 3;
  r.quartic360 = quartic360_has_root(PrimeField(p));
  r.consistent = (r.a_mod3 == 1) == r.quartic360;
  return r;
}

std::uint64_t ec_count_naive(const PrimeField& F) {
  std::uint64_t n = 0;
  for (Residue x = 0; x < F.p(); ++x) {
    const Residue rhs = F.sub(F.mul(F.mul(x, x), x), x);
    n += static_cast<std::uint64_t>(1 + F.legendre(rhs));
  }
  return n;
}

GaussRep gauss_representation(std::uint64_t p) {
  if (p % 4 != 1) {
    throw std::invalid_argument("gauss_representation: " + std::to_string(p) + " is not 1 mod 4");
  }
  const PrimeField F(p);
  const auto roots = F.sqrt(p - 1);
  if (roots.empty()) throw InvariantViolation("gauss_representation: -1 is not a square");

  // Cornacchia: Euclid on (p, r) until the remainder drops below sqrt(p).
  const std::uint64_t bound = isqrt64(p);
  std::uint64_t r0 = p;
  std::uint64_t r1 = roots.front();
  while (r1 > bound) {
    const std::uint64_t t = r0 % r1;
    r0 = r1;
    r1 = t;
  }
  const std::uint64_t x = r1;
  const std::uint64_t y2 = p - x * x;
  const std::uint64_t y = isqrt64(y2);
  if (y * y != y2) throw InvariantViolation("gauss_representation: Cornacchia failed");

  // Normalise: among the 8 associates/conjugates keep a odd with
  // ((a - 1) + ib) divisible by 2 + 2i, i.e. ((a-1) + ib)(2 - 2i) = 0 mod 8.
  const auto sx = static_cast<std::int64_t>(x);
  const auto sy = static_cast<std::int64_t>(y);
  const std::array<std::array<std::int64_t, 2>, 8> variants{{
      {sx, sy}, {sx, -sy}, {-sx, sy}, {-sx, -sy}, {sy, sx}, {sy, -sx}, {-sy, sx}, {-sy, -sx}}};
  std::vector<std::array<std::int64_t, 2>> survivors;
  for (const auto& [a, b] : variants) {
    if ((a % 2 + 2) % 2 != 1) continue;
    const std::int64_t re = 2 * (a - 1) + 2 * b;
    const std::int64_t im = 2 * b - 2 * (a - 1);
    if (re % 8 == 0 && im % 8 == 0) survivors.push_back({a, b});
  }
  if (survivors.empty()) throw InvariantViolation("gauss_representation: no normalised associate");
  const std::int64_t a = survivors.front()[0];
  for (const auto& s : survivors) {
    if (s[0] != a || std::llabs(s[1]) != std::llabs(survivors.front()[1])) {
      throw InvariantViolation("gauss_representation: normalisation not unique up to conjugation");
    }
  }
  return GaussRep{p, a, std::llabs(survivors.front()[1])};
}

std::uint64_t ec_count_formula(std::uint64_t p) {
  const GaussRep g = gauss_representation(p);
  const std::int64_t n = static_cast<std::int64_t>(p) - 2 * g.a;
  if (n < 0) throw InvariantViolation("ec_count_formula: negative point count");
  return static_cast<std::uint64_t>(n);
}

DensityScan density_scan(std::uint64_t max) {
  if (max < 100) throw std::invalid_argument("density_scan: max must be at least 100");
  DensityScan s;
  s.max = max;
  for (std::uint64_t p : primes_in_range(5, max)) {
    ++s.n_primes;
    if (p % 12 != 1) continue;
    ++s.n_1mod12;
    const PrimeField F(p);
    const auto roots = poly_roots(quartic_poly(F), F);
    if (roots.empty()) continue;
    ++s.n_quartic;
    if (vp_from_quartic_roots(F, roots) > 0) ++s.n_both;
  }
  if (s.n_1mod12 > 0) {
    s.frac_quartic = static_cast<double>(s.n_quartic) / static_cast<double>(s.n_1mod12);
    s.frac_both = static_cast<double>(s.n_both) / static_cast<double>(s.n_1mod12);
  }
  if (s.n_primes > 0) s.frac_both_overall = static_cast<double>(s.n_both) / static_cast<double>(s.n_primes);
  return s;
}

std::vector<SubcongruenceClass> subcongruence_scan(std::uint64_t d, std::uint64_t max) {
  if (d == 0) throw std::invalid_argument("subcongruence_scan: d must be positive");
  const std::uint64_t mod = 12 * d;
  std::vector<SubcongruenceClass> classes;
  std::vector<long> slot(mod, -1);
  for (std::uint64_t c = 1; c < mod; c += 12) {
    if (std::gcd(c, mod) != 1) continue;
    slot[c] = static_cast<long>(classes.size());
    classes.push_back(SubcongruenceClass{c, std::nullopt, std::nullopt});
  }
  std::size_t open = 2 * classes.size();
  for (std::uint64_t p : primes_in_range(5, max)) {
    if (open == 0) break;
    if (p % 12 != 1) continue;
    const long k = slot[p % mod];
    if (k < 0) continue;
    auto& cls = classes[static_cast<std::size_t>(k)];
    if (cls.has_both()) continue;
    const bool positive = count_vp(PrimeField(p)).positive();
    auto& w = positive ? cls.witness_vp_positive : cls.witness_vp_zero;
    if (!w) {
      w = p;
      --open;
    }
  }
  return classes;
}

}  // namespace porc
