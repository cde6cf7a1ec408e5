#include "porc/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace porc {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<Wide>(a) * b) % m);
}

std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = powmod64(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod64(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is exact below 3.3 * 10^24.
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i) {
    if (!composite[i]) out.push_back(i);
  }
  return out;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 5 || p >= (std::uint64_t{1} << 62) || !is_prime(p)) {
    throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                " is not a prime in [5, 2^62)");
  }
  for (Residue z = 2;; ++z) {
    if (legendre(z) == -1) {
      non_residue_ = z;
      break;
    }
  }
}

Residue PrimeField::from_int(std::int64_t v) const noexcept {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<Residue>(r);
}

Residue PrimeField::pow(Residue base, std::uint64_t exp) const noexcept {
  return powmod64(base, exp, p_);
}

Residue PrimeField::inv(Residue a) const {
  a %= p_;
  if (a == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

int PrimeField::legendre(Residue a) const noexcept {
  a %= p_;
  if (a == 0) return 0;
  return pow(a, (p_ - 1) / 2) == 1 ? 1 : -1;
}

std::vector<Residue> PrimeField::sqrt(Residue a) const {
  a %= p_;
  if (a == 0) return {0};
  if (legendre(a) != 1) return {};

  std::uint64_t q = p_ - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Residue c = pow(non_residue_, q);
  Residue t = pow(a, q);
  Residue r = pow(a, (q + 1) / 2);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    Residue t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    Residue b = c;
    for (unsigned k = 0; k + i + 1 < m; ++k) b = mul(b, b);
    r = mul(r, b);
    c = mul(b, b);
    t = mul(t, c);
    m = i;
  }
  const Residue other = neg(r);
  return {std::min(r, other), std::max(r, other)};
}

Residue PrimeField::primitive_root() const {
  std::vector<std::uint64_t> primes;
  std::uint64_t m = p_ - 1;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    primes.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) primes.push_back(m);
  for (Residue g = 2;; ++g) {
    if (std::all_of(primes.begin(), primes.end(), [&](std::uint64_t q) { return pow(g, (p_ - 1) / q) != 1; })) {
      return g;
    }
  }
}

std::vector<Residue> PrimeField::roots_of_unity(unsigned n) const {
  std::vector<Residue> out;
  if (n == 0) return out;
  const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(n), p_ - 1);
  // A generator of the order-g subgroup: z^((p-1)/g) for z running upward
  // until the image has full order g.
  for (Residue z = 2; out.empty(); ++z) {
    const Residue w = pow(z, (p_ - 1) / g);
    bool full = true;
    for (std::uint64_t d = 1; d < g; ++d) {
      if (g % d == 0 && pow(w, d) == 1) {
        full = false;
        break;
      }
    }
    if (!full) continue;
    Residue x = 1;
    for (std::uint64_t k = 0; k < g; ++k) {
      out.push_back(x);
      x = mul(x, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Residue fp_inv(Residue a, const PrimeField& F) { return F.inv(a); }
int legendre(Residue a, const PrimeField& F) { return F.legendre(a); }
std::vector<Residue> sqrt_mod(Residue a, const PrimeField& F) { return F.sqrt(a); }

FpPoly::FpPoly(const PrimeField& F, std::vector<Residue> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= F.p();
  normalize();
}

FpPoly FpPoly::from_ints(const PrimeField& F, std::initializer_list<std::int64_t> coeffs) {
  std::vector<Residue> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(F.from_int(v));
  return FpPoly(F, std::move(c));
}

void FpPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Residue FpPoly::eval(const PrimeField& F, Residue x) const noexcept {
  Residue acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

namespace {

using Coeffs = std::vector<Residue>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs poly_sub(const PrimeField& F, Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

Coeffs poly_mul(const PrimeField& F, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

// a = q*b + r; b must be nonzero.
void poly_divmod(const PrimeField& F, Coeffs a, const Coeffs& b, Coeffs* q, Coeffs* r) {
  trim(a);
  const Residue lead_inv = F.inv(b.back());
  Coeffs quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Residue c = F.mul(a.back(), lead_inv);
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    trim(a);
  }
  if (q) {
    trim(quot);
    *q = std::move(quot);
  }
  if (r) *r = std::move(a);
}

Coeffs poly_mod(const PrimeField& F, const Coeffs& a, const Coeffs& m) {
  Coeffs r;
  poly_divmod(F, a, m, nullptr, &r);
  return r;
}

Coeffs make_monic(const PrimeField& F, Coeffs a) {
  if (a.empty()) return a;
  const Residue li = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, li);
  return a;
}

Coeffs poly_gcd(const PrimeField& F, Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, std::move(a));
}

// base^e mod m
Coeffs poly_powmod(const PrimeField& F, Coeffs base, std::uint64_t e, const Coeffs& m) {
  Coeffs result{1};
  base = poly_mod(F, base, m);
  while (e != 0) {
    if (e & 1) result = poly_mod(F, poly_mul(F, result, base), m);
    base = poly_mod(F, poly_mul(F, base, base), m);
    e >>= 1;
  }
  return result;
}

// g is monic, squarefree and a product of distinct linear factors.
void split_linear(const PrimeField& F, const Coeffs& g, std::vector<Residue>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(F.neg(g[0]));
    return;
  }
  // Deterministic equal-degree splitting: try shifts x + delta in order.
  for (Residue delta = 0; delta < F.p(); ++delta) {
    Coeffs h = poly_powmod(F, Coeffs{delta, 1}, (F.p() - 1) / 2, g);
    h = poly_sub(F, h, Coeffs{1});
    Coeffs d = poly_gcd(F, g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      Coeffs q;
      poly_divmod(F, g, d, &q, nullptr);
      split_linear(F, d, out);
      split_linear(F, make_monic(F, q), out);
      return;
    }
  }
  throw InvariantViolation("split_linear: no splitting shift found");
}

}  // namespace

std::vector<Residue> poly_roots_splitting(const FpPoly& f, const PrimeField& F) {
  if (f.is_zero()) throw std::invalid_argument("poly_roots: zero polynomial");
  std::vector<Residue> out;
  const Coeffs fm = make_monic(F, f.coeffs());
  if (fm.size() <= 1) return out;
  // gcd(f, x^p - x) collects the distinct linear factors.
  Coeffs xp = poly_powmod(F, Coeffs{0, 1}, F.p(), fm);
  xp = poly_sub(F, xp, Coeffs{0, 1});
  const Coeffs g = poly_gcd(F, fm, xp);
  split_linear(F, g, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Residue> poly_roots(const FpPoly& f, const PrimeField& F) {
  if (f.is_zero()) throw std::invalid_argument("poly_roots: zero polynomial");
  if (F.p() >= kRootScanLimit) return poly_roots_splitting(f, F);
  std::vector<Residue> out;
  for (Residue x = 0; x < F.p(); ++x) {
    if (f.eval(F, x) == 0) out.push_back(x);
  }
  return out;
}

}  // namespace porc
