#include "porc/orbit_counter.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "porc/errors.hpp"
#include "porc/lie_engine.hpp"

namespace porc {

Mat3 diagonal_action_matrix(const PrimeField& F, Residue u) { return mat3_diag(1, u % F.p(), F.inv(u % F.p())); }

Mat3 twisted_raw_matrix(const PrimeField& F, const TwistedParams& q) {
  const auto [d, e, a, b, c, f, u] = q;
  (void)u;
  auto m = [&](std::initializer_list<Residue> xs) {
    Residue r = 1;
    for (Residue x : xs) r = F.mul(r, x);
    return r;
  };
  Mat3 r{};
  r[0][0] = F.sub(F.neg(m({a, b, d, f})), m({a, f}));
  r[0][1] = F.sub(F.neg(m({a, c, d, f})), m({a, d, e, f}));
  r[0][2] = F.add(F.neg(m({a, b, d, e, f})), m({a, c, f}));
  r[1][0] = F.add(F.neg(m({a, b})), m({a, d}));
  r[1][1] = F.add(F.neg(m({a, c})), m({a, e}));
  r[1][2] = F.sub(m({a, b, e}), m({a, c, d}));
  r[2][0] = F.add(m({d, d, f}), f);
  r[2][1] = m({2, d, e, f});
  r[2][2] = F.sub(m({d, d, e, f}), m({e, f}));
  return r;
}

Mat3 twisted_simplified_matrix(const PrimeField& F, const TwistedParams& q) {
  const Residue d = q.d, e = q.e, u = q.u;
  const Residue d2 = F.mul(d, d);
  const Residue d4 = F.mul(d2, d2);
  const Residue s = F.add(d2, 1);             // d^2 + 1
  const Residue t = F.sub(d2, 1);             // d^2 - 1
  const Residue w = F.add(F.add(d4, F.mul(4, d2)), 3);  // d^4 + 4d^2 + 3
  const Residue uinv = F.inv(u);
  const Residue inv2 = F.inv(2);
  const Residue inv2d = F.inv(F.mul(2, d));
  Mat3 r{};
  r[0][0] = F.mul(F.mul(s, s), inv2d);
  r[0][1] = F.neg(F.mul(e, s));
  r[0][2] = F.mul(F.mul(e, w), inv2d);
  r[1][0] = F.div(F.mul(F.mul(F.mul(d, u), e), F.mul(s, s)), F.mul(2, t));
  r[1][1] = F.neg(F.div(F.mul(u, s), d));
  r[1][2] = F.neg(F.mul(F.mul(u, w), inv2));
  r[2][0] = F.mul(F.mul(2, uinv), e);
  r[2][1] = F.div(F.mul(F.mul(4, uinv), t), s);
  r[2][2] = F.div(F.mul(F.mul(2, uinv), F.mul(t, t)), F.mul(d, s));
  return r;
}

Mat3 twisted_action_matrix(const PrimeField& F, const TwistedParams& q) {
  const Mat3 raw = twisted_raw_matrix(F, q);
  if (raw != twisted_simplified_matrix(F, q)) {
    throw InvariantViolation("twisted_action_matrix: raw and simplified matrices differ at p=" + std::to_string(F.p()));
  }
  if (mat3_det(F, raw) == 0) throw InvariantViolation("twisted_action_matrix: singular action matrix");
  return raw;
}

Mat3 induced_action(const PrimeField& F, const Mat3& A) {
  Mat3 out{};
  for (std::size_t col = 0; col < 3; ++col) {
    std::array<Residue, 3> v{};
    v[col] = 1;
    const LieAlgebra D = build_descendant(F, v[0], v[1], v[2]);
    std::array<Vec, 6> y;
    for (std::size_t i = 0; i < 3; ++i) {
      y[i] = Vec(10, 0);
      y[3 + i] = Vec(10, 0);
      for (std::size_t j = 0; j < 3; ++j) {
        y[i][j] = A[i][j];
        y[3 + i][3 + j] = A[i][j];
      }
    }
    const Residue y10 = D.bracket(y[3], y[0], y[1])[9];
    if (y10 == 0) throw InvariantViolation("induced_action: [y4, y1, y2] vanishes");
    const Residue inv = F.inv(y10);
    out[0][col] = F.mul(D.bracket(y[4], y[3])[9], inv);
    out[1][col] = F.mul(D.bracket(y[5], y[3])[9], inv);
    out[2][col] = F.mul(D.bracket(y[5], y[4])[9], inv);
  }
  return out;
}

ActionGroup::ActionGroup(const PrimeField& F, std::vector<Mat3> S) : field_(F), s_(std::move(S)) {
  if (s_.empty()) throw std::invalid_argument("ActionGroup: empty matrix set");
  for (const auto& B : s_) {
    if (mat3_det(F, B) == 0) throw std::invalid_argument("ActionGroup: singular matrix");
  }
}

ActionGroup ActionGroup::for_prime(const PrimeField& F) {
  std::vector<Mat3> S;
  for (const auto& sm : special_matrices(F)) S.push_back(sm.matrix);
  return ActionGroup(F, std::move(S));
}

bool ActionGroup::torus_closed() const {
  const PrimeField& F = field_;
  auto proportional = [&](const Mat3& P, const Mat3& B) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (B[i][j] == 0) continue;
        return mat3_scale(F, F.div(P[i][j], B[i][j]), B) == P;
      }
    }
    return false;
  };
  for (const auto& B1 : s_) {
    for (const auto& B2 : s_) {
      const Mat3 P = mat3_mul(F, B1, B2);
      if (std::none_of(s_.begin(), s_.end(), [&](const Mat3& B3) { return proportional(P, B3); })) return false;
    }
  }
  return true;
}

std::uint64_t eigenvector_count(const Mat3& B, const PrimeField& F) {
  const std::uint64_t p = F.p();
  if (p >= (1ULL << 21)) throw std::overflow_error("eigenvector_count: p^3 does not fit in 64 bits");
  std::uint64_t total = 0;
  for (Residue t : poly_roots(mat3_charpoly(F, B), F)) {
    Mat3 shifted = B;
    for (int i = 0; i < 3; ++i) shifted[i][i] = F.sub(shifted[i][i], t);
    std::uint64_t space = 1;
    for (std::size_t k = mat3_rank(F, shifted); k < 3; ++k) space *= p;
    total += space - 1;
  }
  return total;
}

std::uint64_t burnside_dp(const PrimeField& F, const ActionGroup& G) {
  Wide numerator = G.order();
  for (const auto& B : G.S()) numerator += eigenvector_count(B, F);
  if (numerator % G.order() != 0) {
    throw InvariantViolation("burnside_dp: fixed-point total not divisible by |G| at p=" + std::to_string(F.p()));
  }
  return static_cast<std::uint64_t>(numerator / G.order());
}

std::uint64_t brute_orbits(const PrimeField& F, const ActionGroup& G, std::uint64_t p_max) {
  const std::uint64_t p = F.p();
  const std::uint64_t bound = std::min<std::uint64_t>(p_max, 199);
  if (p > bound) {
    throw SearchBoundExceeded("brute_orbits: p = " + std::to_string(p) + " exceeds the bound " + std::to_string(bound));
  }
  std::vector<Mat3> gens = G.S();
  const Residue g = F.primitive_root();
  gens.push_back(mat3_diag(g, g, g));

  const std::uint64_t n = p * p * p;
  std::vector<unsigned char> seen(n, 0);
  std::deque<std::uint64_t> queue;
  std::uint64_t orbits = 0;
  for (std::uint64_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++orbits;
    seen[start] = 1;
    queue.push_back(start);
    while (!queue.empty()) {
      const std::uint64_t code = queue.front();
      queue.pop_front();
      const std::array<Residue, 3> v{code / (p * p), (code / p) % p, code % p};
      for (const auto& M : gens) {
        const auto w = mat3_apply(F, M, v);
        const std::uint64_t next = (w[0] * p + w[1]) * p + w[2];
        if (!seen[next]) {
          seen[next] = 1;
          queue.push_back(next);
        }
      }
    }
  }
  return orbits;
}

std::uint64_t closed_form_dp(std::uint64_t p, const VpCount& vp) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("closed_form_dp: p must be a prime >= 5");
  if (vp.p != p) throw std::invalid_argument("closed_form_dp: V_p computed for a different prime");
  const Wide q = p;
  auto exact = [&](Wide num, Wide den) {
    if (num % den != 0) throw InvariantViolation("closed_form_dp: inexact division at p=" + std::to_string(p));
    return num / den;
  };
  Wide r = 0;
  switch (p % 12) {
    case 5:
      r = exact((q + 1) * (q + 1), 4) + 3;
      break;
    case 7:
      r = exact((q + 1) * (q + 1), 2) + 2;
      break;
    case 11:
      r = exact((q + 1) * (q + 1), 6) + exact(q + 1, 3) + 2;
      break;
    case 1:
      r = vp.positive() ? exact((q - 1) * (q - 1), 36) + exact(q - 1, 3) + 4 : exact((q + 1) * (q + 1), 4) + 3;
      break;
    default:
      throw std::invalid_argument("closed_form_dp: unexpected residue of p mod 12");
  }
  return static_cast<std::uint64_t>(r);
}

CharpolyCheck charpoly_checks(const PrimeField& F, const TwistedParams& q) {
  const std::uint64_t p = F.p();
  if (p % 12 != 1 && p % 12 != 11) throw std::invalid_argument("charpoly_checks: p must be 1 or 11 mod 12");
  const Mat3 B = twisted_action_matrix(F, q);
  const FpPoly cp = mat3_charpoly(F, B);
  const Residue d = q.d;
  const Residue d3 = F.mul(F.mul(d, d), d);
  const Residue inv3 = F.inv(3);
  const Residue t0 = F.mul(F.mul(4, inv3), F.add(d3, F.mul(3, d)));  // (4/3)(d^3 + 3d)
  auto cubic_with_roots = [&](Residue r1, Residue r2, Residue r3) {
    // (x - r1)(x - r2)(x - r3), lowest degree first
    const Residue e1 = F.add(F.add(r1, r2), r3);
    const Residue e2 = F.add(F.add(F.mul(r1, r2), F.mul(r1, r3)), F.mul(r2, r3));
    const Residue e3 = F.mul(F.mul(r1, r2), r3);
    return FpPoly(F, {F.neg(e3), e2, F.neg(e1), 1});
  };

  CharpolyCheck r;
  r.eigenvectors = eigenvector_count(B, F);
  const Residue u = q.u;
  if (u == 1) {
    const Residue c = F.mul(F.mul(256, inv3), F.sub(d3, d));
    r.charpoly = cp == FpPoly(F, {F.neg(c), 0, 0, 1});
    r.eigenvalue = cp.eval(F, F.neg(t0)) == 0;
    r.census = r.eigenvectors == (p % 12 == 11 ? p - 1 : 3 * p - 3);
  } else if (u == p - 1) {
    r.charpoly = cp == cubic_with_roots(t0, t0, F.neg(t0));
    Mat3 shifted = B;
    for (int i = 0; i < 3; ++i) shifted[i][i] = F.sub(shifted[i][i], t0);
    r.eigenvalue = mat3_rank(F, shifted) == 1;  // diagonalizable: the double eigenvalue has a plane
    r.census = r.eigenvectors == p * p + p - 2;
  } else {
    const Residue h = F.mul(F.mul(2, inv3), F.add(d3, F.mul(3, d)));  // (2/3)(d^3 + 3d)
    const Residue l1 = F.add(F.neg(F.mul(F.mul(4, d), u)), h);
    const Residue l2 = F.add(F.mul(4, d), F.mul(h, u));
    const Residue l3 = F.sub(F.neg(F.mul(4, d)), F.mul(h, u));
    r.charpoly = cp == cubic_with_roots(l1, l2, l3);
    r.eigenvalue = l1 != l2 && l1 != l3 && l2 != l3;
    r.census = r.eigenvectors == 3 * p - 3;
  }
  return r;
}

DpResult compute_dp(const PrimeField& F, std::uint64_t brute_max) {
  DpResult r;
  r.p = F.p();
  r.vp = count_vp(F);
  const ActionGroup G = ActionGroup::for_prime(F);
  r.s_size = G.S().size();
  r.group_order = G.order();
  r.closed_form = closed_form_dp(F.p(), r.vp);
  r.burnside = burnside_dp(F, G);
  if (F.p() <= brute_max) r.brute = brute_orbits(F, G, brute_max);
  return r;
}

}  // namespace porc
