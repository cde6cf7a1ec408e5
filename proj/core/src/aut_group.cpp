#include "porc/aut_group.hpp"

#include <array>
#include <memory>
#include <stdexcept>
#include <string>

#include "porc/diophantine.hpp"
#include "porc/errors.hpp"
#include "porc/orbit_counter.hpp"

namespace porc {

namespace {

bool mat3_is_zero(const Mat3& m) {
  for (const auto& row : m) {
    for (Residue x : row) {
      if (x != 0) return false;
    }
  }
  return true;
}

std::string res(Residue r) { return std::to_string(r); }

}  // namespace

bool BlockAut::is_block_diagonal() const noexcept { return mat3_is_zero(top_right) && mat3_is_zero(bottom_left); }

Matrix BlockAut::v_matrix() const {
  Matrix m(6, Vec(6, 0));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m[i][j] = top_left[i][j];
      m[i][3 + j] = top_right[i][j];
      m[3 + i][j] = bottom_left[i][j];
      m[3 + i][3 + j] = bottom_right[i][j];
    }
  }
  return m;
}

Matrix BlockAut::generator_images(std::size_t dim) const {
  if (dim < 6) throw std::invalid_argument("generator_images: dimension below 6");
  Matrix v = v_matrix();
  for (auto& row : v) row.resize(dim, 0);
  return v;
}

BlockAut block_diagonal_aut(const Mat3& A, const Mat3& B, std::string provenance) {
  BlockAut m;
  m.top_left = A;
  m.bottom_right = B;
  m.provenance = std::move(provenance);
  return m;
}

BlockAut gl2_block_aut(const PrimeField& F, Residue alpha, Residue beta, Residue gamma, Residue delta) {
  alpha %= F.p();
  beta %= F.p();
  gamma %= F.p();
  delta %= F.p();
  if (F.sub(F.mul(alpha, delta), F.mul(beta, gamma)) == 0) {
    throw std::invalid_argument("gl2_block_aut: singular 2x2 matrix");
  }
  BlockAut m;
  m.top_left = mat3_diag(alpha, alpha, alpha);
  m.top_right = mat3_diag(beta, beta, beta);
  m.bottom_left = mat3_diag(gamma, gamma, gamma);
  m.bottom_right = mat3_diag(delta, delta, delta);
  m.provenance = "gl2(" + res(alpha) + "," + res(beta) + "," + res(gamma) + "," + res(delta) + ")";
  if (!verify_automorphism(build_Lp(F), m)) throw InvariantViolation("gl2_block_aut: " + m.provenance + " rejected");
  return m;
}

BlockAut diag_aut(const PrimeField& F, Residue u) {
  u %= F.p();
  if (F.pow(u, 4) != 1) throw std::invalid_argument("diag_aut: u^4 != 1");
  const Mat3 A = mat3_diag(u, F.inv(u), 1);
  return block_diagonal_aut(A, A, "diag(" + res(u) + ")");
}

Mat3 twisted_block(const PrimeField& F, const TwistedParams& q) {
  Mat3 m{};
  m[0] = {q.a, F.mul(q.a, q.b), F.mul(q.a, q.c)};
  m[1] = {F.mul(q.d, q.f), F.neg(q.f), F.neg(F.mul(F.mul(q.d, q.e), q.f))};
  m[2] = {1, q.d, q.e};
  return m;
}

BlockAut twisted_aut(const PrimeField& F, const TwistedParams& q) {
  const Mat3 A = twisted_block(F, q);
  return block_diagonal_aut(A, A, "twisted(" + res(q.d) + "," + res(q.e) + "," + res(q.u) + ")");
}

bool defining_equations_hold(const PrimeField& F, const TwistedParams& q) {
  const auto [d, e, a, b, c, f, u] = q;
  (void)u;
  auto m = [&](std::initializer_list<Residue> xs) {
    Residue r = 1;
    for (Residue x : xs) r = F.mul(r, x);
    return r;
  };
  const Residue a2 = m({a, a});
  const Residue f2 = m({f, f});
  const Residue d2 = m({d, d});
  const Residue e2 = m({e, e});
  const Residue two = 2 % F.p();
  const bool eq1 = m({a2, F.add(1, m({b, b}))}) == m({f2, F.add(1, d2)});
  const bool eq2 = m({a2, F.add(m({two, b}), m({c, c}))}) == m({f2, F.sub(m({d2, e2}), m({two, d}))});
  const bool eq3 = m({a2, c}) == F.neg(m({d2, e, f2}));
  const bool eq4 = m({a, f, F.sub(d, b)}) == F.add(1, d2);
  const bool eq5 = m({a, f, F.sub(F.sub(m({b, d}), m({c, d, e})), 1)}) == F.add(m({two, d}), e2);
  const bool eq6 = m({a, d, f, F.sub(c, e)}) == m({two, e});
  return eq1 && eq2 && eq3 && eq4 && eq5 && eq6;
}

std::vector<TwistedParams> solve_twisted(const PrimeField& F) {
  std::vector<TwistedParams> out;
  const auto units = F.roots_of_unity(4);
  const Residue quarter = F.inv(4);
  for (Residue d : poly_roots(quartic_poly(F), F)) {
    const Residue d2 = F.mul(d, d);
    const Residue d2m1 = F.sub(d2, 1);
    for (Residue e : F.sqrt(F.div(d2m1, d))) {
      for (Residue u : units) {
        TwistedParams q;
        q.d = d;
        q.e = e;
        q.u = u;
        q.a = F.mul(F.mul(F.mul(u, F.add(d2, 1)), e), quarter);
        q.b = F.div(F.add(F.mul(3, d), F.mul(d2, d)), F.sub(1, d2));
        q.c = F.div(F.mul(e, F.add(d2, 3)), d2m1);
        q.f = F.div(d2m1, F.mul(F.mul(2, d), q.a));
        if (!defining_equations_hold(F, q)) {
          throw InvariantViolation("solve_twisted: equations fail at p=" + std::to_string(F.p()) + " d=" + res(d) +
                                   " e=" + res(e) + " u=" + res(u));
        }
        out.push_back(q);
      }
    }
  }
  return out;
}

IdentityCheck identity_checks(const PrimeField& F, const TwistedParams& q) {
  IdentityCheck r;
  const Residue d = q.d;
  const Residue d2 = F.mul(d, d);
  const Residue quartic = F.sub(F.add(F.mul(d2, d2), F.mul(6, d2)), 3);
  const Residue lhs = F.add(F.mul(4, F.sub(1, d2)), quartic);
  const Residue sq = F.add(d2, 1);
  // With quartic(d) = 0 this says 4(1 - d^2) is the square (d^2 + 1)^2.
  r.square_identity = quartic == 0 && lhs == F.mul(sq, sq) && lhs == F.add(F.add(F.mul(d2, d2), F.mul(2, d2)), 1);
  const auto i = F.sqrt(F.p() - 1);
  if (!i.empty()) {
    bool all = true;
    const Residue cube_term = F.add(F.mul(d2, d), F.mul(5, d));
    for (Residue u : i) {
      const Residue t = F.mul(F.mul(F.inv(4), F.add(1, u)), cube_term);
      all = all && F.pow(t, 4) == F.from_int(-3);
    }
    r.fourth_root_minus3 = all;
  }
  return r;
}

std::vector<SpecialMatrix> special_matrices(const PrimeField& F) {
  std::vector<SpecialMatrix> out;
  for (Residue u : F.roots_of_unity(4)) {
    out.push_back(SpecialMatrix{diagonal_action_matrix(F, u), SpecialKind::kDiagonal, u, std::nullopt});
  }
  for (const auto& q : solve_twisted(F)) {
    out.push_back(SpecialMatrix{twisted_action_matrix(F, q), SpecialKind::kTwisted, q.u, q});
  }
  return out;
}

bool verify_automorphism(const LieAlgebra& L, const BlockAut& m) {
  if (L.dim() != 9) return false;
  const PrimeField& F = L.field();
  const Matrix images = extend_generator_images(L, m.generator_images(9), 9);
  if (rank(F, images, 9) != 9) return false;
  LieMap phi(std::make_shared<const LieAlgebra>(build_Lp(F)), std::make_shared<const LieAlgebra>(L), images);
  return phi.is_homomorphism();
}

BlockAut compose(const PrimeField& F, const BlockAut& first, const BlockAut& second) {
  const Matrix s = second.v_matrix();
  const Matrix f = first.v_matrix();
  BlockAut out;
  for (int i = 0; i < 6; ++i) {
    for (int k = 0; k < 6; ++k) {
      Residue acc = 0;
      for (int j = 0; j < 6; ++j) acc = F.add(acc, F.mul(s[i][j], f[j][k]));
      Mat3& block = i < 3 ? (k < 3 ? out.top_left : out.top_right) : (k < 3 ? out.bottom_left : out.bottom_right);
      block[i % 3][k % 3] = acc;
    }
  }
  out.provenance = "compose(" + first.provenance + "," + second.provenance + ")";
  return out;
}

// ---------------------------------------------------------------------------
// Brute force over H

namespace {

// Small-modulus arithmetic on plain ints; p <= 199 here.
struct SmallField {
  int p;
  std::vector<int> inverse;
  explicit SmallField(int modulus) : p(modulus), inverse(static_cast<std::size_t>(modulus), 0) {
    for (int x = 1; x < p; ++x) {
      for (int y = 1; y < p; ++y) {
        if (x * y % p == 1) inverse[static_cast<std::size_t>(x)] = y;
      }
    }
  }
};

using Vec3 = std::array<int, 3>;
using Mat3i = std::array<Vec3, 3>;

int det3(const SmallField& K, const Mat3i& m) {
  const long d = static_cast<long>(m[0][0]) * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                 static_cast<long>(m[0][1]) * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 static_cast<long>(m[0][2]) * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return static_cast<int>(((d % K.p) + K.p) % K.p);
}

// Nullspace of a rows x 9 system over K.
std::vector<std::array<int, 9>> nullspace9(const SmallField& K, std::vector<std::array<int, 9>> rows) {
  std::array<int, 9> pivot_row{};
  pivot_row.fill(-1);
  std::size_t next = 0;
  for (int col = 0; col < 9 && next < rows.size(); ++col) {
    std::size_t piv = next;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[next]);
    const int inv = K.inverse[static_cast<std::size_t>(rows[next][col])];
    for (int& x : rows[next]) x = x * inv % K.p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col] == 0) continue;
      const int c = rows[r][col];
      for (int k = 0; k < 9; ++k) rows[r][k] = ((rows[r][k] - c * rows[next][k]) % K.p + K.p) % K.p;
    }
    pivot_row[col] = static_cast<int>(next);
    ++next;
  }
  std::vector<std::array<int, 9>> basis;
  for (int free = 0; free < 9; ++free) {
    if (pivot_row[free] >= 0) continue;
    std::array<int, 9> v{};
    v[free] = 1;
    for (int col = 0; col < 9; ++col) {
      if (pivot_row[col] >= 0) v[col] = (K.p - rows[static_cast<std::size_t>(pivot_row[col])][free]) % K.p;
    }
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

BruteForceH brute_force_H(const PrimeField& F, std::uint64_t p_max) {
  if (F.p() > p_max || F.p() > 199) {
    throw SearchBoundExceeded("brute_force_H: p = " + std::to_string(F.p()) + " exceeds the bound " +
                              std::to_string(std::min<std::uint64_t>(p_max, 199)));
  }
  const SmallField K(static_cast<int>(F.p()));
  const int p = K.p;
  const LieAlgebra L = build_Lp(F);

  // T[m][l] = [x_{4+m}, x_{1+l}] in coordinates of x7, x8, x9.
  std::array<std::array<Vec3, 3>, 3> T{};
  for (int m = 0; m < 3; ++m) {
    for (int l = 0; l < 3; ++l) {
      const Vec& b = L.bracket_basis(static_cast<std::size_t>(3 + m), static_cast<std::size_t>(l));
      for (int t = 0; t < 3; ++t) T[m][l][t] = static_cast<int>(b[static_cast<std::size_t>(6 + t)]);
    }
  }
  // W(w)[m] = sum_l w_l T[m][l]; S_kj = sum_m B_km W(A_j)[m].
  auto W = [&](const Vec3& w) {
    Mat3i out{};
    for (int m = 0; m < 3; ++m) {
      for (int t = 0; t < 3; ++t) {
        int acc = 0;
        for (int l = 0; l < 3; ++l) acc += w[l] * T[m][l][t];
        out[m][t] = acc % p;
      }
    }
    return out;
  };

  std::vector<Vec3> all_nonzero;
  std::vector<Vec3> singular;  // rows whose W is singular: centralizer of dimension 4
  for (int x = 0; x < p; ++x) {
    for (int y = 0; y < p; ++y) {
      for (int z = 0; z < p; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        const Vec3 w{x, y, z};
        all_nonzero.push_back(w);
        if (det3(K, W(w)) == 0) singular.push_back(w);
      }
    }
  }

  BruteForceH result;
  for (const Vec3& r1 : singular) {
    for (const Vec3& r2 : singular) {
      for (const Vec3& r0 : all_nonzero) {
        const Mat3i A{r0, r1, r2};
        if (det3(K, A) == 0) continue;
        const std::array<Mat3i, 3> Wj{W(r0), W(r1), W(r2)};
        // Equation rows: coefficient of B_km in S_kj, per coordinate t.
        std::vector<std::array<int, 9>> rows;
        auto add_relation = [&](int k1, int j1, int k2, int j2) {  // S_{k1 j1} - S_{k2 j2} = 0
          for (int t = 0; t < 3; ++t) {
            std::array<int, 9> row{};
            for (int m = 0; m < 3; ++m) {
              row[3 * k1 + m] = (row[3 * k1 + m] + Wj[j1][m][t]) % p;
              if (k2 >= 0) row[3 * k2 + m] = (row[3 * k2 + m] + p - Wj[j2][m][t]) % p;
            }
            rows.push_back(row);
          }
        };
        add_relation(1, 2, -1, -1);  // [x5, x3] = 0
        add_relation(2, 1, -1, -1);  // [x6, x2] = 0
        add_relation(1, 0, 0, 1);    // [x5, x1] = [x4, x2]
        add_relation(1, 1, 0, 0);    // [x5, x2] = [x4, x1]
        add_relation(2, 0, 0, 2);    // [x6, x1] = [x4, x3]
        add_relation(2, 2, 0, 1);    // [x6, x3] = [x4, x2]
        const auto basis = nullspace9(K, rows);
        if (basis.empty()) continue;
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < basis.size(); ++i) combos *= static_cast<std::uint64_t>(p);
        for (std::uint64_t code = 1; code < combos; ++code) {
          std::array<int, 9> b{};
          std::uint64_t rest = code;
          for (const auto& v : basis) {
            const int c = static_cast<int>(rest % static_cast<std::uint64_t>(p));
            rest /= static_cast<std::uint64_t>(p);
            for (int i = 0; i < 9; ++i) b[i] = (b[i] + c * v[i]) % p;
          }
          const Mat3i B{Vec3{b[0], b[1], b[2]}, Vec3{b[3], b[4], b[5]}, Vec3{b[6], b[7], b[8]}};
          if (det3(K, B) == 0) continue;
          // Images of x7, x8, x9 must be independent.
          Mat3i derived{};
          for (int j = 0; j < 3; ++j) {
            for (int t = 0; t < 3; ++t) {
              int acc = 0;
              for (int m = 0; m < 3; ++m) acc += B[0][m] * Wj[j][m][t];
              derived[j][t] = acc % p;
            }
          }
          if (det3(K, derived) == 0) continue;

          Mat3 Am{}, Bm{};
          for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
              Am[i][j] = static_cast<Residue>(A[i][j]);
              Bm[i][j] = static_cast<Residue>(B[i][j]);
            }
          }
          BlockAut m = block_diagonal_aut(Am, Bm, "brute");
          if (!verify_automorphism(L, m)) {
            throw InvariantViolation("brute_force_H: linear solution is not an automorphism");
          }
          bool scalar = false;
          for (Residue lambda = 1; lambda < F.p() && !scalar; ++lambda) {
            scalar = mat3_scale(F, lambda, Am) == Bm;
          }
          result.all_scalar = result.all_scalar && scalar;
          result.elements.push_back(std::move(m));
        }
      }
    }
  }
  result.count = result.elements.size();
  return result;
}

}  // namespace porc
