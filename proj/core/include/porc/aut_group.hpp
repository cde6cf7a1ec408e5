#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "porc/finite_field.hpp"
#include "porc/lie_engine.hpp"
#include "porc/linalg.hpp"

namespace porc {

/// Linear map on V = span(x1..x6) preserving nothing a priori. Row i of
/// each block is the image of one basis vector:
///   (x1,x2,x3) -> top_left (x1,x2,x3) + top_right (x4,x5,x6)
///   (x4,x5,x6) -> bottom_left (x1,x2,x3) + bottom_right (x4,x5,x6)
/// Elements of H have both off-diagonal blocks zero; then A = top_left and
/// B = bottom_right.
struct BlockAut {
  Mat3 top_left{};
  Mat3 top_right{};
  Mat3 bottom_left{};
  Mat3 bottom_right{};
  std::string provenance;

  bool is_block_diagonal() const noexcept;
  const Mat3& A() const noexcept { return top_left; }
  const Mat3& B() const noexcept { return bottom_right; }

  /// 6x6 matrix over V, rows are images of x1..x6.
  Matrix v_matrix() const;
  /// Images of x1..x6 as vectors of length `dim` (zero beyond V).
  Matrix generator_images(std::size_t dim) const;
};

BlockAut block_diagonal_aut(const Mat3& A, const Mat3& B, std::string provenance);

/// x_i -> alpha x_i + beta x_{3+i}, x_{3+i} -> gamma x_i + delta x_{3+i}.
/// Throws std::invalid_argument when alpha delta - beta gamma = 0 and
/// InvariantViolation if the result fails verification.
BlockAut gl2_block_aut(const PrimeField& F, Residue alpha, Residue beta, Residue gamma, Residue delta);

/// A = B = diag(u, u^-1, 1). Requires u^4 = 1.
BlockAut diag_aut(const PrimeField& F, Residue u);

// The non-diagonal family, present only when the quartic d^4 + 6d^2 - 3 has a root.
struct TwistedParams {
  Residue d = 0, e = 0, a = 0, b = 0, c = 0, f = 0, u = 0;
};

/// A = B = [[a, ab, ac], [df, -f, -def], [1, d, e]].
Mat3 twisted_block(const PrimeField& F, const TwistedParams& q);
BlockAut twisted_aut(const PrimeField& F, const TwistedParams& q);

/// Every parameter set with d a root of d^4 + 6d^2 - 3, e^2 = (d^2-1)/d,
/// u^4 = 1 and a, b, c, f derived. Ordered by (d, e, u). Throws
/// InvariantViolation if a produced set violates the six equations.
std::vector<TwistedParams> solve_twisted(const PrimeField& F);

/// The six polynomial equations on (a, b, c, d, e, f), as written.
bool defining_equations_hold(const PrimeField& F, const TwistedParams& q);

struct IdentityCheck {
  bool square_identity = false;            // 4(1-d^2) + quartic(d) = (d^2+1)^2
  std::optional<bool> fourth_root_minus3;  // ((1+u)(d^3+5d)/4)^4 = -3 for both u^2 = -1
  bool ok() const noexcept { return square_identity && fourth_root_minus3.value_or(true); }
};
IdentityCheck identity_checks(const PrimeField& F, const TwistedParams& q);

enum class SpecialKind { kDiagonal, kTwisted };

struct SpecialMatrix {
  Mat3 matrix{};
  SpecialKind kind = SpecialKind::kDiagonal;
  Residue u = 1;
  std::optional<TwistedParams> params;
};

/// diag(1, u, u^-1) for every u^4 = 1, then one action matrix per
/// solve_twisted result.
std::vector<SpecialMatrix> special_matrices(const PrimeField& F);

/// Checks that the images of x1..x6 under m, extended to x7..x9 by bracketing
/// in L, satisfy every relation of L_p and span L. L must have dimension 9.
bool verify_automorphism(const LieAlgebra& L, const BlockAut& m);

/// first after second: x -> first(second(x)).
BlockAut compose(const PrimeField& F, const BlockAut& first, const BlockAut& second);

struct BruteForceH {
  std::uint64_t count = 0;
  std::vector<BlockAut> elements;
  bool all_scalar = true;  // B = lambda A for every element
};

/// Exhaustive search for automorphisms of L_p preserving span(x1,x2,x3) and
/// span(x4,x5,x6). Rows 2 and 3 of A are pruned to vectors whose adjoint
/// pairing is singular; for each invertible A, B is found as the solution
/// space of the linear relations. Throws SearchBoundExceeded for p > p_max.
BruteForceH brute_force_H(const PrimeField& F, std::uint64_t p_max = 7);

}  // namespace porc
