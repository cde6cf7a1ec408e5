#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "porc/aut_group.hpp"
#include "porc/diophantine.hpp"
#include "porc/finite_field.hpp"
#include "porc/linalg.hpp"

namespace porc {

/// diag(1, u, u^-1).
Mat3 diagonal_action_matrix(const PrimeField& F, Residue u);

/// The action matrix written in a, b, c, d, e, f.
Mat3 twisted_raw_matrix(const PrimeField& F, const TwistedParams& q);
/// The same matrix rewritten in d, e, u.
Mat3 twisted_simplified_matrix(const PrimeField& F, const TwistedParams& q);
/// Both of the above; throws InvariantViolation unless they agree entry-wise.
Mat3 twisted_action_matrix(const PrimeField& F, const TwistedParams& q);

/// The matrix M with (lambda', mu', nu') = M (lambda, mu, nu) when
/// y_{1..3} = A x_{1..3} and y_{4..6} = A x_{4..6} in A_(lambda, mu, nu)
/// satisfy the relations of A_(lambda', mu', nu'). Computed by bracketing in
/// the descendant, with x10 normalised against [y4, y1, y2].
Mat3 induced_action(const PrimeField& F, const Mat3& A);

/// { kB : k in F_p^*, B in S } acting on F_p^3.
class ActionGroup {
 public:
  ActionGroup(const PrimeField& F, std::vector<Mat3> S);
  /// S taken from special_matrices(F).
  static ActionGroup for_prime(const PrimeField& F);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Mat3>& S() const noexcept { return s_; }
  std::uint64_t order() const noexcept { return (field_.p() - 1) * s_.size(); }
  /// For all B1, B2 in S there are k and B3 in S with B1 B2 = k B3.
  bool torus_closed() const;

 private:
  PrimeField field_;
  std::vector<Mat3> s_;
};

/// Number of nonzero v with Bv = tv for some t in F_p.
std::uint64_t eigenvector_count(const Mat3& B, const PrimeField& F);

/// (|G| + sum over S of eigenvector_count) / |G|. Throws InvariantViolation
/// when the division is not exact.
std::uint64_t burnside_dp(const PrimeField& F, const ActionGroup& G);

/// Orbit count by breadth-first marking on a p^3 array, using a primitive
/// root scalar and the elements of S as generators. Throws
/// SearchBoundExceeded for p > min(p_max, 199).
std::uint64_t brute_orbits(const PrimeField& F, const ActionGroup& G, std::uint64_t p_max = 61);

/// Case split on p mod 12 and, for p = 1 mod 12, on V_p. Throws
/// std::invalid_argument for p < 5 or a mismatched count, InvariantViolation
/// for an inexact division.
std::uint64_t closed_form_dp(std::uint64_t p, const VpCount& vp);

struct CharpolyCheck {
  bool charpoly = false;     // matches the stated polynomial or eigenvalue multiset
  bool eigenvalue = false;   // the stated eigenvalues are roots
  bool census = false;       // eigenvector_count matches the stated total
  std::uint64_t eigenvectors = 0;
  bool ok() const noexcept { return charpoly && eigenvalue && census; }
};
/// Requires p = 1 or 11 mod 12 (the only classes with twisted matrices).
CharpolyCheck charpoly_checks(const PrimeField& F, const TwistedParams& q);

struct DpResult {
  std::uint64_t p = 0;
  std::uint64_t closed_form = 0;
  std::uint64_t burnside = 0;
  std::optional<std::uint64_t> brute;
  std::uint64_t group_order = 0;
  std::size_t s_size = 0;
  VpCount vp;
  bool consistent() const noexcept { return closed_form == burnside && (!brute || *brute == closed_form); }
};
/// All three routes; brute_orbits runs only when p <= brute_max.
DpResult compute_dp(const PrimeField& F, std::uint64_t brute_max);

}  // namespace porc
