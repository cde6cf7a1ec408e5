#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "porc/finite_field.hpp"
#include "porc/linalg.hpp"

namespace porc {

/// Mutable bracket table used to assemble a LieAlgebra. Indices are 0-based;
/// setting [e_i, e_j] also sets [e_j, e_i] to its negative.
class StructureConstants {
 public:
  StructureConstants(const PrimeField& F, std::size_t dim);

  void set(std::size_t i, std::size_t j, Vec value);
  /// 1-based convenience: [x_i, x_j] = sum of coeff * x_k over (k, coeff).
  void set1(std::size_t i, std::size_t j,
            std::initializer_list<std::pair<std::size_t, std::int64_t>> terms);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const Vec& get(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<Vec> table_;
};

/// Finite-dimensional algebra over F_p with an alternating bilinear bracket
/// given by structure constants. The Jacobi identity is not assumed; it is
/// checked by jacobi_check(). Immutable once built; the lower central series
/// is computed at construction.
class LieAlgebra {
 public:
  explicit LieAlgebra(StructureConstants sc);

  const PrimeField& field() const noexcept { return sc_.field(); }
  std::size_t dim() const noexcept { return sc_.dim(); }
  const StructureConstants& structure() const noexcept { return sc_; }

  /// [e_i, e_j], 0-based.
  const Vec& bracket_basis(std::size_t i, std::size_t j) const { return sc_.get(i, j); }
  /// Bilinear extension. Throws std::invalid_argument on a length mismatch.
  Vec bracket(const Vec& u, const Vec& v) const;
  /// Left-normed [u, v, w] = [[u, v], w].
  Vec bracket(const Vec& u, const Vec& v, const Vec& w) const { return bracket(bracket(u, v), w); }
  Vec basis(std::size_t i) const { return unit_vec(dim(), i); }
  /// 1-based basis element x_i.
  Vec x(std::size_t i) const { return unit_vec(dim(), i - 1); }

  bool is_antisymmetric() const;
  bool jacobi_check() const;

  /// Canonical bases of gamma_1 = L, gamma_2 = [L, L], ... ending with the
  /// first zero term (or the first repeated one if L is not nilpotent).
  const std::vector<Matrix>& lower_central_series() const noexcept { return series_; }
  std::vector<std::size_t> lower_central_dims() const;
  /// Nilpotency class, or nullopt when the series stabilises above zero.
  std::optional<std::size_t> nilpotency_class() const noexcept { return class_; }
  std::size_t derived_dim() const;

  bool operator==(const LieAlgebra& other) const;

 private:
  StructureConstants sc_;
  std::vector<Matrix> series_;
  std::optional<std::size_t> class_;
};

/// Linear map given by the images of every basis element of the domain.
class LieMap {
 public:
  LieMap(std::shared_ptr<const LieAlgebra> domain, std::shared_ptr<const LieAlgebra> codomain,
         Matrix images);

  const LieAlgebra& domain() const noexcept { return *domain_; }
  const LieAlgebra& codomain() const noexcept { return *codomain_; }
  const Matrix& images() const noexcept { return images_; }

  Vec apply(const Vec& v) const;
  /// phi([e_i, e_j]) == [phi(e_i), phi(e_j)] for every basis pair.
  bool is_homomorphism() const;
  bool is_invertible() const;

 private:
  std::shared_ptr<const LieAlgebra> domain_;
  std::shared_ptr<const LieAlgebra> codomain_;
  Matrix images_;
};

/// Images of x_1..x_6 in `codomain` extended to the derived basis by the
/// definitions x7 = [x4,x1], x8 = [x4,x2], x9 = [x4,x3] and, when
/// domain_dim is 10, x10 = [x4,x1,x2].
Matrix extend_generator_images(const LieAlgebra& codomain, const Matrix& generator_images,
                               std::size_t domain_dim);

/// One defining relation [x_i, x_j] = value (1-based, i > j). When
/// `defines` is set, the relation is the definition of basis element
/// `defined` and `value` is that unit vector.
struct Relation {
  std::size_t i = 0;
  std::size_t j = 0;
  Vec value;
  bool defines = false;
  std::size_t defined = 0;
};

struct Presentation {
  PrimeField field;
  std::size_t n_generators = 0;
  std::size_t dim = 0;
  std::vector<Relation> relations;
};

/// The 33 relations of L_p on x1..x9, with [x4,x1], [x4,x2], [x4,x3] as the
/// definitions of x7, x8, x9.
Presentation lp_presentation(const PrimeField& F);
LieAlgebra algebra_from_presentation(const Presentation& P);
LieAlgebra build_Lp(const PrimeField& F);

struct Quotient {
  LieAlgebra algebra;
  EchelonForm ideal;
  std::vector<std::size_t> kept;  // 0-based coordinates of the parent that survive
  Vec project(const PrimeField& F, const Vec& v) const;
};

/// L / I for I spanned by `ideal`. Throws InvariantViolation when the span is
/// not an ideal.
Quotient quotient(const LieAlgebra& L, const Matrix& ideal, PivotOrder order = PivotOrder::kHighest);

struct TailRelation {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t tail = 0;  // 1-based index in the tail presentation
};

struct JacobiResidual {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Vec form;  // over the basis of the tail presentation
};

/// Adjoins a central tail to every non-defining relation. Relations whose left
/// entry lies beyond the generators are tailed first, so for L_p the tails
/// are numbered x10..x39 in the same order as the hand computation.
LieAlgebra tail_presentation(const Presentation& P, std::vector<TailRelation>* tails = nullptr);

/// J(i,j,k) = [x_i,x_j,x_k] + [x_j,x_k,x_i] + [x_k,x_i,x_j] for
/// 1 <= k < j < i <= n_generators, in lexicographic (i, j, k) order.
std::vector<JacobiResidual> jacobi_residuals(const LieAlgebra& tailed, std::size_t n_generators);

struct CoveringAlgebra {
  LieAlgebra tailed;
  std::vector<TailRelation> tails;
  std::vector<JacobiResidual> residuals;
  LieAlgebra M;
  /// relabel[k] = 1-based index in M of tailed basis element x_{k+1}, if it survives.
  std::vector<std::optional<std::size_t>> relabel;
  Matrix nucleus_basis;       // [M, M, M] in M coordinates
  std::size_t base_dim = 0;   // dimension of the presented algebra
};

CoveringAlgebra build_covering(const Presentation& P);
CoveringAlgebra build_covering(const PrimeField& F);

/// A_(lambda, mu, nu): dimension 10, class 3.
LieAlgebra build_descendant(const PrimeField& F, Residue lambda, Residue mu, Residue nu);

/// The twelve tail coefficients of a general dimension-10 descendant.
struct GeneralDescendantParams {
  Residue epsilon = 0, zeta = 0, eta = 0, theta = 0, kappa = 0, lambda = 0;
  Residue mu = 0, nu = 0, xi = 0, pi = 0, rho = 0, sigma = 0;
};
LieAlgebra build_general_descendant(const PrimeField& F, const GeneralDescendantParams& q);

struct ReducedDescendant {
  Residue mu = 0;
  Residue rho = 0;
  Residue sigma = 0;
  /// From A_(mu, rho, sigma) onto the general algebra; verified.
  LieMap witness;
};
/// Applies the generator substitution y2 = x2 - eps x8, ... and verifies it
/// as an isomorphism. Throws InvariantViolation if verification fails.
ReducedDescendant reduce_general_descendant(const PrimeField& F, const GeneralDescendantParams& q);

/// C_V(u) for u in V = span(x1..x6) given in V coordinates (length 6);
/// returns a canonical basis in V coordinates.
Matrix centralizer_in_V(const Vec& u, const LieAlgebra& L);

/// Every 3-dimensional subspace of V spanning an abelian subalgebra of L_p,
/// as canonical 3x6 bases. Throws SearchBoundExceeded for p > limit_p.
std::vector<Matrix> abelian_3subspaces(const PrimeField& F, std::uint64_t limit_p = 7);

/// Text form: "<dim> <p>" then one line "i j : k1 c1 k2 c2 ..." per nonzero
/// bracket with i > j, all indices 1-based.
std::string dump_algebra(const LieAlgebra& L);
/// Throws std::invalid_argument on malformed input.
LieAlgebra parse_algebra_dump(std::string_view text);

}  // namespace porc
