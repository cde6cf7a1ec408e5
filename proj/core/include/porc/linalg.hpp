#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "porc/finite_field.hpp"

namespace porc {

/// Coefficient vector over F_p.
using Vec = std::vector<Residue>;
/// Row-major dense matrix; every row has the same length.
using Matrix = std::vector<Vec>;

/// Which column a row-reduction prefers as pivot.
enum class PivotOrder { kLowest, kHighest };

struct EchelonForm {
  Matrix rows;                       // nonzero rows only, each pivot entry 1
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Fully reduced echelon form. With kHighest the columns are scanned from the
/// right, so pivots land on the largest indices and the surviving free
/// coordinates are the smallest ones.
EchelonForm row_reduce(const PrimeField& F, Matrix rows, std::size_t ncols,
                       PivotOrder order = PivotOrder::kLowest);

std::size_t rank(const PrimeField& F, const Matrix& rows, std::size_t ncols);

/// Basis of { x : M x = 0 } for M with `ncols` columns.
Matrix nullspace(const PrimeField& F, const Matrix& rows, std::size_t ncols);

/// Canonical basis of the span (reduced echelon form, lowest pivots).
Matrix canonical_span(const PrimeField& F, const Matrix& rows, std::size_t ncols);

bool same_span(const PrimeField& F, const Matrix& a, const Matrix& b, std::size_t ncols);

Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec axpy(const PrimeField& F, Residue a, const Vec& x, const Vec& y);  // a*x + y
Vec scale(const PrimeField& F, Residue a, const Vec& x);

using Mat3 = std::array<std::array<Residue, 3>, 3>;

Mat3 mat3_identity();
Mat3 mat3_diag(Residue a, Residue b, Residue c);
Mat3 mat3_mul(const PrimeField& F, const Mat3& a, const Mat3& b);
Mat3 mat3_scale(const PrimeField& F, Residue k, const Mat3& a);
Residue mat3_det(const PrimeField& F, const Mat3& a);
std::size_t mat3_rank(const PrimeField& F, const Mat3& a);
std::array<Residue, 3> mat3_apply(const PrimeField& F, const Mat3& a, const std::array<Residue, 3>& v);
/// Coefficients of det(xI - a), lowest degree first (monic cubic).
FpPoly mat3_charpoly(const PrimeField& F, const Mat3& a);

}  // namespace porc
