#include "porc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace porc {

EchelonForm row_reduce(const PrimeField& F, Matrix rows, std::size_t ncols, PivotOrder order) {
  for (const auto& r : rows) {
    if (r.size() != ncols) throw std::invalid_argument("row_reduce: ragged matrix");
  }
  EchelonForm out;
  std::size_t next = 0;
  for (std::size_t step = 0; step < ncols && next < rows.size(); ++step) {
    const std::size_t col = order == PivotOrder::kLowest ? step : ncols - 1 - step;
    std::size_t piv = next;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[next]);
    const Residue inv = F.inv(rows[next][col]);
    for (auto& x : rows[next]) x = F.mul(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col] == 0) continue;
      const Residue c = F.neg(rows[r][col]);
      for (std::size_t k = 0; k < ncols; ++k) rows[r][k] = F.add(rows[r][k], F.mul(c, rows[next][k]));
    }
    out.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  out.rows = std::move(rows);
  return out;
}

std::size_t rank(const PrimeField& F, const Matrix& rows, std::size_t ncols) {
  return row_reduce(F, rows, ncols).rows.size();
}

Matrix nullspace(const PrimeField& F, const Matrix& rows, std::size_t ncols) {
  const EchelonForm ef = row_reduce(F, rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : ef.pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < ef.rows.size(); ++r) v[ef.pivots[r]] = F.neg(ef.rows[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix canonical_span(const PrimeField& F, const Matrix& rows, std::size_t ncols) {
  return row_reduce(F, rows, ncols).rows;
}

bool same_span(const PrimeField& F, const Matrix& a, const Matrix& b, std::size_t ncols) {
  return canonical_span(F, a, ncols) == canonical_span(F, b, ncols);
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

Vec axpy(const PrimeField& F, Residue a, const Vec& x, const Vec& y) {
  Vec out = y;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = F.add(out[i], F.mul(a, x[i]));
  return out;
}

Vec scale(const PrimeField& F, Residue a, const Vec& x) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = F.mul(a, x[i]);
  return out;
}

Mat3 mat3_identity() { return mat3_diag(1, 1, 1); }

Mat3 mat3_diag(Residue a, Residue b, Residue c) {
  Mat3 m{};
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  return m;
}

Mat3 mat3_mul(const PrimeField& F, const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Residue acc = 0;
      for (int k = 0; k < 3; ++k) acc = F.add(acc, F.mul(a[i][k], b[k][j]));
      r[i][j] = acc;
    }
  }
  return r;
}

Mat3 mat3_scale(const PrimeField& F, Residue k, const Mat3& a) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r[i][j] = F.mul(k, a[i][j]);
  }
  return r;
}

Residue mat3_det(const PrimeField& F, const Mat3& a) {
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return F.sub(F.mul(a[r0][c0], a[r1][c1]), F.mul(a[r0][c1], a[r1][c0]));
  };
  Residue d = F.mul(a[0][0], minor(1, 2, 1, 2));
  d = F.sub(d, F.mul(a[0][1], minor(1, 2, 0, 2)));
  d = F.add(d, F.mul(a[0][2], minor(1, 2, 0, 1)));
  return d;
}

std::size_t mat3_rank(const PrimeField& F, const Mat3& a) {
  Matrix m;
  for (const auto& row : a) m.emplace_back(row.begin(), row.end());
  return rank(F, m, 3);
}

std::array<Residue, 3> mat3_apply(const PrimeField& F, const Mat3& a, const std::array<Residue, 3>& v) {
  std::array<Residue, 3> r{};
  for (int i = 0; i < 3; ++i) {
    r[i] = F.add(F.add(F.mul(a[i][0], v[0]), F.mul(a[i][1], v[1])), F.mul(a[i][2], v[2]));
  }
  return r;
}

FpPoly mat3_charpoly(const PrimeField& F, const Mat3& a) {
  // x^3 - tr x^2 + m2 x - det, m2 the sum of principal 2x2 minors
  const Residue tr = F.add(F.add(a[0][0], a[1][1]), a[2][2]);
  Residue m2 = 0;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    m2 = F.add(m2, F.sub(F.mul(a[i][i], a[j][j]), F.mul(a[i][j], a[j][i])));
  }
  return FpPoly(F, {F.neg(mat3_det(F, a)), m2, F.neg(tr), 1});
}

}  // namespace porc
