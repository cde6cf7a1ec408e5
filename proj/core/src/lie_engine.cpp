#include "porc/lie_engine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace porc {

// ---------------------------------------------------------------------------
// Structure constants and algebras

StructureConstants::StructureConstants(const PrimeField& F, std::size_t dim)
    : field_(F), dim_(dim), table_(dim * dim, Vec(dim, 0)) {
  if (dim == 0) throw std::invalid_argument("StructureConstants: dimension must be positive");
}

void StructureConstants::set(std::size_t i, std::size_t j, Vec value) {
  if (i >= dim_ || j >= dim_ || value.size() != dim_) {
    throw std::invalid_argument("StructureConstants::set: index or length out of range");
  }
  if (i == j) {
    if (!is_zero(value)) throw std::invalid_argument("StructureConstants::set: [e_i, e_i] must be 0");
    return;
  }
  for (auto& c : value) c %= field_.p();
  Vec negated(dim_);
  for (std::size_t k = 0; k < dim_; ++k) negated[k] = field_.neg(value[k]);
  table_[i * dim_ + j] = std::move(value);
  table_[j * dim_ + i] = std::move(negated);
}

void StructureConstants::set1(std::size_t i, std::size_t j,
                              std::initializer_list<std::pair<std::size_t, std::int64_t>> terms) {
  Vec v(dim_, 0);
  for (auto [k, c] : terms) v.at(k - 1) = field_.add(v.at(k - 1), field_.from_int(c));
  set(i - 1, j - 1, std::move(v));
}

LieAlgebra::LieAlgebra(StructureConstants sc) : sc_(std::move(sc)) {
  const PrimeField& F = field();
  const std::size_t n = dim();
  Matrix current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(unit_vec(n, i));
  series_.push_back(current);
  while (!current.empty()) {
    Matrix gens;
    for (const auto& row : current) {
      for (std::size_t j = 0; j < n; ++j) {
        Vec b = bracket(row, basis(j));
        if (!is_zero(b)) gens.push_back(std::move(b));
      }
    }
    Matrix next = canonical_span(F, gens, n);
    if (next.size() == current.size()) break;  // stabilised above zero: not nilpotent
    series_.push_back(next);
    current = std::move(next);
  }
  if (series_.back().empty()) class_ = series_.size() - 1;
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n) throw std::invalid_argument("bracket: dimension mismatch");
  const PrimeField& F = field();
  Vec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0 || i == j) continue;
      const Residue c = F.mul(u[i], v[j]);
      const Vec& b = sc_.get(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (b[k] != 0) out[k] = F.add(out[k], F.mul(c, b[k]));
      }
    }
  }
  return out;
}

bool LieAlgebra::is_antisymmetric() const {
  const PrimeField& F = field();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!is_zero(sc_.get(i, i))) return false;
    for (std::size_t j = 0; j < i; ++j) {
      const Vec& a = sc_.get(i, j);
      const Vec& b = sc_.get(j, i);
      for (std::size_t k = 0; k < dim(); ++k) {
        if (F.add(a[k], b[k]) != 0) return false;
      }
    }
  }
  return true;
}

bool LieAlgebra::jacobi_check() const {
  const PrimeField& F = field();
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        const Vec a = bracket(basis(i), basis(j), basis(k));
        const Vec b = bracket(basis(j), basis(k), basis(i));
        const Vec c = bracket(basis(k), basis(i), basis(j));
        for (std::size_t t = 0; t < n; ++t) {
          if (F.add(F.add(a[t], b[t]), c[t]) != 0) return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::size_t> LieAlgebra::lower_central_dims() const {
  std::vector<std::size_t> d;
  for (const auto& m : series_) d.push_back(m.size());
  return d;
}

std::size_t LieAlgebra::derived_dim() const { return series_.size() > 1 ? series_[1].size() : series_[0].size(); }

bool LieAlgebra::operator==(const LieAlgebra& other) const {
  if (!(field() == other.field()) || dim() != other.dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sc_.get(i, j) != other.sc_.get(i, j)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Maps

LieMap::LieMap(std::shared_ptr<const LieAlgebra> domain, std::shared_ptr<const LieAlgebra> codomain,
               Matrix images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (!domain_ || !codomain_) throw std::invalid_argument("LieMap: null algebra");
  if (images_.size() != domain_->dim()) throw std::invalid_argument("LieMap: wrong number of images");
  for (const auto& r : images_) {
    if (r.size() != codomain_->dim()) throw std::invalid_argument("LieMap: image has wrong length");
  }
}

Vec LieMap::apply(const Vec& v) const {
  if (v.size() != domain_->dim()) throw std::invalid_argument("LieMap::apply: dimension mismatch");
  const PrimeField& F = codomain_->field();
  Vec out(codomain_->dim(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out = axpy(F, v[i], images_[i], out);
  }
  return out;
}

bool LieMap::is_homomorphism() const {
  for (std::size_t i = 0; i < domain_->dim(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (apply(domain_->bracket_basis(i, j)) != codomain_->bracket(images_[i], images_[j])) return false;
    }
  }
  return true;
}

bool LieMap::is_invertible() const {
  return domain_->dim() == codomain_->dim() &&
         rank(codomain_->field(), images_, codomain_->dim()) == domain_->dim();
}

Matrix extend_generator_images(const LieAlgebra& codomain, const Matrix& generator_images,
                               std::size_t domain_dim) {
  if (generator_images.size() != 6) throw std::invalid_argument("extend_generator_images: need 6 images");
  if (domain_dim != 9 && domain_dim != 10) {
    throw std::invalid_argument("extend_generator_images: domain must have dimension 9 or 10");
  }
  Matrix img = generator_images;
  img.push_back(codomain.bracket(img[3], img[0]));
  img.push_back(codomain.bracket(img[3], img[1]));
  img.push_back(codomain.bracket(img[3], img[2]));
  if (domain_dim == 10) img.push_back(codomain.bracket(img[6], img[1]));
  return img;
}

// ---------------------------------------------------------------------------
// Presentations

Presentation lp_presentation(const PrimeField& F) {
  Presentation P{F, 6, 9, {}};
  auto rel = [&](std::size_t i, std::size_t j, std::optional<std::size_t> target, bool defines = false) {
    Relation r;
    r.i = i;
    r.j = j;
    r.value = Vec(9, 0);
    if (target) r.value[*target - 1] = 1;
    r.defines = defines;
    r.defined = defines ? *target : 0;
    P.relations.push_back(std::move(r));
  };
  rel(2, 1, std::nullopt);
  rel(3, 1, std::nullopt);
  rel(3, 2, std::nullopt);
  rel(4, 1, 7, true);
  rel(4, 2, 8, true);
  rel(4, 3, 9, true);
  rel(5, 1, 8);
  rel(5, 2, 7);
  rel(5, 3, std::nullopt);
  rel(5, 4, std::nullopt);
  rel(6, 1, 9);
  rel(6, 2, std::nullopt);
  rel(6, 3, 8);
  rel(6, 4, std::nullopt);
  rel(6, 5, std::nullopt);
  for (std::size_t i = 7; i <= 9; ++i) {
    for (std::size_t j = 1; j <= 6; ++j) rel(i, j, std::nullopt);
  }
  return P;
}

LieAlgebra algebra_from_presentation(const Presentation& P) {
  StructureConstants sc(P.field, P.dim);
  for (const auto& r : P.relations) sc.set(r.i - 1, r.j - 1, r.value);
  return LieAlgebra(std::move(sc));
}

LieAlgebra build_Lp(const PrimeField& F) { return algebra_from_presentation(lp_presentation(F)); }

// ---------------------------------------------------------------------------
// Quotients and the covering algebra

Vec Quotient::project(const PrimeField& F, const Vec& v) const {
  Vec w = v;
  for (std::size_t r = 0; r < ideal.rows.size(); ++r) {
    const Residue c = w[ideal.pivots[r]];
    if (c != 0) w = axpy(F, F.neg(c), ideal.rows[r], w);
  }
  Vec out;
  out.reserve(kept.size());
  for (auto k : kept) out.push_back(w[k]);
  return out;
}

Quotient quotient(const LieAlgebra& L, const Matrix& ideal, PivotOrder order) {
  const PrimeField& F = L.field();
  const std::size_t n = L.dim();
  EchelonForm ef = row_reduce(F, ideal, n, order);
  std::vector<bool> is_pivot(n, false);
  for (auto c : ef.pivots) is_pivot[c] = true;
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < n; ++k) {
    if (!is_pivot[k]) kept.push_back(k);
  }
  if (kept.empty()) throw std::invalid_argument("quotient: ideal is the whole algebra");

  // The projection is only defined on a Quotient, so stage one with a
  // placeholder algebra first.
  StructureConstants placeholder(F, kept.size());
  Quotient q{LieAlgebra(placeholder), std::move(ef), kept};

  for (const auto& row : q.ideal.rows) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(q.project(F, L.bracket(row, L.basis(j))))) {
        throw InvariantViolation("quotient: subspace is not an ideal");
      }
    }
  }
  StructureConstants sc(F, kept.size());
  for (std::size_t a = 0; a < kept.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) sc.set(a, b, q.project(F, L.bracket_basis(kept[a], kept[b])));
  }
  q.algebra = LieAlgebra(std::move(sc));
  return q;
}

LieAlgebra tail_presentation(const Presentation& P, std::vector<TailRelation>* tails) {
  std::vector<const Relation*> order;
  for (const auto& r : P.relations) {
    if (!r.defines && r.i > P.n_generators) order.push_back(&r);
  }
  for (const auto& r : P.relations) {
    if (!r.defines && r.i <= P.n_generators) order.push_back(&r);
  }
  const std::size_t total = P.dim + order.size();
  StructureConstants sc(P.field, total);
  for (const auto& r : P.relations) {
    Vec v(total, 0);
    std::copy(r.value.begin(), r.value.end(), v.begin());
    sc.set(r.i - 1, r.j - 1, std::move(v));
  }
  std::vector<TailRelation> out;
  for (std::size_t t = 0; t < order.size(); ++t) {
    const Relation& r = *order[t];
    Vec v(total, 0);
    std::copy(r.value.begin(), r.value.end(), v.begin());
    v[P.dim + t] = 1;
    sc.set(r.i - 1, r.j - 1, std::move(v));
    out.push_back(TailRelation{r.i, r.j, P.dim + t + 1});
  }
  if (tails) *tails = std::move(out);
  return LieAlgebra(std::move(sc));
}

std::vector<JacobiResidual> jacobi_residuals(const LieAlgebra& tailed, std::size_t n_generators) {
  const PrimeField& F = tailed.field();
  std::vector<JacobiResidual> out;
  for (std::size_t i = 1; i <= n_generators; ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      for (std::size_t k = 1; k < j; ++k) {
        const Vec xi = tailed.x(i), xj = tailed.x(j), xk = tailed.x(k);
        Vec form = tailed.bracket(xi, xj, xk);
        const Vec b = tailed.bracket(xj, xk, xi);
        const Vec c = tailed.bracket(xk, xi, xj);
        for (std::size_t t = 0; t < form.size(); ++t) form[t] = F.add(F.add(form[t], b[t]), c[t]);
        out.push_back(JacobiResidual{i, j, k, std::move(form)});
      }
    }
  }
  return out;
}

CoveringAlgebra build_covering(const Presentation& P) {
  std::vector<TailRelation> tails;
  LieAlgebra tailed = tail_presentation(P, &tails);
  std::vector<JacobiResidual> residuals = jacobi_residuals(tailed, P.n_generators);

  Matrix forms;
  for (const auto& r : residuals) {
    if (!is_zero(r.form)) forms.push_back(r.form);
  }
  for (const auto& f : forms) {
    for (std::size_t k = 0; k < P.dim; ++k) {
      if (f[k] != 0) throw InvariantViolation("build_covering: Jacobi residual outside the tails");
    }
  }
  Quotient q = quotient(tailed, forms, PivotOrder::kHighest);

  std::vector<std::optional<std::size_t>> relabel(tailed.dim());
  for (std::size_t a = 0; a < q.kept.size(); ++a) relabel[q.kept[a]] = a + 1;

  Matrix nucleus;
  const auto& series = q.algebra.lower_central_series();
  if (series.size() > 2) nucleus = series[2];

  return CoveringAlgebra{std::move(tailed), std::move(tails), std::move(residuals),
                         std::move(q.algebra), std::move(relabel), std::move(nucleus), P.dim};
}

CoveringAlgebra build_covering(const PrimeField& F) { return build_covering(lp_presentation(F)); }

// ---------------------------------------------------------------------------
// Descendants

namespace {

void set_lp_part(StructureConstants& sc) {
  sc.set1(4, 1, {{7, 1}});
  sc.set1(4, 2, {{8, 1}});
  sc.set1(4, 3, {{9, 1}});
  sc.set1(7, 2, {{10, 1}});
  sc.set1(8, 1, {{10, 1}});
  sc.set1(9, 3, {{10, 1}});
}

Vec tail_term(const PrimeField& F, std::size_t base, Residue coeff_on_base, Residue tail) {
  Vec v(10, 0);
  if (base != 0) v[base - 1] = F.add(v[base - 1], coeff_on_base);
  v[9] = tail % F.p();
  return v;
}

}  // namespace

LieAlgebra build_descendant(const PrimeField& F, Residue lambda, Residue mu, Residue nu) {
  StructureConstants sc(F, 10);
  set_lp_part(sc);
  sc.set1(5, 1, {{8, 1}});
  sc.set1(5, 2, {{7, 1}});
  sc.set1(6, 1, {{9, 1}});
  sc.set1(6, 3, {{8, 1}});
  sc.set(4, 3, tail_term(F, 0, 0, lambda));  // [x5, x4]
  sc.set(5, 3, tail_term(F, 0, 0, mu));      // [x6, x4]
  sc.set(5, 4, tail_term(F, 0, 0, nu));      // [x6, x5]
  return LieAlgebra(std::move(sc));
}

LieAlgebra build_general_descendant(const PrimeField& F, const GeneralDescendantParams& q) {
  StructureConstants sc(F, 10);
  set_lp_part(sc);
  auto put = [&](std::size_t i, std::size_t j, std::size_t base, Residue tail) {
    sc.set(i - 1, j - 1, tail_term(F, base, 1, tail));
  };
  put(2, 1, 0, q.epsilon);
  put(3, 1, 0, q.zeta);
  put(3, 2, 0, q.eta);
  put(5, 1, 8, q.theta);
  put(5, 2, 7, q.kappa);
  put(5, 3, 0, q.lambda);
  put(5, 4, 0, q.mu);
  put(6, 1, 9, q.nu);
  put(6, 2, 0, q.xi);
  put(6, 3, 8, q.pi);
  put(6, 4, 0, q.rho);
  put(6, 5, 0, q.sigma);
  return LieAlgebra(std::move(sc));
}

ReducedDescendant reduce_general_descendant(const PrimeField& F, const GeneralDescendantParams& q) {
  auto general = std::make_shared<const LieAlgebra>(build_general_descendant(F, q));
  auto reduced = std::make_shared<const LieAlgebra>(build_descendant(F, q.mu, q.rho, q.sigma));

  Matrix images;
  for (std::size_t i = 1; i <= 10; ++i) images.push_back(general->x(i));
  auto sub = [&](std::size_t row, std::size_t k, Residue c) {
    images[row - 1][k - 1] = F.sub(images[row - 1][k - 1], c % F.p());
  };
  sub(2, 8, q.epsilon);
  sub(3, 7, q.eta);
  sub(3, 8, q.zeta);
  sub(5, 7, q.kappa);
  sub(5, 8, q.theta);
  sub(5, 9, q.lambda);
  sub(6, 7, q.xi);
  sub(6, 8, q.nu);
  sub(6, 9, q.pi);

  LieMap witness(reduced, general, std::move(images));
  if (!witness.is_homomorphism() || !witness.is_invertible()) {
    throw InvariantViolation("reduce_general_descendant: substitution is not an isomorphism");
  }
  return ReducedDescendant{q.mu % F.p(), q.rho % F.p(), q.sigma % F.p(), std::move(witness)};
}

// ---------------------------------------------------------------------------
// Subspaces of V

namespace {

Vec embed_v(const Vec& u, std::size_t dim) {
  if (u.size() != 6) throw std::invalid_argument("expected a vector in V = span(x1..x6)");
  Vec v(dim, 0);
  std::copy(u.begin(), u.end(), v.begin());
  return v;
}

}  // namespace

Matrix centralizer_in_V(const Vec& u, const LieAlgebra& L) {
  if (L.dim() < 6) throw std::invalid_argument("centralizer_in_V: algebra too small");
  const PrimeField& F = L.field();
  const Vec ue = embed_v(u, L.dim());
  // Column j of the system is [u, x_j]; the kernel is C_V(u).
  Matrix system(L.dim(), Vec(6, 0));
  for (std::size_t j = 0; j < 6; ++j) {
    const Vec b = L.bracket(ue, L.basis(j));
    for (std::size_t k = 0; k < L.dim(); ++k) system[k][j] = b[k];
  }
  return canonical_span(F, nullspace(F, system, 6), 6);
}

std::vector<Matrix> abelian_3subspaces(const PrimeField& F, std::uint64_t limit_p) {
  if (F.p() > limit_p) {
    throw SearchBoundExceeded("abelian_3subspaces: p = " + std::to_string(F.p()) +
                              " exceeds the enumeration bound " + std::to_string(limit_p));
  }
  const LieAlgebra L = build_Lp(F);
  const std::uint64_t p = F.p();

  struct Term {
    std::size_t i, j;
    Vec value;
  };
  std::vector<Term> terms;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      const Vec& b = L.bracket_basis(i, j);
      if (!is_zero(b)) terms.push_back(Term{i, j, b});
    }
  }
  auto commute = [&](const Vec& u, const Vec& v) {
    Vec acc(L.dim(), 0);
    for (const auto& t : terms) {
      const Residue c = F.mul(u[t.i], v[t.j]);
      if (c != 0) acc = axpy(F, c, t.value, acc);
    }
    return is_zero(acc);
  };

  std::vector<Matrix> found;
  for (std::size_t c0 = 0; c0 < 6; ++c0) {
    for (std::size_t c1 = c0 + 1; c1 < 6; ++c1) {
      for (std::size_t c2 = c1 + 1; c2 < 6; ++c2) {
        const std::array<std::size_t, 3> piv{c0, c1, c2};
        std::array<std::vector<std::size_t>, 3> free;
        for (std::size_t r = 0; r < 3; ++r) {
          for (std::size_t c = piv[r] + 1; c < 6; ++c) {
            if (c != c0 && c != c1 && c != c2) free[r].push_back(c);
          }
        }
        Matrix rows(3, Vec(6, 0));
        // Odometer over the free entries of row r, recursing into row r + 1
        // only when the rows so far commute pairwise.
        auto descend = [&](auto&& self, std::size_t r) -> void {
          if (r == 3) {
            found.push_back(rows);
            return;
          }
          Vec& row = rows[r];
          std::fill(row.begin(), row.end(), 0);
          row[piv[r]] = 1;
          const std::size_t nf = free[r].size();
          std::uint64_t combos = 1;
          for (std::size_t k = 0; k < nf; ++k) combos *= p;
          for (std::uint64_t code = 0; code < combos; ++code) {
            std::uint64_t rest = code;
            for (std::size_t k = 0; k < nf; ++k) {
              row[free[r][k]] = rest % p;
              rest /= p;
            }
            bool ok = true;
            for (std::size_t s = 0; s < r && ok; ++s) ok = commute(rows[s], row);
            if (ok) self(self, r + 1);
          }
        };
        descend(descend, 0);
      }
    }
  }
  return found;
}

// ---------------------------------------------------------------------------
// Text dump

std::string dump_algebra(const LieAlgebra& L) {
  std::ostringstream os;
  os << L.dim() << ' ' << L.field().p() << '\n';
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Vec& b = L.bracket_basis(i, j);
      if (is_zero(b)) continue;
      os << i + 1 << ' ' << j + 1 << " :";
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (b[k] != 0) os << ' ' << k + 1 << ' ' << b[k];
      }
      os << '\n';
    }
  }
  return os.str();
}

LieAlgebra parse_algebra_dump(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto fail = [](const std::string& why) -> std::invalid_argument {
    return std::invalid_argument("parse_algebra_dump: " + why);
  };
  if (!std::getline(in, line)) throw fail("missing header");
  std::istringstream header(line);
  std::size_t dim = 0;
  std::uint64_t p = 0;
  std::string extra;
  if (!(header >> dim >> p) || (header >> extra)) throw fail("bad header '" + line + "'");
  StructureConstants sc(PrimeField(p), dim);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::size_t i = 0, j = 0;
    std::string colon;
    if (!(ls >> i >> j >> colon) || colon != ":" || i <= j || i > dim || j == 0) {
      throw fail("bad bracket on line " + std::to_string(lineno));
    }
    Vec v(dim, 0);
    std::size_t k = 0;
    std::uint64_t c = 0;
    while (ls >> k) {
      if (!(ls >> c) || k == 0 || k > dim || c >= p) throw fail("bad term on line " + std::to_string(lineno));
      v[k - 1] = c;
    }
    if (!ls.eof()) throw fail("trailing garbage on line " + std::to_string(lineno));
    sc.set(i - 1, j - 1, std::move(v));
  }
  return LieAlgebra(std::move(sc));
}

}  // namespace porc
