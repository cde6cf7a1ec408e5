#include <memory>
#include <random>
#include <set>

#include "doctest.h"
#include "expected_covering.hpp"
#include "porc/errors.hpp"
#include "porc/lie_engine.hpp"

using namespace porc;

namespace {

Vec from_terms(const PrimeField& F, std::size_t dim, const std::vector<std::pair<std::size_t, std::int64_t>>& terms) {
  Vec v(dim, 0);
  for (auto [k, c] : terms) v[k - 1] = F.add(v[k - 1], F.from_int(c));
  return v;
}

// Scaling x1..x6 by t carries A_(t lambda, t mu, t nu) onto A_(lambda, mu, nu).
Matrix grading_images(const PrimeField& F, Residue t) {
  Matrix images(10, Vec(10, 0));
  const Residue t2 = F.mul(t, t);
  for (std::size_t i = 0; i < 10; ++i) images[i][i] = i < 6 ? t : (i < 9 ? t2 : F.mul(t2, t));
  return images;
}

// Enumerates V and keeps the vectors commuting with u.
std::size_t centralizer_size_by_enumeration(const LieAlgebra& L, const Vec& u) {
  const PrimeField& F = L.field();
  Vec ue(L.dim(), 0);
  std::copy(u.begin(), u.end(), ue.begin());
  std::uint64_t total = 1;
  for (int k = 0; k < 6; ++k) total *= F.p();
  std::size_t n = 0;
  Vec v(L.dim(), 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (std::size_t k = 0; k < 6; ++k, rest /= F.p()) v[k] = rest % F.p();
    if (is_zero(L.bracket(ue, v))) ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE("lie_engine") {
  TEST_CASE("L_p has dimension 9, class 2 and satisfies Jacobi") {
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 101ULL, 1000003ULL}) {
      const LieAlgebra L = build_Lp(PrimeField(p));
      CHECK(L.dim() == 9);
      CHECK(L.is_antisymmetric());
      CHECK(L.jacobi_check());
      CHECK(L.lower_central_dims() == std::vector<std::size_t>{9, 3, 0});
      CHECK(L.nilpotency_class() == 2u);
    }
    CHECK(lp_presentation(PrimeField(5)).relations.size() == 33);
  }

  TEST_CASE("a non-nilpotent algebra has no class") {
    const PrimeField F(5);
    StructureConstants sc(F, 2);
    sc.set1(2, 1, {{2, 1}});  // [x2, x1] = x2
    const LieAlgebra L(sc);
    CHECK_FALSE(L.nilpotency_class().has_value());
    CHECK(L.jacobi_check());
  }

  TEST_CASE("jacobi_check rejects a bracket violating Jacobi") {
    const PrimeField F(7);
    StructureConstants sc(F, 4);
    sc.set1(2, 1, {{3, 1}});
    sc.set1(3, 1, {{4, 1}});
    sc.set1(3, 2, {{4, 1}});
    sc.set1(4, 1, {{4, 1}});  // J(x1, x2, x3) = -x4
    CHECK_FALSE(LieAlgebra(sc).jacobi_check());
  }

  TEST_CASE("Jacobi residuals of the tailed presentation") {
    const PrimeField F(5);
    const CoveringAlgebra C = build_covering(F);
    CHECK(C.tailed.dim() == 39);
    CHECK(C.tails.size() == 30);
    const auto& expected = expected_residuals();
    REQUIRE(C.residuals.size() == expected.size());
    for (std::size_t n = 0; n < expected.size(); ++n) {
      const auto& e = expected[n];
      const auto& r = C.residuals[n];
      CAPTURE(n);
      CHECK(r.i == e.i);
      CHECK(r.j == e.j);
      CHECK(r.k == e.k);
      CHECK(r.form == from_terms(F, 39, e.terms));
    }
  }

  TEST_CASE("covering algebra brackets after relabelling") {
    for (std::uint64_t p : {5ULL, 13ULL, 101ULL}) {
      const PrimeField F(p);
      const CoveringAlgebra C = build_covering(F);
      REQUIRE(C.M.dim() == 23);
      CHECK(C.base_dim == 9);
      CHECK(C.nucleus_basis.size() == 2);
      CHECK(C.M.jacobi_check());
      StructureConstants sc(F, 23);
      for (const auto& b : expected_covering_brackets()) sc.set(b.i - 1, b.j - 1, from_terms(F, 23, b.terms));
      CHECK(C.M == LieAlgebra(sc));
      for (std::size_t k = 0; k < 9; ++k) CHECK(C.relabel[k] == k + 1);
      std::size_t survivors = 0;
      for (std::size_t k = 9; k < 39; ++k) survivors += C.relabel[k].has_value();
      CHECK(survivors == kSurvivingTails.size());
      for (auto [tail, index] : kSurvivingTails) CHECK(C.relabel[tail - 1] == index);
      // The nucleus is spanned by x10 and x11.
      CHECK(same_span(F, C.nucleus_basis, {C.M.x(10), C.M.x(11)}, 23));
    }
  }

  TEST_CASE("quotient by a non-ideal is refused") {
    const PrimeField F(5);
    const LieAlgebra L = build_Lp(F);
    CHECK_THROWS_AS(quotient(L, {L.x(1)}), InvariantViolation);
    const Quotient q = quotient(L, {L.x(9)});
    CHECK(q.algebra.dim() == 8);
    CHECK(q.algebra.jacobi_check());
  }

  TEST_CASE("descendants are class 3 Lie algebras of dimension 10") {
    std::mt19937_64 rng(17);
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL}) {
      const PrimeField F(p);
      for (int trial = 0; trial < 10; ++trial) {
        const LieAlgebra D = build_descendant(F, rng() % p, rng() % p, rng() % p);
        CHECK(D.dim() == 10);
        CHECK(D.jacobi_check());
        CHECK(D.nilpotency_class() == 3u);
        CHECK(D.lower_central_dims() == std::vector<std::size_t>{10, 4, 1, 0});
      }
    }
  }

  TEST_CASE("descendant parameters scale with the grading") {
    std::mt19937_64 rng(19);
    const PrimeField F(13);
    for (int trial = 0; trial < 30; ++trial) {
      const Residue l = rng() % 13, m = rng() % 13, n = rng() % 13;
      const Residue t = 1 + rng() % 12;
      auto target = std::make_shared<const LieAlgebra>(build_descendant(F, l, m, n));
      auto source = std::make_shared<const LieAlgebra>(
          build_descendant(F, F.mul(t, l), F.mul(t, m), F.mul(t, n)));
      const LieMap phi(source, target, grading_images(F, F.inv(t)));
      CHECK(phi.is_homomorphism());
      CHECK(phi.is_invertible());
      if (t != 1 && (l | m | n) != 0) {
        const LieMap wrong(source, target, grading_images(F, t == 12 ? 2 : F.sub(0, 1)));
        CHECK_FALSE(wrong.is_homomorphism());
      }
    }
  }

  TEST_CASE("general descendants reduce to three parameters") {
    std::mt19937_64 rng(23);
    for (std::uint64_t p : {5ULL, 7ULL, 31ULL}) {
      const PrimeField F(p);
      for (int trial = 0; trial < 20; ++trial) {
        GeneralDescendantParams q;
        for (Residue* x : {&q.epsilon, &q.zeta, &q.eta, &q.theta, &q.kappa, &q.lambda, &q.mu, &q.nu, &q.xi, &q.pi,
                           &q.rho, &q.sigma}) {
          *x = rng() % p;
        }
        const LieAlgebra G = build_general_descendant(F, q);
        CHECK(G.jacobi_check());
        const ReducedDescendant r = reduce_general_descendant(F, q);
        CHECK(r.mu == q.mu);
        CHECK(r.rho == q.rho);
        CHECK(r.sigma == q.sigma);
        CHECK(r.witness.is_homomorphism());
      }
    }
  }

  TEST_CASE("centralizers in V agree with enumeration") {
    std::mt19937_64 rng(29);
    const PrimeField F(5);
    const LieAlgebra L = build_Lp(F);
    CHECK(same_span(F, centralizer_in_V({1, 0, 0, 0, 0, 0}, L), {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}}, 6));
    for (int trial = 0; trial < 12; ++trial) {
      Vec u(6);
      for (auto& x : u) x = rng() % 5;
      if (trial == 0) u = {0, 0, 0, 1, 0, 0};
      const Matrix c = centralizer_in_V(u, L);
      std::size_t expected = 1;
      for (std::size_t k = 0; k < c.size(); ++k) expected *= 5;
      CHECK(centralizer_size_by_enumeration(L, u) == expected);
      for (const auto& row : c) {
        Vec ue(9, 0), ve(9, 0);
        std::copy(u.begin(), u.end(), ue.begin());
        std::copy(row.begin(), row.end(), ve.begin());
        CHECK(is_zero(L.bracket(ue, ve)));
      }
    }
    CHECK_THROWS_AS(centralizer_in_V({1, 0, 0}, L), std::invalid_argument);
  }

  TEST_CASE("abelian 3-subspaces of V are the p + 1 twisted diagonals") {
    for (std::uint64_t p : {5ULL, 7ULL}) {
      const PrimeField F(p);
      const auto found = abelian_3subspaces(F);
      CHECK(found.size() == p + 1);
      // span(a x_i + b x_{3+i} : i = 1..3) for (a : b) on the projective line
      std::set<Matrix> expected;
      for (Residue b = 0; b < p; ++b) {
        Matrix rows(3, Vec(6, 0));
        for (int i = 0; i < 3; ++i) {
          rows[i][i] = 1;
          rows[i][3 + i] = b;
        }
        expected.insert(canonical_span(F, rows, 6));
      }
      expected.insert(canonical_span(F, {{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}, 6));
      std::set<Matrix> got;
      for (const auto& m : found) got.insert(canonical_span(F, m, 6));
      CHECK(got == expected);
    }
    CHECK_THROWS_AS(abelian_3subspaces(PrimeField(11)), SearchBoundExceeded);
  }

  TEST_CASE("text dump round-trips and rejects malformed input") {
    const PrimeField F(7);
    const CoveringAlgebra C = build_covering(F);
    const std::string text = dump_algebra(C.M);
    CHECK(parse_algebra_dump(text) == C.M);
    CHECK(parse_algebra_dump(dump_algebra(build_descendant(F, 1, 2, 3))) == build_descendant(F, 1, 2, 3));
    CHECK_FALSE(parse_algebra_dump(dump_algebra(build_descendant(F, 1, 2, 3))) == build_descendant(F, 1, 2, 4));
    CHECK_THROWS_AS(parse_algebra_dump(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra_dump("3 7 extra\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra_dump("3 7\n1 2 : 3 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra_dump("3 7\n2 1 : 3 9\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra_dump("3 7\n2 1 : 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra_dump("3 8\n"), std::invalid_argument);
  }

  TEST_CASE("generator images extend through the defining brackets") {
    const PrimeField F(11);
    const LieAlgebra D = build_descendant(F, 2, 3, 4);
    Matrix gens;
    for (std::size_t i = 1; i <= 6; ++i) gens.push_back(D.x(i));
    const Matrix ext = extend_generator_images(D, gens, 10);
    REQUIRE(ext.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) CHECK(ext[i] == D.basis(i));
  }
}
