#include <random>

#include "doctest.h"
#include "porc/errors.hpp"
#include "porc/lie_engine.hpp"
#include "porc/orbit_counter.hpp"

using namespace porc;

namespace {

struct Known {
  std::uint64_t p, dp, s_size;
};
constexpr Known kKnown[] = {{5, 12, 4},  {7, 34, 2},   {11, 30, 6},  {13, 52, 4},  {17, 84, 4},
                            {19, 202, 2}, {23, 106, 6}, {37, 364, 4}, {61, 124, 36}};

std::uint64_t eigenvectors_by_enumeration(const Mat3& B, const PrimeField& F) {
  std::uint64_t n = 0;
  for (Residue x = 0; x < F.p(); ++x) {
    for (Residue y = 0; y < F.p(); ++y) {
      for (Residue z = 0; z < F.p(); ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        const auto w = mat3_apply(F, B, {x, y, z});
        // w parallel to v: all 2x2 minors vanish
        const bool par = F.mul(w[0], y) == F.mul(w[1], x) && F.mul(w[0], z) == F.mul(w[2], x) &&
                         F.mul(w[1], z) == F.mul(w[2], y);
        if (par) ++n;
      }
    }
  }
  return n;
}

// Sum over k of the nonzero fixed points of kB.
std::uint64_t fixed_points_by_kernels(const Mat3& B, const PrimeField& F) {
  std::uint64_t total = 0;
  for (Residue k = 1; k < F.p(); ++k) {
    Matrix m(3, Vec(3));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) m[i][j] = F.sub(F.mul(k, B[i][j]), i == j ? 1 : 0);
    }
    std::uint64_t size = 1;
    for (std::size_t d = nullspace(F, m, 3).size(); d > 0; --d) size *= F.p();
    total += size - 1;
  }
  return total;
}

bool proportional(const PrimeField& F, const Mat3& a, const Mat3& b) {
  for (Residue k = 1; k < F.p(); ++k) {
    if (mat3_scale(F, k, a) == b) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("orbit_counter") {
  TEST_CASE("eigenvector counts against enumeration") {
    std::mt19937_64 rng(31);
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL}) {
      const PrimeField F(p);
      for (int trial = 0; trial < 40; ++trial) {
        Mat3 B{};
        for (auto& row : B) {
          for (auto& x : row) x = rng() % p;
        }
        if (trial % 4 == 0) B = mat3_scale(F, 1 + rng() % (p - 1), mat3_identity());
        if (trial % 4 == 1) B = mat3_diag(1, 1, 1 + rng() % (p - 1));
        CHECK(eigenvector_count(B, F) == eigenvectors_by_enumeration(B, F));
        if (mat3_det(F, B) != 0) CHECK(eigenvector_count(B, F) == fixed_points_by_kernels(B, F));
      }
    }
  }

  TEST_CASE("diagonal eigenvector counts") {
    const PrimeField F(13);
    const Residue i = F.sqrt(12).front();
    CHECK(eigenvector_count(diagonal_action_matrix(F, 1), F) == 13 * 13 * 13 - 1);
    CHECK(eigenvector_count(diagonal_action_matrix(F, 12), F) == (13 - 1) + (13 * 13 - 1));
    CHECK(eigenvector_count(diagonal_action_matrix(F, i), F) == 3 * 12);
  }

  TEST_CASE("twisted action matrices") {
    for (std::uint64_t p : {11ULL, 23ULL, 47ULL, 61ULL}) {
      const PrimeField F(p);
      for (const auto& q : solve_twisted(F)) {
        const Mat3 raw = twisted_raw_matrix(F, q);
        CHECK(raw == twisted_simplified_matrix(F, q));
        CHECK(mat3_det(F, raw) != 0);
        CHECK(charpoly_checks(F, q).ok());
        TwistedParams bad = q;
        bad.a = F.add(bad.a, 1);
        CHECK_THROWS_AS(twisted_action_matrix(F, bad), InvariantViolation);
      }
    }
    CHECK_THROWS_AS(charpoly_checks(PrimeField(17), TwistedParams{}), std::invalid_argument);
  }

  TEST_CASE("induced action is the action matrix up to a scalar") {
    for (std::uint64_t p : {5ULL, 11ULL, 13ULL, 23ULL}) {
      const PrimeField F(p);
      for (Residue u : F.roots_of_unity(4)) {
        CHECK(proportional(F, induced_action(F, diag_aut(F, u).A()), diagonal_action_matrix(F, u)));
      }
      for (const auto& q : solve_twisted(F)) {
        const Mat3 A = twisted_block(F, q);
        CHECK(proportional(F, induced_action(F, A), twisted_action_matrix(F, q)));
      }
      const Residue t = 2;
      CHECK(proportional(F, induced_action(F, mat3_scale(F, t, mat3_identity())), mat3_identity()));
    }
  }

  TEST_CASE("induced action carries descendants isomorphically") {
    const PrimeField F(11);
    const auto sols = solve_twisted(F);
    REQUIRE_FALSE(sols.empty());
    const TwistedParams& q = sols.front();
    const Mat3 A = twisted_block(F, q);
    const Mat3 M = induced_action(F, A);
    const std::array<Residue, 3> v{1, 2, 3};
    const auto w = mat3_apply(F, M, v);
    auto source = std::make_shared<const LieAlgebra>(build_descendant(F, w[0], w[1], w[2]));
    auto target = std::make_shared<const LieAlgebra>(build_descendant(F, v[0], v[1], v[2]));
    // y_i = A x_i on both halves, then x7..x10 by the defining brackets.
    Matrix gens(6, Vec(10, 0));
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        gens[r][c] = A[r][c];
        gens[3 + r][3 + c] = A[r][c];
      }
    }
    const LieMap phi(source, target, extend_generator_images(*target, gens, 10));
    CHECK(phi.is_invertible());
    CHECK(phi.is_homomorphism());
  }

  TEST_CASE("action groups are closed modulo scalars") {
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 23ULL, 61ULL}) {
      const ActionGroup G = ActionGroup::for_prime(PrimeField(p));
      CHECK(G.torus_closed());
      CHECK(G.order() == (p - 1) * G.S().size());
    }
    const PrimeField F(7);
    CHECK_FALSE(ActionGroup(F, {mat3_identity(), mat3_diag(1, 2, 1)}).torus_closed());
  }

  TEST_CASE("three routes to the descendant count agree") {
    for (const Known& k : kKnown) {
      const PrimeField F(k.p);
      CAPTURE(k.p);
      const DpResult r = compute_dp(F, 61);
      CHECK(r.s_size == k.s_size);
      CHECK(r.closed_form == k.dp);
      CHECK(r.burnside == k.dp);
      REQUIRE(r.brute.has_value());
      CHECK(*r.brute == k.dp);
      CHECK(r.consistent());
    }
    CHECK_FALSE(compute_dp(PrimeField(67), 61).brute.has_value());
  }

  TEST_CASE("burnside and closed form beyond the brute range") {
    for (std::uint64_t p : primes_in_range(67, 3000)) {
      const PrimeField F(p);
      const std::uint64_t b = burnside_dp(F, ActionGroup::for_prime(F));
      CHECK(b == closed_form_dp(p, count_vp(F)));
    }
  }

  TEST_CASE("errors") {
    const PrimeField F(67);
    CHECK_THROWS_AS(brute_orbits(F, ActionGroup::for_prime(F)), SearchBoundExceeded);
    CHECK_THROWS_AS(brute_orbits(PrimeField(211), ActionGroup::for_prime(PrimeField(211)), 1000),
                    SearchBoundExceeded);
    CHECK_THROWS_AS(closed_form_dp(3, VpCount{3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_dp(13, VpCount{17, 0}), std::invalid_argument);
    // A set S that does not come from the automorphisms breaks exact division.
    CHECK_THROWS_AS(burnside_dp(PrimeField(7), ActionGroup(PrimeField(7), {mat3_identity(), Mat3{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}}})),
                    InvariantViolation);
    CHECK_THROWS_AS(eigenvector_count(mat3_identity(), PrimeField(2097169)), std::overflow_error);
  }
}
