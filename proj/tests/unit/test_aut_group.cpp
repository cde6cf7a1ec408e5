#include <set>

#include "doctest.h"
#include "porc/aut_group.hpp"
#include "porc/errors.hpp"

using namespace porc;

namespace {

// (d, e, u) solving the defining equations, found by scanning F_p.
std::set<std::array<Residue, 3>> twisted_triples_by_scan(const PrimeField& F) {
  std::set<std::array<Residue, 3>> out;
  for (Residue d = 1; d < F.p(); ++d) {
    const Residue d2 = F.mul(d, d);
    if (F.sub(F.add(F.mul(d2, d2), F.mul(6, d2)), 3) != 0) continue;
    for (Residue e = 0; e < F.p(); ++e) {
      if (F.mul(F.mul(e, e), d) != F.sub(d2, 1)) continue;
      for (Residue u = 1; u < F.p(); ++u) {
        if (F.pow(u, 4) == 1) out.insert({d, e, u});
      }
    }
  }
  return out;
}

std::pair<Mat3, Mat3> blocks(const BlockAut& m) { return {m.A(), m.B()}; }

LieAlgebra perturbed_Lp(const PrimeField& F) {
  Presentation P = lp_presentation(F);
  for (auto& r : P.relations) {
    if (r.i == 5 && r.j == 1) r.value[7] = 2;  // [x5, x1] = 2 x8
  }
  return algebra_from_presentation(P);
}

}  // namespace

TEST_SUITE("aut_group") {
  TEST_CASE("all of GL(2, p) acts on L_p") {
    const PrimeField F(5);
    const LieAlgebra L = build_Lp(F);
    const LieAlgebra bad = perturbed_Lp(F);
    std::size_t count = 0, rejected_by_bad = 0;
    for (Residue a = 0; a < 5; ++a) {
      for (Residue b = 0; b < 5; ++b) {
        for (Residue c = 0; c < 5; ++c) {
          for (Residue d = 0; d < 5; ++d) {
            if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) {
              CHECK_THROWS_AS(gl2_block_aut(F, a, b, c, d), std::invalid_argument);
              continue;
            }
            const BlockAut m = gl2_block_aut(F, a, b, c, d);
            CHECK(verify_automorphism(L, m));
            if (!verify_automorphism(bad, m)) ++rejected_by_bad;
            ++count;
          }
        }
      }
    }
    CHECK(count == 480);
    CHECK(rejected_by_bad > 0);
    CHECK(gl2_block_aut(F, 1, 2, 3, 4).provenance == "gl2(1,2,3,4)");
  }

  TEST_CASE("verify_automorphism rejects non-automorphisms") {
    const PrimeField F(7);
    const LieAlgebra L = build_Lp(F);
    CHECK_FALSE(verify_automorphism(L, block_diagonal_aut(mat3_diag(1, 2, 1), mat3_identity(), "skew")));
    CHECK_FALSE(verify_automorphism(L, block_diagonal_aut(mat3_identity(), mat3_diag(1, 1, 0), "singular")));
    CHECK_FALSE(verify_automorphism(build_descendant(F, 1, 1, 1), diag_aut(F, 1)));
    CHECK(verify_automorphism(L, diag_aut(F, 6)));
    CHECK_THROWS_AS(diag_aut(F, 3), std::invalid_argument);
  }

  TEST_CASE("twisted parameter sets match a direct scan") {
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 23ULL, 37ULL, 47ULL, 59ULL, 61ULL, 71ULL, 73ULL, 97ULL}) {
      const PrimeField F(p);
      CAPTURE(p);
      const auto sols = solve_twisted(F);
      std::set<std::array<Residue, 3>> got;
      for (const auto& q : sols) got.insert({q.d, q.e, q.u});
      CHECK(got.size() == sols.size());
      CHECK(got == twisted_triples_by_scan(F));
      for (const auto& q : sols) {
        CHECK(defining_equations_hold(F, q));
        CHECK(identity_checks(F, q).ok());
        CHECK(F.pow(q.u, 4) == 1);
      }
    }
    CHECK(solve_twisted(PrimeField(11)).size() == 4);
    CHECK(solve_twisted(PrimeField(61)).size() == 32);
    CHECK(solve_twisted(PrimeField(13)).empty());
  }

  TEST_CASE("twisted automorphisms verify on L_p but not on a perturbed algebra") {
    for (std::uint64_t p : {11ULL, 23ULL, 61ULL}) {
      const PrimeField F(p);
      const LieAlgebra L = build_Lp(F);
      const LieAlgebra bad = perturbed_Lp(F);
      for (const auto& q : solve_twisted(F)) {
        const BlockAut m = twisted_aut(F, q);
        CHECK(m.is_block_diagonal());
        CHECK(m.A() == m.B());
        CHECK(verify_automorphism(L, m));
        CHECK_FALSE(verify_automorphism(bad, m));
      }
    }
  }

  TEST_CASE("identity checks catch a wrong root") {
    const PrimeField F(61);
    const auto sols = solve_twisted(F);
    REQUIRE_FALSE(sols.empty());
    TwistedParams q = sols.front();
    CHECK(identity_checks(F, q).fourth_root_minus3.has_value());
    q.d = 0;  // quartic(0) = -3
    CHECK_FALSE(identity_checks(F, q).ok());
    CHECK_FALSE(defining_equations_hold(F, q));
  }

  TEST_CASE("special matrices per residue class") {
    CHECK(special_matrices(PrimeField(5)).size() == 4);
    CHECK(special_matrices(PrimeField(7)).size() == 2);
    CHECK(special_matrices(PrimeField(11)).size() == 6);
    CHECK(special_matrices(PrimeField(13)).size() == 4);
    CHECK(special_matrices(PrimeField(61)).size() == 36);
    for (const auto& s : special_matrices(PrimeField(23))) {
      CHECK((s.kind == SpecialKind::kTwisted) == s.params.has_value());
    }
  }

  TEST_CASE("composition stays in the automorphism group") {
    const PrimeField F(11);
    const LieAlgebra L = build_Lp(F);
    std::vector<BlockAut> gens{gl2_block_aut(F, 2, 1, 0, 3), gl2_block_aut(F, 0, 1, 1, 0), diag_aut(F, 10)};
    for (const auto& q : solve_twisted(F)) gens.push_back(twisted_aut(F, q));
    for (const auto& x : gens) {
      for (const auto& y : gens) {
        const BlockAut xy = compose(F, x, y);
        CHECK(verify_automorphism(L, xy));
      }
    }
    // compose(first, second) applies second first.
    const BlockAut swap = gl2_block_aut(F, 0, 1, 1, 0);
    const BlockAut scale = gl2_block_aut(F, 2, 0, 0, 3);
    const BlockAut sw = compose(F, scale, swap);
    CHECK(sw.top_right == mat3_diag(3, 3, 3));
    CHECK(sw.bottom_left == mat3_diag(2, 2, 2));
  }

  TEST_CASE("exhaustive search of H") {
    for (std::uint64_t p : {5ULL, 7ULL}) {
      const PrimeField F(p);
      const BruteForceH h = brute_force_H(F);
      CHECK(h.count == (p == 5 ? 64 : 72));
      CHECK(h.all_scalar);
      // H = { (alpha M, delta M) : M a special automorphism block }.
      std::set<std::pair<Mat3, Mat3>> expected;
      for (Residue u : F.roots_of_unity(4)) {
        const BlockAut m = diag_aut(F, u);
        for (Residue a = 1; a < p; ++a) {
          for (Residue d = 1; d < p; ++d) expected.insert({mat3_scale(F, a, m.A()), mat3_scale(F, d, m.B())});
        }
      }
      std::set<std::pair<Mat3, Mat3>> got;
      for (const auto& m : h.elements) got.insert(blocks(m));
      CHECK(got.size() == h.count);
      CHECK(got == expected);
    }
    CHECK_THROWS_AS(brute_force_H(PrimeField(11)), SearchBoundExceeded);
  }
}
