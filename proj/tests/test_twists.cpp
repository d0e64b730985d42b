#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "prym/invariants.hpp"
#include "prym/twists.hpp"

using namespace prym;

namespace {

TranslationSurface make(Model m, long D, long e, long d = 0) { return build_surface(SurfaceSpec{m, D, e, std::nullopt, d}); }

std::vector<mpz_class> sorted_k(const Multitwist& mt) {
  auto k = mt.k;
  std::sort(k.begin(), k.end());
  return k;
}

IntMat2 imat(long a, long b, long c, long d) { return IntMat2{{{mpz_class(a), mpz_class(b)}, {mpz_class(c), mpz_class(d)}}}; }

}  // namespace

TEST_CASE("A- horizontal multitwist") {
  for (long D : {17L, 41L, 73L, 113L})
    for (long e : reduced_prototypes(D)) {
      long b = (D - e * e) / 8;
      auto S = make(Model::A_minus, D, e);
      auto mt = multitwist(cylinder_decomposition(S, Direction()));
      CHECK(mt.t == QuadNum(b));
      CHECK(sorted_k(mt) == std::vector<mpz_class>{1, b, b});
      CHECK(mt.matrix(0, 0) == QuadNum(1));
      CHECK(mt.matrix(0, 1) == QuadNum(b));
      CHECK(mt.matrix(1, 0) == QuadNum(0));
    }
}

TEST_CASE("Z_17(-3) twist in direction (2,1)") {
  auto S = make(Model::Z, 17, -3);
  auto dec = cylinder_decomposition(S, Direction(2, 1));
  auto mt = multitwist(dec);
  CHECK(sorted_k(mt) == std::vector<mpz_class>{1, 2, 2});
  CHECK(det2(mt.matrix) == QuadNum(1));
  // the twist fixes the direction
  Vec2 v = mt.matrix * vec2(2, 1);
  CHECK(equal2(v, vec2(2, 1)));
  CHECK(twist_permutation(S, dec) == MarkedPermutation::transposition(2, 3));
}

TEST_CASE("one cylinder") {
  auto S = make(Model::A_minus, 25, -1);
  auto mt = multitwist(cylinder_decomposition(S, Direction(1, 1)));
  CHECK(mt.k == std::vector<mpz_class>{1});
}

TEST_CASE("shear direction does not matter") {
  for (long D : {17L, 20L, 33L, 41L, 44L})
    for (long e : reduced_prototypes(D))
      for (Model m : {Model::A_plus, Model::A_minus, Model::Z})
        for (auto dir : {Direction(), Direction(0, 1)}) {
          auto S = make(m, D, e);
          auto dec = cylinder_decomposition(S, dir);
          auto p = twist_permutation(S, dec);
          CHECK(twist_permutation(S, dec, -1) == p);
          CHECK(twist_permutation_by_isomorphism(S, dec) == p);
        }
}

TEST_CASE("the twist is an affine automorphism") {
  auto S = make(Model::A_plus, 41, -3);
  auto dec = cylinder_decomposition(S, Direction(0, 1));
  auto mt = multitwist(dec);
  auto T = apply_matrix(S, mt.matrix);
  CHECK(validate_surface(T).ok());
  CHECK(area(T) == area(S));
  auto Q = make(Model::SQ_Z, 0, -4, 8);
  auto h = hlk_invariant(Q);
  CHECK(h.str() == "(1,[v,v])");
  for (auto d : {Direction(), Direction(0, 1)}) {
    auto m = multitwist(cylinder_decomposition(Q, d)).matrix;
    CHECK(hlk_invariant(apply_matrix(Q, m)).str() == h.str());
  }
}

TEST_CASE("PQ decomposition") {
  auto id = pq_decompose(mat2(1, 0, 0, 1), 20, 2);
  CHECK(id.P == imat(1, 0, 0, 1));
  CHECK(id.Q == imat(0, 0, 0, 0));
  CHECK(id.identity_holds);

  // hand computation: rho/2 = (sqrt 5 - 1)/2, so 1 + sqrt 5 = 2 + 2 rho/2
  auto S = make(Model::Z, 20, -2);
  auto mt = multitwist(cylinder_decomposition(S, Direction()));
  CHECK(mt.t == QuadNum(mpq_class(1), mpq_class(1, 2), 20));
  auto pq = pq_decompose(mt.matrix, 20, canonical_d(20));
  CHECK(pq.P == imat(1, 2, 0, 1));
  CHECK(pq.Q == imat(0, 2, 0, 0));
  CHECK(pq.det_P == 1);
  CHECK(pq.identity_holds);
  CHECK(pq.P_mod2_det == 1);

  CHECK_THROWS_AS(pq_decompose(mat2(QuadNum(mpq_class(1, 3)), 0, 0, 3), 20, 2), EntriesOutsideOrders);
}

TEST_CASE("fr law on twists of Z") {
  for (long D : {20L, 52L, 68L, 116L, 148L})
    for (long e : reduced_prototypes(D)) {
      auto S = make(Model::Z, D, e);
      for (auto dir : {Direction(), Direction(0, 1)}) {
        auto mt = multitwist(cylinder_decomposition(S, dir));
        auto pq = pq_decompose(mt.matrix, D, canonical_d(D));
        CHECK(pq.identity_holds);
        CHECK(pq.P_mod2_det == 1);
        for (int k = 0; k < 3; ++k) {
          auto r = fr_law(mt.matrix, displacement(S, k, 0), D);
          CHECK(r.holds);
        }
      }
    }
}
