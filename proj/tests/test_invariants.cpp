#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prym/invariants.hpp"
#include "prym/twists.hpp"

using namespace prym;

namespace {

TranslationSurface make(Model m, long D, long e, long d = 0) { return build_surface(SurfaceSpec{m, D, e, std::nullopt, d}); }

using FrPair = std::pair<mpq_class, mpq_class>;

}  // namespace

TEST_CASE("HLK of the square-tiled obstruction surfaces") {
  for (long d = 6; d <= 22; d += 2)
    for (long e : reduced_prototypes(d * d)) {
      auto h = hlk_invariant(make(Model::SQ_Z, 0, e, d));
      INFO("d=" << d << " e=" << e);
      CHECK(h.str() == "(1,[v,v])");
      CHECK(h.n_integral == 1);
      CHECK(h.per_point == std::array<char, 3>{'v', 'v', '0'});
      CHECK(h.allowed().str() == "sym2({1,2})");
      CHECK(h.orbit_str() == "(1,[2,0,0])");
    }
}

TEST_CASE("HLK of the appendix models") {
  for (long d : {5L, 7L, 9L, 11L}) {
    CHECK(hlk_invariant(make(Model::MODEL_C, 0, 0, d)).str() == "(3,[])");
    auto h = hlk_invariant(make(Model::MODEL_D, 0, 0, d));
    CHECK(h.str() == "(0,[h,v,c])");
    CHECK(h.allowed().tag == SubgroupClass::Tag::trivial);
  }
  for (long d : {6L, 8L, 10L}) {
    auto c = hlk_invariant(make(Model::MODEL_C, 0, 0, d));
    auto m = hlk_invariant(make(Model::MODEL_D, 0, 0, d));
    CHECK(c.orbit_str() == "(1,[2,0,0])");
    CHECK(m.orbit_str() == c.orbit_str());
  }
}

TEST_CASE("HLK errors") {
  CHECK_THROWS_AS(hlk_invariant(make(Model::A_plus, 17, -3)), NotSquareTiled);
  auto S = apply_matrix(make(Model::SQ_Z, 0, -2, 6), mat2(2, 0, 0, 1));
  CHECK_THROWS_AS(hlk_invariant(S), NotPrimitive);
}

TEST_CASE("HLK is preserved by the affine generators") {
  for (long d : {6L, 8L, 10L})
    for (long e : reduced_prototypes(d * d)) {
      auto S = make(Model::SQ_Z, 0, e, d);
      auto h = hlk_invariant(S);
      for (auto dir : {Direction(), Direction(0, 1)}) {
        auto dec = cylinder_decomposition(S, dir);
        auto p = twist_permutation(S, dec);
        // the generator only permutes points of equal type
        for (int k = 0; k < 3; ++k) CHECK(h.per_point[p(k)] == h.per_point[k]);
        auto T = apply_matrix(S, multitwist(dec).matrix);
        CHECK(hlk_invariant(T).orbit_str() == h.orbit_str());
      }
    }
}

TEST_CASE("restricted case") {
  CHECK(in_restricted_case(20));
  CHECK(in_restricted_case(68));
  CHECK(in_restricted_case(32));
  CHECK_FALSE(in_restricted_case(24));
  CHECK_FALSE(in_restricted_case(17));
  CHECK_FALSE(in_restricted_case(36));
  CHECK_FALSE(in_restricted_case(16));
  CHECK_THROWS_AS(fr_classes(17, -3), OutsideRestrictedCase);
  CHECK_THROWS_AS(fr_classes(36, -2), OutsideRestrictedCase);
}

TEST_CASE("fr classes") {
  auto f = fr_classes(20, -2);
  FrPair half{0, mpq_class(1, 2)}, zero{0, 0};
  CHECK(f.cls[0] == half);
  CHECK(f.cls[1] == half);
  CHECK(f.cls[2] == zero);
  CHECK(f.upper.str() == "sym2({1,2})");
  for (long D = 20; D <= 300; D += 4) {
    if (!in_restricted_case(D)) continue;
    for (long e : reduced_prototypes(D)) {
      auto g = fr_classes(D, e);
      CHECK(g.upper.str() == "sym2({1,2})");
      for (int k = 0; k < 3; ++k) CHECK(fr_pair(g.v[k], D) == g.cls[k]);
    }
  }
}

TEST_CASE("fr does not depend on the path") {
  for (long D : {20L, 52L, 116L})
    for (long e : reduced_prototypes(D)) {
      auto S = make(Model::Z, D, e);
      for (int k = 0; k < 3; ++k) {
        auto ref = fr_pair(displacement(S, k, 0), D);
        int poly = S.marked[k].poly;
        for (int i = 1; i < S.num_edges(poly); ++i) CHECK(fr_pair(displacement(S, k, i), D) == ref);
      }
    }
}

TEST_CASE("fr law for rational matrices") {
  // with A in SL(2,Z) the law reduces to the reduction of P = A mod 2
  Mat2 A = mat2(1, 1, 0, 1);
  auto r = fr_law(A, vec2(0, QuadNum(mpq_class(1, 2))), 20);
  CHECK(r.holds);
  CHECK(r.lhs == r.rhs);
}
