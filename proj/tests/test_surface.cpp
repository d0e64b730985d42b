#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "prym/cylinders.hpp"
#include "prym/surface.hpp"

using namespace prym;

namespace {

SurfaceSpec spec(Model m, long D, long e, long d = 0) { return SurfaceSpec{m, D, e, std::nullopt, d}; }

bool mentions(const ValidationReport& r, const std::string& what) {
  return std::any_of(r.failures.begin(), r.failures.end(),
                     [&](const std::string& f) { return f.find(what) != std::string::npos; });
}

std::vector<QuadNum> sorted_moduli(const CylinderDecomposition& dec) {
  std::vector<QuadNum> m;
  for (const auto& c : dec.cylinders) m.push_back(c.m);
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

TEST_CASE("every builder validates") {
  for (long D = 5; D <= 200; ++D) {
    if (!is_discriminant(D) || locus_status(D) == LocusStatus::empty) continue;
    for (long e : reduced_prototypes(D))
      for (Model m : {Model::A_plus, Model::A_minus, Model::Z}) {
        auto sp = spec(m, D, e);
        auto r = validate_builder_output(sp, build_surface(sp));
        INFO(describe(sp));
        for (const auto& f : r.failures) INFO(f);
        CHECK(r.ok());
      }
  }
  for (long d = 6; d <= 16; d += 2)
    for (long e : reduced_prototypes(d * d)) {
      auto sp = spec(Model::SQ_Z, 0, e, d);
      CHECK(validate_builder_output(sp, build_surface(sp)).ok());
    }
  CHECK(validate_surface(build_surface(spec(Model::B8, 8, 0))).ok());
  for (long d = 5; d <= 10; ++d) {
    CHECK(validate_surface(build_surface(spec(Model::MODEL_C, 0, 0, d))).ok());
    CHECK(validate_surface(build_surface(spec(Model::MODEL_D, 0, 0, d))).ok());
  }
}

TEST_CASE("general prototypes") {
  for (Model m : {Model::A_plus, Model::A_minus}) {
    SurfaceSpec sp{m, 73, -3, Prototype(1, 4, 2, -3), 0};
    auto S = build_surface(sp);
    CHECK(S.D == 73);
    auto r = validate_builder_output(sp, S);
    for (const auto& f : r.failures) INFO(f);
    CHECK(r.ok());
  }
  CHECK_THROWS_AS(build_surface(spec(Model::A_plus, 17, 5)), InadmissibleSpec);
  CHECK_THROWS_AS(build_surface(spec(Model::A_plus, 16, -2)), Error);
}

TEST_CASE("A+ horizontal data for D = 73") {
  auto S = build_surface(spec(Model::A_plus, 73, -3));
  auto dec = cylinder_decomposition(S, Direction());
  CHECK(sorted_moduli(dec) == std::vector<QuadNum>{QuadNum(1), QuadNum(8), QuadNum(8)});
  CHECK(total_area(dec) == area(S));
}

TEST_CASE("a reversed gluing breaks the cone angle") {
  auto S = build_surface(spec(Model::A_plus, 17, -3));
  REQUIRE(validate_surface(S).ok());
  // re-pair two glued couples that carry the same edge vector
  bool done = false;
  for (int j1 = 0; j1 < S.num_polys() && !done; ++j1)
    for (int i1 = 0; i1 < S.num_edges(j1) && !done; ++i1)
      for (int j2 = 0; j2 < S.num_polys() && !done; ++j2)
        for (int i2 = 0; i2 < S.num_edges(j2) && !done; ++i2) {
          EdgeRef a{j1, i1}, b{j2, i2};
          if (!(a < b) || S.partner(a) == b) continue;
          if (!equal2(S.edge_vector(a), S.edge_vector(b))) continue;
          EdgeRef fa = S.partner(a), fb = S.partner(b);
          if (fa == b || fb == a) continue;
          auto T = S;
          T.gluing[a.poly][a.edge] = fb;
          T.gluing[fb.poly][fb.edge] = a;
          T.gluing[b.poly][b.edge] = fa;
          T.gluing[fa.poly][fa.edge] = b;
          auto r = validate_surface(T);
          CHECK_FALSE(r.ok());
          if (mentions(r, "cone angles")) done = true;
        }
  CHECK(done);
}

TEST_CASE("A- with w1 off the long core fails the builder check") {
  auto sp = spec(Model::A_minus, 17, -3);
  auto S = build_surface(sp);
  REQUIRE(validate_builder_output(sp, S).ok());
  std::swap(S.marked[0].poly, S.marked[2].poly);
  std::swap(S.marked[0].pos, S.marked[2].pos);
  auto r = validate_builder_output(sp, S);
  CHECK_FALSE(r.ok());
  CHECK(mentions(r, "w1 and w2"));
}

TEST_CASE("a marked point that is not fixed is rejected") {
  auto S = build_surface(spec(Model::A_plus, 17, -3));
  S.marked[1].pos = S.marked[1].pos + vec2(QuadNum(mpq_class(1, 100)), 0);
  auto r = validate_surface(S);
  CHECK(mentions(r, "not fixed"));
}

TEST_CASE("apply_matrix") {
  auto S = build_surface(spec(Model::A_minus, 41, -3));
  CHECK(surfaces_identical(apply_matrix(S, mat2(1, 0, 0, 1)), S));
  Mat2 M = mat2(2, 1, 1, 1);
  Mat2 N = mat2(QuadNum(3), QuadNum::sqrt_of(41), 0, QuadNum(mpq_class(1, 2)));
  for (const Mat2& A : {M, N}) {
    auto T = apply_matrix(S, A);
    CHECK(area(T) == area(S) * det2(A));
    CHECK(validate_surface(T).ok());
    CHECK(surfaces_identical(apply_matrix(T, inverse2(A)), S));
  }
  CHECK_THROWS_AS(apply_matrix(S, mat2(0, 1, 1, 0)), SingularMatrix);
  CHECK_THROWS_AS(apply_matrix(S, mat2(1, 2, 2, 4)), SingularMatrix);
}

TEST_CASE("Z is the stretched A-") {
  for (long D : {17L, 41L, 73L, 20L})
    for (long e : reduced_prototypes(D)) {
      auto A = build_surface(spec(Model::A_minus, D, e));
      auto Z = build_surface(spec(Model::Z, D, e));
      auto T = apply_matrix(A, mat2(QuadNum(2) / lambda(D, e), 0, 0, 1));
      T.name = Z.name;
      CHECK(surfaces_identical(T, Z));
    }
}

TEST_CASE("fixed points and topology") {
  for (Model m : {Model::A_plus, Model::A_minus, Model::Z}) {
    auto S = build_surface(spec(m, 33, -5));
    auto r = validate_surface(S);
    CHECK(r.euler == -4);
    CHECK(r.fixed_points == 4);
    CHECK(r.singular_classes == 1);
    CHECK(std::count(r.cone_multiples.begin(), r.cone_multiples.end(), 5) == 1);
    auto F = prym_fixed_points(S);
    for (int k = 0; k < 3; ++k) CHECK(same_point(S, F.w[k], marked_point(S, k)));
    CHECK(place_in_polygon(S, F.s.poly, F.s.pos).kind == PointKind::vertex);
    auto img = apply_involution(S, apply_involution(S, SurfacePoint{0, S.polygons[0][0] / QuadNum(3) +
                                                                          S.polygons[0][1] / QuadNum(3) +
                                                                          S.polygons[0][2] / QuadNum(3)}));
    CHECK(same_point(S, img, SurfacePoint{0, S.polygons[0][0] / QuadNum(3) + S.polygons[0][1] / QuadNum(3) +
                                                 S.polygons[0][2] / QuadNum(3)}));
  }
  auto S = build_surface(spec(Model::A_plus, 17, -3));
  S.marked.pop_back();
  CHECK_THROWS_AS(prym_fixed_points(S), WrongFixedPointCount);
}

TEST_CASE("JSON round trip") {
  for (auto sp : {spec(Model::Z, 17, -3), spec(Model::A_plus, 68, -2), spec(Model::B8, 8, 0),
                  spec(Model::MODEL_C, 0, 0, 7)}) {
    auto S = build_surface(sp);
    std::string text = surface_to_json(S);
    auto T = surface_from_json(text);
    CHECK(surfaces_identical(S, T));
    CHECK(surface_to_json(T) == text);
  }
  CHECK_THROWS_AS(surface_from_json("{"), FormatError);
  CHECK_THROWS_AS(surface_from_json("{\"name\": 3}"), FormatError);
  CHECK_THROWS_AS(surface_from_json("[]"), FormatError);
}

TEST_CASE("B8 cylinder data") {
  auto S = build_surface(spec(Model::B8, 8, 0));
  auto h = cylinder_decomposition(S, Direction());
  for (const auto& c : h.cylinders) CHECK(c.m == QuadNum(1));
  auto v = cylinder_decomposition(S, Direction(0, 1));
  // the vertical moduli are all 3 + sqrt 8, not 1
  QuadNum want(mpq_class(3), mpq_class(1), 8);
  for (const auto& c : v.cylinders) CHECK(c.m == want);
  CHECK(total_area(v) == area(S));
}
