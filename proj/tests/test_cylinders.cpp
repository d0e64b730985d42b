#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "prym/cylinders.hpp"
#include "prym/twists.hpp"

using namespace prym;

namespace {

TranslationSurface make(Model m, long D, long e, long d = 0) { return build_surface(SurfaceSpec{m, D, e, std::nullopt, d}); }

std::vector<QuadNum> sorted_moduli(const CylinderDecomposition& dec) {
  std::vector<QuadNum> m;
  for (const auto& c : dec.cylinders) m.push_back(c.m);
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

TEST_CASE("Z_17(-3) in direction (2,1)") {
  auto S = make(Model::Z, 17, -3);
  auto dec = cylinder_decomposition(S, Direction(2, 1));
  REQUIRE(dec.cylinders.size() == 3);
  QuadNum small(mpq_class(10), mpq_class(5, 2), 17), big(mpq_class(20), mpq_class(5), 17);
  CHECK(sorted_moduli(dec) == std::vector<QuadNum>{small, small, big});
  auto r = moduli_ratios(dec);
  std::sort(r.begin(), r.end());
  CHECK(r.back() / r.front() == 2);
  CHECK(total_area(dec) == area(dec.rotated));
  CHECK(area(dec.rotated) * QuadNum(5) == area(S));
  CHECK(twist_permutation(S, dec) == MarkedPermutation::transposition(2, 3));
}

TEST_CASE("A-_25(-1) in direction (1,1) is one cylinder") {
  auto S = make(Model::A_minus, 25, -1);
  auto dec = cylinder_decomposition(S, Direction(1, 1));
  REQUIRE(dec.cylinders.size() == 1);
  CHECK(total_area(dec) == area(dec.rotated));
  REQUIRE(dec.points.size() == 3);
  CHECK(dec.points[0].on_core);
  CHECK(dec.points[2].on_core);
  CHECK_FALSE(dec.points[1].on_core);
  CHECK(twist_permutation(S, dec) == MarkedPermutation::transposition(1, 3));
}

TEST_CASE("A+_73(-3) vertical moduli") {
  auto S = make(Model::A_plus, 73, -3);
  auto dec = cylinder_decomposition(S, Direction(0, 1));
  QuadNum num(mpq_class(19), mpq_class(1), 73);
  auto m = sorted_moduli(dec);
  REQUIRE(m.size() == 3);
  CHECK(m[0] == num / QuadNum(144));
  CHECK(m[1] == num / QuadNum(144));
  CHECK(m[2] == num / QuadNum(16));
  CHECK(m[2] / m[0] == QuadNum(9));
}

TEST_CASE("cylinder areas sum to the surface area") {
  for (long D : {17L, 20L, 28L, 41L, 89L})
    for (long e : reduced_prototypes(D))
      for (Model mo : {Model::A_plus, Model::A_minus, Model::Z}) {
        auto S = make(mo, D, e);
        for (auto dir : {Direction(), Direction(0, 1), Direction(1, 1)}) {
          try {
            auto dec = cylinder_decomposition(S, dir);
            CHECK(total_area(dec) == area(dec.rotated));
            for (const auto& c : dec.cylinders) {
              CHECK(c.w.sign() > 0);
              CHECK(c.h.sign() > 0);
              CHECK(c.m == c.w / c.h);
            }
          } catch (const NonPeriodic&) {
          } catch (const BudgetExceeded&) {
          }
        }
      }
}

TEST_CASE("budget and periodicity errors") {
  auto S = make(Model::Z, 17, -3);
  long used = cylinder_decomposition(S, Direction(2, 1)).steps;
  REQUIRE(used > 0);
  CHECK_THROWS_AS(cylinder_decomposition(S, Direction(2, 1), 0), BudgetExceeded);
  CHECK_THROWS_AS(cylinder_decomposition(S, Direction(2, 1), used - 1), BudgetExceeded);
  CHECK_NOTHROW(cylinder_decomposition(S, Direction(2, 1), used));
  auto T = make(Model::SQ_Z, 0, -2, 6);
  CHECK_THROWS_AS(cylinder_decomposition(T, Direction(QuadNum(1), QuadNum::sqrt_of(2)), 5000), Error);
}

TEST_CASE("decomposition is equivariant") {
  auto S = make(Model::A_minus, 41, -3);
  Mat2 M = mat2(2, 1, 1, 1);
  auto T = apply_matrix(S, M);
  for (auto v : {vec2(1, 0), vec2(0, 1), vec2(1, 1)}) {
    Vec2 w = M * v;
    auto a = cylinder_decomposition(S, Direction(v(0), v(1)));
    auto b = cylinder_decomposition(T, Direction(w(0), w(1)));
    CHECK(a.cylinders.size() == b.cylinders.size());
    auto ra = moduli_ratios(a), rb = moduli_ratios(b);
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    CHECK(ra == rb);
    for (size_t k = 0; k < 3; ++k) CHECK(a.points[k].on_core == b.points[k].on_core);
  }
}

TEST_CASE("marked point locations in the horizontal direction") {
  auto S = make(Model::A_plus, 17, -3);
  auto dec = cylinder_decomposition(S, Direction());
  REQUIRE(dec.points.size() == 3);
  CHECK(dec.points[0].on_core);
  CHECK(dec.points[1].on_core);
  CHECK(dec.points[0].at.cyl == dec.points[1].at.cyl);
  CHECK(dec.points[2].at.boundary);
  auto c = locate_marked(dec, 0);
  CHECK(c.eta * QuadNum(2) == dec.cylinders[c.cyl].h);
}
