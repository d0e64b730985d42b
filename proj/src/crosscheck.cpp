#include <algorithm>

#include "prym/cylinders.hpp"

namespace prym {

namespace {

std::vector<QuadNum> sorted_moduli(const CylinderDecomposition& dec) {
  std::vector<QuadNum> m;
  for (const auto& c : dec.cylinders) m.push_back(c.m);
  std::sort(m.begin(), m.end());
  return m;
}

std::string join(const std::vector<QuadNum>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "}";
}

void expect_moduli(ValidationReport& r, const std::string& what, const CylinderDecomposition& dec,
                   std::vector<QuadNum> want) {
  std::sort(want.begin(), want.end());
  auto got = sorted_moduli(dec);
  if (got.size() != want.size() || !std::equal(got.begin(), got.end(), want.begin()))
    r.failures.push_back(what + " moduli " + join(got) + ", expected " + join(want));
}

// moduli up to a common factor
void expect_ratios(ValidationReport& r, const std::string& what, const CylinderDecomposition& dec,
                   std::vector<QuadNum> want) {
  auto got = sorted_moduli(dec);
  std::sort(want.begin(), want.end());
  if (got.size() != want.size()) {
    r.failures.push_back(what + " has " + std::to_string(got.size()) + " cylinders");
    return;
  }
  QuadNum f = got.front() / want.front();
  for (size_t i = 0; i < got.size(); ++i)
    if (got[i] != f * want[i]) {
      r.failures.push_back(what + " moduli " + join(got) + " not proportional to " + join(want));
      return;
    }
}

void expect_vertical_ratio(ValidationReport& r, const CylinderDecomposition& dec, long ratio) {
  auto m = sorted_moduli(dec);
  if (m.size() != 3) {
    r.failures.push_back("vertical decomposition has " + std::to_string(m.size()) + " cylinders");
    return;
  }
  // a pair of equal moduli and a third one; their ratio, larger over smaller
  if (m[0] != m[1] && m[1] != m[2]) {
    r.failures.push_back("vertical moduli " + join(m) + " have no equal pair");
    return;
  }
  if (m[2] / m[0] != QuadNum(ratio))
    r.failures.push_back("vertical moduli " + join(m) + " do not have ratio " + std::to_string(ratio));
}

}  // namespace

ValidationReport validate_builder_output(const SurfaceSpec& spec, const TranslationSurface& S) {
  ValidationReport r = validate_surface(S);
  if (!r.ok()) return r;
  if (spec.model != Model::A_plus && spec.model != Model::A_minus && spec.model != Model::Z &&
      spec.model != Model::SQ_Z)
    return r;
  const long D = spec.model == Model::SQ_Z ? spec.d * spec.d : spec.D;
  Prototype P = spec.proto ? *spec.proto : Prototype::reduced(D, spec.e);
  const QuadNum bc = QuadNum(mpq_class(P.b, P.c));
  try {
    auto hor = cylinder_decomposition(S, Direction(1, 0));
    if (total_area(hor) != r.area) r.failures.push_back("horizontal cylinder areas do not sum to the area");
    if (spec.model == Model::A_plus) expect_moduli(r, "horizontal", hor, {bc, bc, 1});
    else if (spec.model == Model::A_minus) expect_moduli(r, "horizontal", hor, {bc, 1, 1});
    else expect_ratios(r, "horizontal", hor, {bc, 1, 1});

    // w1, w2 on one core (the short one for A+, the long one otherwise), w3 on a saddle connection
    const auto& pts = hor.points;
    if (pts.size() != 3) {
      r.failures.push_back("expected three marked points");
      return r;
    }
    if (!pts[0].on_core || !pts[1].on_core || pts[0].at.cyl != pts[1].at.cyl)
      r.failures.push_back("w1 and w2 do not lie on a common horizontal core curve");
    else {
      const QuadNum& m = hor.cylinders[pts[0].at.cyl].m;
      auto ms = sorted_moduli(hor);
      bool want_short = spec.model == Model::A_plus;
      if (want_short ? m != ms.front() : m != ms.back())
        r.failures.push_back(std::string("w1, w2 not in the ") + (want_short ? "short" : "long") + " cylinder");
    }
    if (!pts[2].at.boundary) r.failures.push_back("w3 is not on a horizontal saddle connection");

    if (P.is_reduced() && spec.model != Model::Z && spec.model != Model::SQ_Z) {
      auto ver = cylinder_decomposition(S, Direction(0, 1));
      if (total_area(ver) != r.area) r.failures.push_back("vertical cylinder areas do not sum to the area");
      expect_vertical_ratio(r, ver, P.b - P.e - 2);
    }
  } catch (const Error& ex) {
    r.failures.push_back(ex.what());
  }
  return r;
}

}  // namespace prym
