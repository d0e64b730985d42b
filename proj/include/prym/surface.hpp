#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "prym/prototypes.hpp"
#include "prym/qfield.hpp"

namespace prym {

struct EdgeRef {
  int poly = -1;
  int edge = -1;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

struct SurfacePoint {
  int poly = -1;
  Vec2 pos = vec2(0, 0);
};

struct MarkedPoint {
  std::string label;
  int poly = -1;
  Vec2 pos = vec2(0, 0);
};

// Convex polygons listed counterclockwise; collinear vertices allowed.
// Edge i runs from vertex i to vertex i+1.  The Prym involution sends
// polygon j onto polygon inv_target[j] by x -> inv_centre[j] - x.
struct TranslationSurface {
  std::string name;
  long D = 0;
  std::vector<std::vector<Vec2>> polygons;
  std::vector<std::vector<EdgeRef>> gluing;
  std::vector<int> inv_target;
  std::vector<Vec2> inv_centre;
  std::vector<MarkedPoint> marked;  // w1, w2, w3 in label order

  int num_polys() const { return static_cast<int>(polygons.size()); }
  int num_edges(int j) const { return static_cast<int>(polygons[j].size()); }
  const Vec2& vertex(int j, int i) const;
  Vec2 edge_vector(EdgeRef e) const;
  EdgeRef partner(EdgeRef e) const { return gluing[e.poly][e.edge]; }
  // translation carrying points of edge e onto the partner edge
  Vec2 glue_translation(EdgeRef e) const;
};

struct SurfaceSpec {
  Model model = Model::A_plus;
  long D = 0;
  long e = 0;
  std::optional<Prototype> proto;  // general (a,b,c,e) for A+/A-
  long d = 0;                      // SQ_Z, MODEL_C, MODEL_D
};

std::string describe(const SurfaceSpec& spec);

TranslationSurface build_surface(const SurfaceSpec& spec);

struct ValidationReport {
  std::vector<std::string> failures;
  int vertex_classes = 0;
  int singular_classes = 0;
  std::vector<int> cone_multiples;  // cone angle / 2pi per vertex class
  int euler = 0;
  int fixed_points = 0;
  QuadNum area;
  bool ok() const { return failures.empty(); }
};

ValidationReport validate_surface(const TranslationSurface& S);
// validate_surface plus the builder cross-validation of horizontal and
// vertical cylinder data for A+/A-/Z
ValidationReport validate_builder_output(const SurfaceSpec& spec, const TranslationSurface& S);

QuadNum area(const TranslationSurface& S);
TranslationSurface apply_matrix(const TranslationSurface& S, const Mat2& M);

// corners (poly, vertex index) grouped by vertex class
std::vector<std::vector<EdgeRef>> vertex_classes(const TranslationSurface& S);
int cone_multiple(const TranslationSurface& S, const std::vector<EdgeRef>& cls);

enum class PointKind { interior, edge, vertex, outside };
struct PointPlace {
  PointKind kind = PointKind::outside;
  int index = -1;  // edge or vertex index
};
PointPlace place_in_polygon(const TranslationSurface& S, int poly, const Vec2& p);

// canonical representative of a point of the quotient surface
SurfacePoint normalize_point(const TranslationSurface& S, const SurfacePoint& p);
bool same_point(const TranslationSurface& S, const SurfacePoint& a, const SurfacePoint& b);
SurfacePoint apply_involution(const TranslationSurface& S, const SurfacePoint& p);

// raw fixed points of the involution, vertices included, each listed once
std::vector<SurfacePoint> involution_fixed_points(const TranslationSurface& S);

struct PrymFixedPoints {
  SurfacePoint s;
  std::array<SurfacePoint, 3> w;
};
PrymFixedPoints prym_fixed_points(const TranslationSurface& S);

SurfacePoint marked_point(const TranslationSurface& S, int label_index);

std::string surface_to_json(const TranslationSurface& S);
TranslationSurface surface_from_json(const std::string& text);
bool surfaces_identical(const TranslationSurface& a, const TranslationSurface& b);

}  // namespace prym
