#pragma once

#include <string>
#include <vector>

#include "prym/surface.hpp"

namespace prym {

struct Direction {
  QuadNum x, y;
  Direction() : x(1), y(0) {}
  // normalized so the first nonzero coordinate is positive
  Direction(const QuadNum& x, const QuadNum& y);
  std::string str() const;
};

// similarity sending dir to (1, 0); preserves moduli
Mat2 to_horizontal(const Direction& dir);

// horizontal strip of one polygon between consecutive cut heights
struct Strip {
  int poly = -1;
  QuadNum y0, y1;
  int left = -1, right = -1;  // edges carrying the sides
  int next = -1;              // strip across the right side
  int cyl = -1, pos = -1;     // cylinder and position in its ring
};

struct BoundarySegment {
  QuadNum start, length;
  int other_cyl = -1;  // cylinder on the other side
  QuadNum other_start;
};

struct CoreSegment {
  int poly;
  Vec2 a, b;  // original coordinates
};

struct Cylinder {
  QuadNum w, h, m;     // circumference, height, modulus w/h
  Vec2 holonomy;       // of the core, original coordinates
  std::vector<int> strips;
  std::vector<CoreSegment> core;
  QuadNum slope0;      // dx/dy of the first strip's left side
  std::vector<QuadNum> bottom_sing, top_sing;  // singular positions along the cylinder
  std::vector<BoundarySegment> top_segments;   // saddle connections on the top
  QuadNum area() const { return w * h; }
};

// Flat cylinder coordinates: eta is the height above the bottom boundary,
// X the position along the cylinder measured from the bottom-left corner of
// its first strip, sheared so that X is constant along that strip's side.
struct CylCoord {
  int cyl = -1;
  QuadNum X, eta;
  bool boundary = false;  // on a cut; cyl is then the cylinder above
};

struct PointLocation {
  std::string label;
  CylCoord at;
  bool on_core = false;
};

struct CylinderDecomposition {
  Direction dir;
  Mat2 to_horizontal;
  TranslationSurface rotated;  // surface in coordinates where dir is horizontal
  std::vector<std::vector<QuadNum>> cuts;
  std::vector<std::vector<int>> poly_strips;  // per polygon, sorted by y0
  std::vector<Strip> strips;
  std::vector<Cylinder> cylinders;
  std::vector<PointLocation> points;
  long steps = 0;
};

constexpr long kDefaultStepBudget = 100000;

CylinderDecomposition cylinder_decomposition(const TranslationSurface& S, const Direction& dir,
                                             long step_budget = kDefaultStepBudget);

// position of a point given in rotated coordinates
CylCoord locate(const CylinderDecomposition& dec, int poly, const Vec2& p);
CylCoord locate_marked(const CylinderDecomposition& dec, int label_index);

// m_i / m_1 as exact rationals
std::vector<mpq_class> moduli_ratios(const CylinderDecomposition& dec);

QuadNum total_area(const CylinderDecomposition& dec);

}  // namespace prym
