#include "prym/surface.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace prym {

const Vec2& TranslationSurface::vertex(int j, int i) const {
  const auto& P = polygons[j];
  int n = static_cast<int>(P.size());
  return P[((i % n) + n) % n];
}

Vec2 TranslationSurface::edge_vector(EdgeRef e) const {
  return vertex(e.poly, e.edge + 1) - vertex(e.poly, e.edge);
}

Vec2 TranslationSurface::glue_translation(EdgeRef e) const {
  EdgeRef f = partner(e);
  // start of e meets the end of f
  return vertex(f.poly, f.edge + 1) - vertex(e.poly, e.edge);
}

QuadNum area(const TranslationSurface& S) {
  QuadNum total;
  for (int j = 0; j < S.num_polys(); ++j)
    for (int i = 0; i < S.num_edges(j); ++i) total += cross2(S.vertex(j, i), S.vertex(j, i + 1));
  return total / QuadNum(2);
}

TranslationSurface apply_matrix(const TranslationSurface& S, const Mat2& M) {
  QuadNum det = det2(M);
  if (det.sign() <= 0) throw SingularMatrix("need det > 0, got " + det.str());
  TranslationSurface T = S;
  for (auto& P : T.polygons)
    for (auto& v : P) v = M * v;
  for (auto& c : T.inv_centre) c = M * c;
  for (auto& m : T.marked) m.pos = M * m.pos;
  return T;
}

std::vector<std::vector<EdgeRef>> vertex_classes(const TranslationSurface& S) {
  std::map<EdgeRef, bool> seen;
  std::vector<std::vector<EdgeRef>> out;
  for (int j = 0; j < S.num_polys(); ++j)
    for (int i = 0; i < S.num_edges(j); ++i) {
      EdgeRef start{j, i};
      if (seen.count(start)) continue;
      std::vector<EdgeRef> cls;
      EdgeRef c = start;
      do {
        seen[c] = true;
        cls.push_back(c);
        EdgeRef f = S.partner(c);
        if (f.poly < 0) break;
        c = EdgeRef{f.poly, (f.edge + 1) % S.num_edges(f.poly)};
      } while (!(c == start) && cls.size() <= 4096);
      std::sort(cls.begin(), cls.end());
      out.push_back(cls);
    }
  return out;
}

namespace {

// half-plane index of v measured counterclockwise from u
int half_from(const Vec2& u, const Vec2& v) {
  int c = cross2(u, v).sign();
  if (c > 0) return 0;
  if (c == 0 && dot2(u, v).sign() > 0) return 0;
  return 1;
}

// angle(u -> a) < angle(u -> b), both in [0, 2pi)
bool angle_before(const Vec2& u, const Vec2& a, const Vec2& b) {
  int ha = half_from(u, a), hb = half_from(u, b);
  if (ha != hb) return ha < hb;
  return cross2(a, b).sign() > 0;
}

}  // namespace

int cone_multiple(const TranslationSurface& S, const std::vector<EdgeRef>& cls) {
  // each full turn crosses the reference direction once
  const Vec2 r = vec2(1, 0);
  int count = 0;
  for (const auto& c : cls) {
    Vec2 v = S.vertex(c.poly, c.edge);
    Vec2 u = S.vertex(c.poly, c.edge + 1) - v;
    Vec2 w = S.vertex(c.poly, c.edge - 1) - v;
    if (angle_before(u, r, w)) ++count;
  }
  return count;
}

PointPlace place_in_polygon(const TranslationSurface& S, int poly, const Vec2& p) {
  int n = S.num_edges(poly);
  for (int i = 0; i < n; ++i)
    if (equal2(S.vertex(poly, i), p)) return {PointKind::vertex, i};
  bool strict = true;
  for (int i = 0; i < n; ++i) {
    Vec2 a = S.vertex(poly, i);
    Vec2 e = S.vertex(poly, i + 1) - a;
    int c = cross2(e, p - a).sign();
    if (c < 0) return {PointKind::outside, -1};
    if (c == 0) {
      strict = false;
      QuadNum t = dot2(p - a, e);
      if (t.sign() > 0 && t < dot2(e, e)) return {PointKind::edge, i};
    }
  }
  return strict ? PointPlace{PointKind::interior, -1} : PointPlace{PointKind::outside, -1};
}

SurfacePoint normalize_point(const TranslationSurface& S, const SurfacePoint& p) {
  PointPlace pl = place_in_polygon(S, p.poly, p.pos);
  switch (pl.kind) {
    case PointKind::interior:
      return p;
    case PointKind::edge: {
      EdgeRef e{p.poly, pl.index};
      EdgeRef f = S.partner(e);
      if (f < e) return SurfacePoint{f.poly, p.pos + S.glue_translation(e)};
      return p;
    }
    case PointKind::vertex: {
      for (const auto& cls : vertex_classes(S))
        if (std::find(cls.begin(), cls.end(), EdgeRef{p.poly, pl.index}) != cls.end())
          return SurfacePoint{cls.front().poly, S.vertex(cls.front().poly, cls.front().edge)};
      return p;
    }
    case PointKind::outside:
      break;
  }
  std::ostringstream os;
  os << "point (" << p.pos(0) << ", " << p.pos(1) << ") outside polygon " << p.poly;
  throw InadmissibleSpec(os.str());
}

bool same_point(const TranslationSurface& S, const SurfacePoint& a, const SurfacePoint& b) {
  SurfacePoint na = normalize_point(S, a), nb = normalize_point(S, b);
  return na.poly == nb.poly && equal2(na.pos, nb.pos);
}

SurfacePoint apply_involution(const TranslationSurface& S, const SurfacePoint& p) {
  return SurfacePoint{S.inv_target[p.poly], S.inv_centre[p.poly] - p.pos};
}

namespace {

// vertex offset k with vertex(target, k + i) == c - vertex(j, i); -1 if none
int involution_offset(const TranslationSurface& S, int j) {
  int t = S.inv_target[j];
  const Vec2& c = S.inv_centre[j];
  int n = S.num_edges(j);
  if (S.num_edges(t) != n) return -1;
  for (int k = 0; k < n; ++k) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = equal2(S.vertex(t, k + i), c - S.vertex(j, i));
    if (ok) return k;
  }
  return -1;
}

EdgeRef involution_edge(const TranslationSurface& S, EdgeRef e, int offset) {
  int t = S.inv_target[e.poly];
  return EdgeRef{t, (offset + e.edge) % S.num_edges(t)};
}

}  // namespace

std::vector<SurfacePoint> involution_fixed_points(const TranslationSurface& S) {
  std::vector<SurfacePoint> out;
  std::vector<int> offsets(S.num_polys());
  for (int j = 0; j < S.num_polys(); ++j) {
    offsets[j] = involution_offset(S, j);
    if (offsets[j] < 0) throw InadmissibleSpec("involution does not map polygon " + std::to_string(j));
  }
  for (const auto& cls : vertex_classes(S)) {
    EdgeRef c = cls.front();
    EdgeRef img = involution_edge(S, c, offsets[c.poly]);
    if (std::find(cls.begin(), cls.end(), img) != cls.end())
      out.push_back(SurfacePoint{c.poly, S.vertex(c.poly, c.edge)});
  }
  for (int j = 0; j < S.num_polys(); ++j)
    for (int i = 0; i < S.num_edges(j); ++i) {
      EdgeRef e{j, i};
      EdgeRef f = S.partner(e);
      if (f < e) continue;
      EdgeRef ie = involution_edge(S, e, offsets[j]);
      std::optional<Vec2> p;
      const Vec2& c = S.inv_centre[j];
      if (ie == e) p = Vec2(c / QuadNum(2));
      else if (ie == f) p = Vec2((c - S.glue_translation(e)) / QuadNum(2));
      if (!p) continue;
      PointPlace pl = place_in_polygon(S, j, *p);
      if (pl.kind == PointKind::edge && pl.index == i) out.push_back(SurfacePoint{j, *p});
    }
  for (int j = 0; j < S.num_polys(); ++j) {
    if (S.inv_target[j] != j) continue;
    Vec2 p = S.inv_centre[j] / QuadNum(2);
    if (place_in_polygon(S, j, p).kind == PointKind::interior) out.push_back(SurfacePoint{j, p});
  }
  return out;
}

SurfacePoint marked_point(const TranslationSurface& S, int label_index) {
  const auto& m = S.marked.at(label_index);
  return SurfacePoint{m.poly, m.pos};
}

PrymFixedPoints prym_fixed_points(const TranslationSurface& S) {
  auto raw = involution_fixed_points(S);
  if (raw.size() != 4) throw WrongFixedPointCount(std::to_string(raw.size()) + " fixed points");
  PrymFixedPoints out;
  int vertices = 0;
  std::vector<SurfacePoint> regular;
  for (const auto& p : raw) {
    if (place_in_polygon(S, p.poly, p.pos).kind == PointKind::vertex) {
      out.s = p;
      ++vertices;
    } else {
      regular.push_back(p);
    }
  }
  if (vertices != 1 || regular.size() != 3) throw WrongFixedPointCount("expected s plus three regular points");
  if (S.marked.size() != 3) throw WrongFixedPointCount("surface carries no labels w1, w2, w3");
  std::vector<bool> used(3, false);
  for (int k = 0; k < 3; ++k) {
    bool found = false;
    for (int r = 0; r < 3 && !found; ++r)
      if (!used[r] && same_point(S, regular[r], marked_point(S, k))) {
        used[r] = true;
        out.w[k] = normalize_point(S, regular[r]);
        found = true;
      }
    if (!found) throw WrongFixedPointCount("label " + S.marked[k].label + " is not a regular fixed point");
  }
  return out;
}

ValidationReport validate_surface(const TranslationSurface& S) {
  ValidationReport R;
  auto fail = [&](const std::string& s) { R.failures.push_back(s); };
  int F = S.num_polys();
  if (F == 0) {
    fail("no polygons");
    return R;
  }
  if (static_cast<int>(S.gluing.size()) != F || static_cast<int>(S.inv_target.size()) != F ||
      static_cast<int>(S.inv_centre.size()) != F) {
    fail("polygon, gluing and involution tables differ in size");
    return R;
  }
  int edges = 0;
  for (int j = 0; j < F; ++j) {
    int n = S.num_edges(j);
    edges += n;
    if (n < 3 || static_cast<int>(S.gluing[j].size()) != n) {
      fail("polygon " + std::to_string(j) + " malformed");
      return R;
    }
    for (int i = 0; i < n; ++i) {
      Vec2 a = S.edge_vector({j, i}), b = S.edge_vector({j, i + 1});
      if (a(0).is_zero() && a(1).is_zero()) fail("zero-length edge " + std::to_string(j) + ":" + std::to_string(i));
      if (cross2(a, b).sign() < 0) fail("polygon " + std::to_string(j) + " not convex at vertex " + std::to_string(i + 1));
    }
  }
  if (!R.ok()) return R;
  // gluing
  for (int j = 0; j < F; ++j)
    for (int i = 0; i < S.num_edges(j); ++i) {
      EdgeRef e{j, i};
      EdgeRef f = S.partner(e);
      std::string tag = std::to_string(j) + ":" + std::to_string(i);
      if (f.poly < 0 || f.poly >= F || f.edge < 0 || f.edge >= S.num_edges(f.poly)) {
        fail("edge " + tag + " unglued");
        continue;
      }
      if (f == e) fail("edge " + tag + " glued to itself");
      if (!(S.partner(f) == e)) fail("gluing not an involution at " + tag);
      if (!equal2(S.edge_vector(e), -S.edge_vector(f))) fail("edge " + tag + " not a reversed translate of its partner");
    }
  if (!R.ok()) return R;
  R.area = area(S);
  if (R.area.sign() <= 0) fail("area not positive");
  // vertices
  auto classes = vertex_classes(S);
  R.vertex_classes = static_cast<int>(classes.size());
  for (const auto& cls : classes) {
    int m = cone_multiple(S, cls);
    R.cone_multiples.push_back(m);
    if (m != 1) ++R.singular_classes;
  }
  int fives = static_cast<int>(std::count(R.cone_multiples.begin(), R.cone_multiples.end(), 5));
  if (R.singular_classes != 1 || fives != 1) {
    std::ostringstream os;
    os << "cone angles (multiples of 2pi):";
    for (int m : R.cone_multiples) os << " " << m;
    os << "; expected one singularity of angle 10pi";
    fail(os.str());
  }
  R.euler = R.vertex_classes - edges / 2 + F;
  if (R.euler != -4) fail("Euler characteristic " + std::to_string(R.euler) + " != -4");
  // involution
  for (int j = 0; j < F; ++j) {
    int t = S.inv_target[j];
    if (t < 0 || t >= F || S.inv_target[t] != j) {
      fail("involution target table not an involution at " + std::to_string(j));
      return R;
    }
    if (!equal2(S.inv_centre[t], S.inv_centre[j])) fail("involution centres disagree on " + std::to_string(j));
    if (involution_offset(S, j) < 0) fail("involution does not carry polygon " + std::to_string(j) + " onto its target");
  }
  if (!R.ok()) return R;
  for (int j = 0; j < F; ++j)
    for (int i = 0; i < S.num_edges(j); ++i) {
      EdgeRef e{j, i}, f = S.partner(e);
      EdgeRef ie = involution_edge(S, e, involution_offset(S, j));
      EdgeRef jf = involution_edge(S, f, involution_offset(S, f.poly));
      if (!(S.partner(ie) == jf)) {
        fail("involution incompatible with gluing at " + std::to_string(j) + ":" + std::to_string(i));
        continue;
      }
      Vec2 expect = S.inv_centre[f.poly] - S.inv_centre[j] - S.glue_translation(e);
      if (!equal2(S.glue_translation(ie), expect))
        fail("involution translation mismatch at " + std::to_string(j) + ":" + std::to_string(i));
    }
  if (!R.ok()) return R;
  auto fixed = involution_fixed_points(S);
  R.fixed_points = static_cast<int>(fixed.size());
  if (R.fixed_points != 4) fail("involution fixes " + std::to_string(R.fixed_points) + " points, expected 4");
  if (S.marked.size() != 3) {
    fail("expected three marked points");
  } else {
    for (int k = 0; k < 3; ++k) {
      SurfacePoint m = marked_point(S, k);
      if (place_in_polygon(S, m.poly, m.pos).kind == PointKind::outside) {
        fail(S.marked[k].label + " lies outside its polygon");
        continue;
      }
      if (!same_point(S, apply_involution(S, m), m)) fail(S.marked[k].label + " is not fixed by the involution");
      if (place_in_polygon(S, m.poly, m.pos).kind == PointKind::vertex) fail(S.marked[k].label + " sits on a vertex");
      for (int l = 0; l < k; ++l)
        if (same_point(S, m, marked_point(S, l))) fail(S.marked[k].label + " coincides with " + S.marked[l].label);
    }
  }
  return R;
}

bool surfaces_identical(const TranslationSurface& a, const TranslationSurface& b) {
  if (a.D != b.D || a.polygons.size() != b.polygons.size() || a.marked.size() != b.marked.size()) return false;
  for (int j = 0; j < a.num_polys(); ++j) {
    if (a.polygons[j].size() != b.polygons[j].size()) return false;
    for (int i = 0; i < a.num_edges(j); ++i) {
      if (!equal2(a.vertex(j, i), b.vertex(j, i))) return false;
      if (!(a.gluing[j][i] == b.gluing[j][i])) return false;
    }
    if (a.inv_target[j] != b.inv_target[j] || !equal2(a.inv_centre[j], b.inv_centre[j])) return false;
  }
  for (size_t k = 0; k < a.marked.size(); ++k)
    if (a.marked[k].label != b.marked[k].label || a.marked[k].poly != b.marked[k].poly ||
        !equal2(a.marked[k].pos, b.marked[k].pos))
      return false;
  return true;
}

}  // namespace prym
