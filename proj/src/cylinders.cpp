#include "prym/cylinders.hpp"

#include <algorithm>
#include <deque>

namespace prym {

Direction::Direction(const QuadNum& x_, const QuadNum& y_) : x(x_), y(y_) {
  if (x.is_zero() && y.is_zero()) throw InadmissibleSpec("zero direction");
  if (x.sign() < 0 || (x.is_zero() && y.sign() < 0)) {
    x = -x;
    y = -y;
  }
}

std::string Direction::str() const { return "(" + x.str() + "," + y.str() + ")"; }

Mat2 to_horizontal(const Direction& dir) {
  QuadNum n = dir.x * dir.x + dir.y * dir.y;
  return mat2(dir.x / n, dir.y / n, -dir.y / n, dir.x / n);
}

namespace {

QuadNum x_on_edge(const TranslationSurface& S, int j, int i, const QuadNum& y) {
  const Vec2& a = S.vertex(j, i);
  const Vec2& b = S.vertex(j, i + 1);
  return a(0) + (y - a(1)) * (b(0) - a(0)) / (b(1) - a(1));
}

QuadNum edge_slope(const TranslationSurface& S, int j, int i) {
  Vec2 e = S.edge_vector({j, i});
  return e(0) / e(1);
}

bool insert_sorted(std::vector<QuadNum>& v, const QuadNum& y) {
  auto it = std::lower_bound(v.begin(), v.end(), y);
  if (it != v.end() && *it == y) return false;
  v.insert(it, y);
  return true;
}

int find_sorted(const std::vector<QuadNum>& v, const QuadNum& y) {
  auto it = std::lower_bound(v.begin(), v.end(), y);
  if (it != v.end() && *it == y) return static_cast<int>(it - v.begin());
  return -1;
}

struct Geometry {
  const CylinderDecomposition& dec;
  const TranslationSurface& S;
  explicit Geometry(const CylinderDecomposition& d) : dec(d), S(d.rotated) {}

  QuadNum xl(const Strip& s, const QuadNum& y) const { return x_on_edge(S, s.poly, s.left, y); }
  QuadNum xr(const Strip& s, const QuadNum& y) const { return x_on_edge(S, s.poly, s.right, y); }
  QuadNum width(const Strip& s, const QuadNum& eta) const {
    QuadNum y = s.y0 + eta;
    return xr(s, y) - xl(s, y);
  }
  QuadNum cum(int cyl, int pos, const QuadNum& eta) const {
    QuadNum c;
    const auto& ring = dec.cylinders[cyl].strips;
    for (int r = 0; r < pos; ++r) c += width(dec.strips[ring[r]], eta);
    return c;
  }
  CylCoord coords(int strip, const Vec2& p) const {
    const Strip& s = dec.strips[strip];
    const Cylinder& C = dec.cylinders[s.cyl];
    CylCoord c;
    c.cyl = s.cyl;
    c.eta = p(1) - s.y0;
    QuadNum X = cum(s.cyl, s.pos, c.eta) + (p(0) - xl(s, p(1))) + C.slope0 * c.eta;
    c.X = fmod_pos(X, C.w);
    return c;
  }
  int strip_starting_at(int poly, const QuadNum& y) const {
    const auto& ps = dec.poly_strips[poly];
    auto it = std::lower_bound(ps.begin(), ps.end(), y,
                               [&](int s, const QuadNum& v) { return dec.strips[s].y0 < v; });
    if (it != ps.end() && dec.strips[*it].y0 == y) return *it;
    return -1;
  }
  // point on a cut: coordinates in the cylinder above it
  CylCoord upward(int poly, const Vec2& p) const {
    int s = strip_starting_at(poly, p(1));
    if (s >= 0) {
      const Strip& st = dec.strips[s];
      if (xl(st, p(1)) <= p(0) && p(0) <= xr(st, p(1))) {
        CylCoord c = coords(s, p);
        c.boundary = true;
        return c;
      }
    }
    PointPlace pl = place_in_polygon(S, poly, p);
    if (pl.kind != PointKind::edge) throw InadmissibleSpec("cannot move a boundary point upward");
    EdgeRef e{poly, pl.index};
    EdgeRef f = S.partner(e);
    Vec2 q = p + S.glue_translation(e);
    int t = strip_starting_at(f.poly, q(1));
    if (t < 0) throw InadmissibleSpec("no strip above boundary point");
    CylCoord c = coords(t, q);
    c.boundary = true;
    return c;
  }
};

void dedupe(std::vector<QuadNum>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

CylinderDecomposition cylinder_decomposition(const TranslationSurface& S, const Direction& dir, long step_budget) {
  CylinderDecomposition dec;
  dec.dir = dir;
  dec.to_horizontal = to_horizontal(dir);
  dec.rotated = apply_matrix(S, dec.to_horizontal);
  const TranslationSurface& R = dec.rotated;
  for (const auto& cls : vertex_classes(R))
    if (cone_multiple(R, cls) == 1) throw InadmissibleSpec("surface has a regular vertex");

  // cut heights: separatrices through the singularity, propagated across edges
  const int F = R.num_polys();
  dec.cuts.assign(F, {});
  std::deque<std::pair<int, QuadNum>> work;
  for (int j = 0; j < F; ++j)
    for (const auto& v : R.polygons[j])
      if (insert_sorted(dec.cuts[j], v(1))) work.emplace_back(j, v(1));
  long steps = 0;
  while (!work.empty()) {
    auto [j, y] = work.front();
    work.pop_front();
    for (int i = 0; i < R.num_edges(j); ++i) {
      const Vec2& a = R.vertex(j, i);
      const Vec2& b = R.vertex(j, i + 1);
      if (a(1) == b(1)) continue;
      const QuadNum& lo = a(1) < b(1) ? a(1) : b(1);
      const QuadNum& hi = a(1) < b(1) ? b(1) : a(1);
      if (!(lo < y && y < hi)) continue;
      if (++steps > step_budget)
        throw BudgetExceeded("direction " + dir.str() + " not closed after " + std::to_string(step_budget) + " crossings");
      EdgeRef f = R.partner({j, i});
      QuadNum y2 = y + R.glue_translation({j, i})(1);
      if (insert_sorted(dec.cuts[f.poly], y2)) work.emplace_back(f.poly, y2);
    }
  }
  dec.steps = steps;

  // strips
  dec.poly_strips.assign(F, {});
  for (int j = 0; j < F; ++j) {
    const auto& cy = dec.cuts[j];
    for (size_t k = 0; k + 1 < cy.size(); ++k) {
      Strip s;
      s.poly = j;
      s.y0 = cy[k];
      s.y1 = cy[k + 1];
      for (int i = 0; i < R.num_edges(j); ++i) {
        const Vec2& a = R.vertex(j, i);
        const Vec2& b = R.vertex(j, i + 1);
        int dy = (b(1) - a(1)).sign();
        if (dy < 0 && b(1) <= s.y0 && s.y1 <= a(1)) s.left = i;
        if (dy > 0 && a(1) <= s.y0 && s.y1 <= b(1)) s.right = i;
      }
      if (s.left < 0 || s.right < 0) throw InadmissibleSpec("polygon " + std::to_string(j) + " is not convex");
      dec.poly_strips[j].push_back(static_cast<int>(dec.strips.size()));
      dec.strips.push_back(s);
    }
  }
  Geometry G(dec);
  for (auto& s : dec.strips) {
    EdgeRef f = R.partner({s.poly, s.right});
    QuadNum y = s.y0 + R.glue_translation({s.poly, s.right})(1);
    int t = G.strip_starting_at(f.poly, y);
    if (t < 0 || dec.strips[t].left != f.edge) throw NonPeriodic("strip boundary does not continue across an edge");
    s.next = t;
  }

  // rings of strips are the cylinders
  for (size_t start = 0; start < dec.strips.size(); ++start) {
    if (dec.strips[start].cyl >= 0) continue;
    Cylinder C;
    int cid = static_cast<int>(dec.cylinders.size());
    int s = static_cast<int>(start);
    do {
      dec.strips[s].cyl = cid;
      dec.strips[s].pos = static_cast<int>(C.strips.size());
      C.strips.push_back(s);
      s = dec.strips[s].next;
      if (C.strips.size() > dec.strips.size()) throw NonPeriodic("strip chain does not close");
    } while (s != static_cast<int>(start));
    const Strip& s0 = dec.strips[C.strips.front()];
    C.h = s0.y1 - s0.y0;
    for (int k : C.strips)
      if (dec.strips[k].y1 - dec.strips[k].y0 != C.h) throw NonPeriodic("ring of strips with unequal heights");
    C.slope0 = edge_slope(R, s0.poly, s0.left);
    dec.cylinders.push_back(C);
  }
  Mat2 back = inverse2(dec.to_horizontal);
  for (int c = 0; c < static_cast<int>(dec.cylinders.size()); ++c) {
    Cylinder& C = dec.cylinders[c];
    QuadNum half = C.h / QuadNum(2);
    C.w = G.cum(c, static_cast<int>(C.strips.size()), half);
    if (G.cum(c, static_cast<int>(C.strips.size()), 0) != C.w) throw NonPeriodic("cylinder circumference varies");
    C.m = C.w / C.h;
    C.holonomy = back * vec2(C.w, 0);
    for (int k : C.strips) {
      const Strip& s = dec.strips[k];
      QuadNum y = s.y0 + half;
      C.core.push_back({s.poly, back * vec2(G.xl(s, y), y), back * vec2(G.xr(s, y), y)});
    }
  }
  for (int c = 0; c < static_cast<int>(dec.cylinders.size()); ++c) {
    Cylinder& C = dec.cylinders[c];
    for (int r = 0; r < static_cast<int>(C.strips.size()); ++r) {
      const Strip& s = dec.strips[C.strips[r]];
      for (const auto& v : R.polygons[s.poly]) {
        if (v(1) == s.y0 && G.xl(s, s.y0) <= v(0) && v(0) <= G.xr(s, s.y0))
          C.bottom_sing.push_back(fmod_pos(G.cum(c, r, 0) + v(0) - G.xl(s, s.y0), C.w));
        if (v(1) == s.y1 && G.xl(s, s.y1) <= v(0) && v(0) <= G.xr(s, s.y1))
          C.top_sing.push_back(fmod_pos(G.cum(c, r, C.h) + v(0) - G.xl(s, s.y1) + C.slope0 * C.h, C.w));
      }
    }
    dedupe(C.bottom_sing);
    dedupe(C.top_sing);
    if (C.bottom_sing.empty() || C.top_sing.empty()) throw NonPeriodic("cylinder boundary without singular point");
  }
  for (int c = 0; c < static_cast<int>(dec.cylinders.size()); ++c) {
    Cylinder& C = dec.cylinders[c];
    const auto& t = C.top_sing;
    for (size_t a = 0; a < t.size(); ++a) {
      QuadNum start = t[a];
      QuadNum end = a + 1 < t.size() ? t[a + 1] : t[0] + C.w;
      QuadNum mid = (start + end) / QuadNum(2);
      bool found = false;
      for (int r = 0; r < static_cast<int>(C.strips.size()) && !found; ++r) {
        const Strip& s = dec.strips[C.strips[r]];
        QuadNum base = G.cum(c, r, C.h) + C.slope0 * C.h;
        QuadNum u = fmod_pos(mid - base, C.w);
        if (u <= G.width(s, C.h)) {
          Vec2 p = vec2(G.xl(s, s.y1) + u, s.y1);
          CylCoord up = G.upward(s.poly, p);
          BoundarySegment seg;
          seg.start = start;
          seg.length = end - start;
          seg.other_cyl = up.cyl;
          seg.other_start = fmod_pos(up.X - (mid - start), dec.cylinders[up.cyl].w);
          C.top_segments.push_back(seg);
          found = true;
        }
      }
      if (!found) throw NonPeriodic("top saddle connection not found");
    }
  }
  for (int k = 0; k < static_cast<int>(R.marked.size()); ++k) {
    PointLocation L;
    L.label = R.marked[k].label;
    L.at = locate(dec, R.marked[k].poly, R.marked[k].pos);
    L.on_core = !L.at.boundary && L.at.eta + L.at.eta == dec.cylinders[L.at.cyl].h;
    dec.points.push_back(L);
  }
  return dec;
}

CylCoord locate(const CylinderDecomposition& dec, int poly, const Vec2& p) {
  Geometry G(dec);
  PointPlace pl = place_in_polygon(dec.rotated, poly, p);
  if (pl.kind == PointKind::vertex) throw InadmissibleSpec("point is the singularity");
  if (pl.kind == PointKind::outside) throw InadmissibleSpec("point outside polygon");
  if (find_sorted(dec.cuts[poly], p(1)) >= 0) return G.upward(poly, p);
  for (int s : dec.poly_strips[poly]) {
    const Strip& st = dec.strips[s];
    if (st.y0 < p(1) && p(1) < st.y1) return G.coords(s, p);
  }
  throw InadmissibleSpec("point not covered by strips");
}

CylCoord locate_marked(const CylinderDecomposition& dec, int label_index) {
  const auto& m = dec.rotated.marked.at(label_index);
  return locate(dec, m.poly, m.pos);
}

std::vector<mpq_class> moduli_ratios(const CylinderDecomposition& dec) {
  std::vector<mpq_class> out;
  const QuadNum& m1 = dec.cylinders.at(0).m;
  for (size_t i = 0; i < dec.cylinders.size(); ++i) {
    auto r = (dec.cylinders[i].m / m1).rational_value();
    if (!r) throw NotCommensurable("m_" + std::to_string(i + 1) + "/m_1 = " + (dec.cylinders[i].m / m1).str());
    out.push_back(*r);
  }
  return out;
}

QuadNum total_area(const CylinderDecomposition& dec) {
  QuadNum a;
  for (const auto& c : dec.cylinders) a += c.area();
  return a;
}

}  // namespace prym
