#include <algorithm>
#include <numeric>

#include "prym/surface.hpp"

namespace prym {

namespace {

// Convex piece with a horizontal bottom and top, each possibly split by
// collinear vertices.  xs are listed left to right.
struct Piece {
  std::vector<QuadNum> bottom, top;
  QuadNum yb, yt;

  std::vector<Vec2> vertices() const {
    std::vector<Vec2> v;
    for (const auto& x : bottom) v.push_back(vec2(x, yb));
    for (auto it = top.rbegin(); it != top.rend(); ++it) v.push_back(vec2(*it, yt));
    return v;
  }
  int nb() const { return static_cast<int>(bottom.size()); }
  int nt() const { return static_cast<int>(top.size()); }
  int bot(int k) const { return k; }
  int right() const { return nb() - 1; }
  int topseg(int k) const { return nb() + (nt() - 2 - k); }
  int left() const { return nb() + nt() - 1; }
};

struct Assembler {
  TranslationSurface S;

  int add(const Piece& p) {
    S.polygons.push_back(p.vertices());
    S.gluing.emplace_back(p.nb() + p.nt(), EdgeRef{});
    S.inv_target.push_back(-1);
    S.inv_centre.push_back(vec2(0, 0));
    return S.num_polys() - 1;
  }
  void glue(int pa, int ea, int pb, int eb) {
    S.gluing[pa][ea] = EdgeRef{pb, eb};
    S.gluing[pb][eb] = EdgeRef{pa, ea};
  }
  void involution(int pa, int pb, const Vec2& c) {
    S.inv_target[pa] = pb;
    S.inv_target[pb] = pa;
    S.inv_centre[pa] = c;
    S.inv_centre[pb] = c;
  }
  void mark(const std::string& label, int poly, const Vec2& p) { S.marked.push_back({label, poly, p}); }
};

void label_from_involution(TranslationSurface& S) {
  // families without figure labels: w1, w2, w3 in lexicographic order of
  // (polygon, y, x) among the regular fixed points
  std::vector<SurfacePoint> reg;
  for (const auto& p : involution_fixed_points(S))
    if (place_in_polygon(S, p.poly, p.pos).kind != PointKind::vertex) reg.push_back(normalize_point(S, p));
  std::sort(reg.begin(), reg.end(), [](const SurfacePoint& a, const SurfacePoint& b) {
    if (a.poly != b.poly) return a.poly < b.poly;
    if (a.pos(1) != b.pos(1)) return a.pos(1) < b.pos(1);
    return a.pos(0) < b.pos(0);
  });
  S.marked.clear();
  for (size_t k = 0; k < reg.size() && k < 3; ++k)
    S.marked.push_back({"w" + std::to_string(k + 1), reg[k].poly, reg[k].pos});
}

Prototype resolve_proto(const SurfaceSpec& spec) {
  if (spec.proto) {
    if (spec.D != 0 && spec.D != spec.proto->D) throw InadmissibleSpec("prototype discriminant mismatch");
    return *spec.proto;
  }
  auto S = reduced_prototypes(spec.D);
  if (std::find(S.begin(), S.end(), spec.e) == S.end())
    throw InadmissibleSpec("e=" + std::to_string(spec.e) + " not in S_" + std::to_string(spec.D));
  return Prototype::reduced(spec.D, spec.e);
}

TranslationSurface build_a_plus(const Prototype& P) {
  const QuadNum a(P.a), b(P.b), c(P.c), l = lambda(P.D, P.e);
  Assembler A;
  // R1: b x c parallelogram, top shifted by a; Q: lambda-square on R1's
  // top; R2 = image of R1 under the rotation about the centre of Q
  Piece r1{{0, l, b}, {a, a + l, a + b}, 0, c};
  Piece q{{a, a + l}, {a, a + l}, c, c + l};
  Piece r2{{a + l - b, a, a + l}, {a + a + l - b, a + a, a + a + l}, c + l, c + c + l};
  int R1 = A.add(r1), Q = A.add(q), R2 = A.add(r2);
  A.glue(R1, r1.bot(0), R2, r2.topseg(1));
  A.glue(R1, r1.bot(1), R1, r1.topseg(1));
  A.glue(R1, r1.right(), R1, r1.left());
  A.glue(R1, r1.topseg(0), Q, q.bot(0));
  A.glue(Q, q.right(), Q, q.left());
  A.glue(Q, q.topseg(0), R2, r2.bot(1));
  A.glue(R2, r2.bot(0), R2, r2.topseg(0));
  A.glue(R2, r2.right(), R2, r2.left());
  Vec2 centre = vec2(a + a + l, c + c + l);
  A.involution(R1, R2, centre);
  A.involution(Q, Q, centre);
  QuadNum h = l / QuadNum(2);
  A.mark("w1", Q, vec2(a + h, c + h));
  A.mark("w2", Q, vec2(a, c + h));
  A.mark("w3", R1, vec2(h, 0));
  A.S.D = P.D;
  return A.S;
}

TranslationSurface build_a_minus(const Prototype& P) {
  const QuadNum a(P.a), b(P.b), c(P.c), l = lambda(P.D, P.e);
  const QuadNum h = l / QuadNum(2);
  Assembler A;
  // R: b x c parallelogram; Q1 on top of its left end, Q2 below its right
  // end, both (lambda/2)-squares swapped by the rotation about R's centre
  Piece r{{0, h, b - h, b}, {a, a + h, a + b - h, a + b}, 0, c};
  Piece q1{{a, a + h}, {a, a + h}, c, c + h};
  Piece q2{{b - h, b}, {b - h, b}, -h, 0};
  int R = A.add(r), Q1 = A.add(q1), Q2 = A.add(q2);
  A.glue(R, r.bot(0), Q1, q1.topseg(0));
  A.glue(R, r.topseg(0), Q1, q1.bot(0));
  A.glue(R, r.bot(1), R, r.topseg(1));
  A.glue(R, r.bot(2), Q2, q2.topseg(0));
  A.glue(R, r.topseg(2), Q2, q2.bot(0));
  A.glue(R, r.right(), R, r.left());
  A.glue(Q1, q1.right(), Q1, q1.left());
  A.glue(Q2, q2.right(), Q2, q2.left());
  Vec2 centre = vec2(a + b, c);
  A.involution(R, R, centre);
  A.involution(Q1, Q2, centre);
  // labels as drawn: w1 on the side of R, w2 at its centre, w3 on the seam
  A.mark("w1", R, vec2(a / QuadNum(2), c / QuadNum(2)));
  A.mark("w2", R, vec2((a + b) / QuadNum(2), c / QuadNum(2)));
  A.mark("w3", R, vec2(b / QuadNum(2), 0));
  A.S.D = P.D;
  return A.S;
}

TranslationSurface build_z(long D, long e) {
  TranslationSurface A = build_a_minus(Prototype::reduced(D, e));
  QuadNum l = lambda(D, e);
  TranslationSurface Z = apply_matrix(A, mat2(QuadNum(2) / l, 0, 0, 1));
  return Z;
}

TranslationSurface build_b8() {
  const long D = 8;
  const QuadNum r2 = QuadNum::sqrt_of(D) / QuadNum(2);  // sqrt 2
  const QuadNum s = QuadNum(2) + r2, t = QuadNum(1) + r2;
  Assembler A;
  // staircase of three squares of sides s, t, t
  Piece h2{{0, 1, s}, {0, t, s}, 0, s};
  Piece h1{{0, t}, {0, 1, t}, s, s + t};
  Piece h3{{1, t, s}, {1, s}, -t, 0};
  int H2 = A.add(h2), H1 = A.add(h1), H3 = A.add(h3);
  A.glue(H2, h2.bot(0), H1, h1.topseg(0));
  A.glue(H2, h2.bot(1), H3, h3.topseg(0));
  A.glue(H2, h2.topseg(0), H1, h1.bot(0));
  A.glue(H2, h2.topseg(1), H3, h3.bot(1));
  A.glue(H1, h1.topseg(1), H3, h3.bot(0));
  A.glue(H2, h2.right(), H2, h2.left());
  A.glue(H1, h1.right(), H1, h1.left());
  A.glue(H3, h3.right(), H3, h3.left());
  Vec2 centre = vec2(s, s);
  A.involution(H2, H2, centre);
  A.involution(H1, H3, centre);
  A.mark("w1", H2, vec2(s / QuadNum(2), s / QuadNum(2)));
  A.mark("w2", H2, vec2(0, s / QuadNum(2)));
  A.mark("w3", H3, vec2(QuadNum(1) + r2 / QuadNum(2), -t));
  A.S.D = D;
  return A.S;
}

std::vector<QuadNum> cuts_from_lengths(const std::vector<long>& lens) {
  std::vector<QuadNum> xs{0};
  long acc = 0;
  for (long l : lens) xs.push_back(QuadNum(acc += l));
  return xs;
}

// Two horizontal cylinders C1, C2 = iota(C1) of width W and height 1.
// C1 top is cut at 1, its bottom at 1 and k.  Gluings (top -> bottom):
// C1 top[0,1] -> C1 bottom[0,1]; C1 top[1,W] -> C2 bottom at the image of
// itself; C2 top segments are the iota-images of C1 bottom segments and
// fall back onto them, except the first which meets C2 bottom[W-1,W].
// The smallest member of each parity class consistent with three vertical
// cylinders is used.
TranslationSurface build_model_c(long d) {
  if (d <= 4) throw InadmissibleSpec("model C needs d > 4");
  const long W = (d % 2) ? d : d / 2;
  const long k = (d % 2) ? d - 2 : 2;
  if (W < 3) throw InadmissibleSpec("model C width too small");
  Assembler A;
  const QuadNum w(W);
  Piece c1{{0, 1, k, w}, {0, 1, w}, 0, 1};
  // C2 = iota(C1): top cuts W - (C1 bottom cuts), bottom cuts W - (C1 top cuts)
  Piece c2{{0, w - 1, w}, {0, w - k, w - 1, w}, 0, 1};
  int C1 = A.add(c1), C2 = A.add(c2);
  A.glue(C1, c1.topseg(0), C1, c1.bot(0));  // [0,1] over [0,1]
  A.glue(C1, c1.topseg(1), C2, c2.bot(0));  // [1,W] over [0,W-1]
  A.glue(C2, c2.topseg(2), C2, c2.bot(1));  // iota(C1 bottom[0,1]) over iota(C1 top[0,1])
  A.glue(C2, c2.topseg(1), C1, c1.bot(1));  // iota(C1 bottom[1,k]) over C1 bottom[1,k]
  A.glue(C2, c2.topseg(0), C1, c1.bot(2));  // iota(C1 bottom[k,W]) over C1 bottom[k,W]
  A.glue(C1, c1.right(), C1, c1.left());
  A.glue(C2, c2.right(), C2, c2.left());
  A.involution(C1, C2, vec2(w, 1));
  A.S.D = 0;
  label_from_involution(A.S);
  return A.S;
}

// One horizontal cylinder of width d and height 1; the top is cut into
// five saddle connections with lengths lens, the bottom is the mirror
// image x -> d - x, and top segment i meets the mirror of segment s(i)
// with s = (0 3)(1 4).  Lengths are the smallest choice giving three
// vertical cylinders: odd d uses (1, m, 1, 1, m), even d (1, 1, d-4, 1, 1).
TranslationSurface build_model_d(long d) {
  if (d <= 4) throw InadmissibleSpec("model D needs d > 4");
  std::vector<long> lens = (d % 2) ? std::vector<long>{1, (d - 3) / 2, 1, 1, (d - 3) / 2}
                                   : std::vector<long>{1, 1, d - 4, 1, 1};
  const int sigma[5] = {3, 4, 2, 0, 1};
  auto top = cuts_from_lengths(lens);
  std::vector<QuadNum> bottom;
  for (auto it = top.rbegin(); it != top.rend(); ++it) bottom.push_back(QuadNum(d) - *it);
  Assembler A;
  Piece r{bottom, top, 0, 1};
  int R = A.add(r);
  // mirror of top segment j is bottom segment 4 - j
  for (int i = 0; i < 5; ++i)
    if (i <= sigma[i]) {
      A.glue(R, r.topseg(i), R, r.bot(4 - sigma[i]));
      if (sigma[i] != i) A.glue(R, r.topseg(sigma[i]), R, r.bot(4 - i));
    }
  A.glue(R, r.right(), R, r.left());
  A.involution(R, R, vec2(QuadNum(d), 1));
  A.S.D = 0;
  label_from_involution(A.S);
  return A.S;
}

}  // namespace

std::string describe(const SurfaceSpec& spec) {
  switch (spec.model) {
    case Model::A_plus:
    case Model::A_minus:
      if (spec.proto)
        return to_string(spec.model) + "(" + std::to_string(spec.proto->a) + "," + std::to_string(spec.proto->b) +
               "," + std::to_string(spec.proto->c) + "," + std::to_string(spec.proto->e) + ")";
      return to_string(spec.model) + "_" + std::to_string(spec.D) + "(" + std::to_string(spec.e) + ")";
    case Model::Z:
      return "Z_" + std::to_string(spec.D) + "(" + std::to_string(spec.e) + ")";
    case Model::SQ_Z:
      return "Z_" + std::to_string(spec.d * spec.d) + "(" + std::to_string(spec.e) + ")";
    case Model::B8:
      return "B_8(0)";
    case Model::MODEL_C:
      return "C(d=" + std::to_string(spec.d) + ")";
    case Model::MODEL_D:
      return "D(d=" + std::to_string(spec.d) + ")";
  }
  return "?";
}

TranslationSurface build_surface(const SurfaceSpec& spec) {
  TranslationSurface S;
  switch (spec.model) {
    case Model::A_plus:
      S = build_a_plus(resolve_proto(spec));
      break;
    case Model::A_minus:
      S = build_a_minus(resolve_proto(spec));
      break;
    case Model::Z:
      resolve_proto(spec);
      S = build_z(spec.D, spec.e);
      break;
    case Model::SQ_Z: {
      if (spec.d <= 0) throw InadmissibleSpec("SQZ needs d > 0");
      SurfaceSpec z = spec;
      z.D = spec.d * spec.d;
      resolve_proto(z);
      S = build_z(z.D, spec.e);
      break;
    }
    case Model::B8:
      if (spec.D != 0 && spec.D != 8) throw InadmissibleSpec("B8 lives at D=8");
      if (spec.e != 0) throw InadmissibleSpec("B8 has e=0 only");
      S = build_b8();
      break;
    case Model::MODEL_C:
      S = build_model_c(spec.d);
      break;
    case Model::MODEL_D:
      S = build_model_d(spec.d);
      break;
  }
  S.name = describe(spec);
  return S;
}

}  // namespace prym
