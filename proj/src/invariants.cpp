#include "prym/invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "prym/twists.hpp"

namespace prym {

namespace {

int type_rank(char c) { return c == 'h' ? 0 : c == 'v' ? 1 : 2; }

mpq_class rational_coord(const QuadNum& x) {
  auto v = x.rational_value();
  if (!v) throw NotSquareTiled("coordinate " + x.str() + " is irrational");
  return *v;
}

}  // namespace

std::string HLKInvariant::str() const {
  std::string s = "(" + std::to_string(n_integral) + ",[";
  for (size_t i = 0; i < types.size(); ++i) s += (i ? "," : "") + std::string(1, types[i]);
  return s + "])";
}

std::string HLKInvariant::orbit_str() const {
  std::array<int, 3> n{};
  for (char t : types) ++n[type_rank(t)];
  std::sort(n.begin(), n.end(), std::greater<int>());
  return "(" + std::to_string(n_integral) + ",[" + std::to_string(n[0]) + "," + std::to_string(n[1]) + "," +
         std::to_string(n[2]) + "])";
}

SubgroupClass HLKInvariant::allowed() const {
  std::vector<std::string> cls;
  for (char c : per_point) cls.push_back(std::string(1, c));
  return classify(stabilizer_of_partition(cls));
}

HLKInvariant hlk_invariant(const TranslationSurface& S) {
  // periods: with a single singularity every edge is a closed saddle connection
  std::vector<std::pair<mpz_class, mpz_class>> gens;
  for (int j = 0; j < S.num_polys(); ++j)
    for (int i = 0; i < S.num_edges(j); ++i) {
      Vec2 e = S.edge_vector({j, i});
      mpq_class x = rational_coord(e(0)), y = rational_coord(e(1));
      if (x.get_den() != 1 || y.get_den() != 1) throw NotSquareTiled("edge vector not integral");
      gens.emplace_back(x.get_num(), y.get_num());
    }
  mpz_class index = 0;
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a + 1; b < gens.size(); ++b) {
      mpz_class m = gens[a].first * gens[b].second - gens[a].second * gens[b].first;
      mpz_gcd(index.get_mpz_t(), index.get_mpz_t(), m.get_mpz_t());
    }
  if (index != 1) throw NotPrimitive("period lattice has index " + index.get_str() + " in Z^2");
  HLKInvariant out;
  for (int k = 0; k < 3; ++k) {
    Vec2 v = displacement(S, k, 0);
    mpq_class fx = frac_part(rational_coord(v(0))), fy = frac_part(rational_coord(v(1)));
    mpq_class half(1, 2);
    char t;
    if (fx == 0 && fy == 0) t = '0';
    else if (fx == half && fy == 0) t = 'h';
    else if (fx == 0 && fy == half) t = 'v';
    else if (fx == half && fy == half) t = 'c';
    else throw NotSquareTiled("marked point is not 2-torsion");
    out.per_point[k] = t;
    if (t == '0') ++out.n_integral;
    else out.types.push_back(t);
  }
  std::sort(out.types.begin(), out.types.end(), [](char a, char b) { return type_rank(a) < type_rank(b); });
  return out;
}

Vec2 displacement(const TranslationSurface& S, int label_index, int vertex_index) {
  const auto& m = S.marked.at(label_index);
  return m.pos - S.vertex(m.poly, vertex_index);
}

bool in_restricted_case(long D) {
  return D > 0 && D % 2 == 0 && (mod(D, 16) == 0 || mod(D, 16) == 4) && !is_perfect_square(D) &&
         locus_status(D) != LocusStatus::empty;
}

std::pair<mpq_class, mpq_class> fr_pair(const Vec2& x, long D) {
  OrderBasis half(D, true);
  return {rational_part_fr(x(0), half).fr, rational_part_fr(x(1), half).fr};
}

std::string FrClassPartition::str() const {
  std::string s;
  for (int k = 0; k < 3; ++k)
    s += (k ? " " : "") + std::string("w") + std::to_string(k + 1) + ":(" + cls[k].first.get_str() + "," +
         cls[k].second.get_str() + ")";
  return s;
}

FrClassPartition fr_classes(long D, long e) {
  if (!in_restricted_case(D))
    throw OutsideRestrictedCase("D=" + std::to_string(D) + " is not an even non-square quadratic residue mod 16");
  SurfaceSpec spec{Model::Z, D, e, std::nullopt, 0};
  TranslationSurface Z = build_surface(spec);
  FrClassPartition out;
  out.D = D;
  out.e = e;
  OrderBasis half(D, true), full(D, false);
  std::vector<std::string> labels;
  for (int k = 0; k < 3; ++k) {
    out.v[k] = displacement(Z, k, 0);
    // v in O_{D/4} x (1/2) O_D
    auto rx = rational_part_fr(out.v[k](0), half);
    auto ry = rational_part_fr(QuadNum(2) * out.v[k](1), full);
    if (rx.p.get_den() != 1 || rx.q.get_den() != 1 || ry.p.get_den() != 1 || ry.q.get_den() != 1)
      throw EntriesOutsideOrders("displacement of w" + std::to_string(k + 1) + " outside O_{D/4} x O_D/2");
    out.cls[k] = fr_pair(out.v[k], D);
    // path independence: every vertex of the polygon, and the glued copy
    for (int i = 1; i < Z.num_edges(Z.marked[k].poly); ++i)
      if (fr_pair(displacement(Z, k, i), D) != out.cls[k])
        throw EntriesOutsideOrders("fr of w" + std::to_string(k + 1) + " depends on the path");
    SurfacePoint alt = normalize_point(Z, marked_point(Z, k));
    if (fr_pair(alt.pos - Z.vertex(alt.poly, 0), D) != out.cls[k])
      throw EntriesOutsideOrders("fr of w" + std::to_string(k + 1) + " differs across a gluing");
    labels.push_back(out.cls[k].first.get_str() + "|" + out.cls[k].second.get_str());
  }
  out.upper = classify(stabilizer_of_partition(labels));
  return out;
}

FrLawCheck fr_law(const Mat2& A, const Vec2& v, long D) {
  OrderBasis half(D, true);
  PQDecomposition pq = pq_decompose(A, D, half.d);
  mpq_class p1 = rational_part_fr(v(0), half).p;
  mpq_class p2 = 2 * rational_part_fr(v(1), half).p;
  mpq_class a = 2 * p1, b = p2;  // p_v = (2 p1, p2)
  FrLawCheck out;
  out.rhs = {frac_part(mpq_class(pq.P[0][0] * a + pq.P[0][1] * b) / 2),
             frac_part(mpq_class(pq.P[1][0] * a + pq.P[1][1] * b) / 2)};
  Vec2 Av = A * v;
  out.lhs = fr_pair(Av, D);
  out.holds = out.lhs == out.rhs;
  return out;
}

}  // namespace prym
