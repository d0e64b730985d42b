#include "prym/twists.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace prym {

Multitwist multitwist(const CylinderDecomposition& dec) {
  Multitwist mt;
  mt.dir = dec.dir;
  auto r = moduli_ratios(dec);
  mpz_class k1 = 1;
  for (const auto& q : r) mpz_lcm(k1.get_mpz_t(), k1.get_mpz_t(), q.get_num_mpz_t());
  for (const auto& q : r) {
    // t = k1 m1 = k_i m_i with m_i = m1 * num/den
    mpz_class ki = k1 * q.get_den() / q.get_num();
    mt.k.push_back(ki);
  }
  mt.t = QuadNum(mpq_class(k1)) * dec.cylinders.at(0).m;
  const Mat2& M = dec.to_horizontal;
  mt.matrix = inverse2(M) * mat2(1, mt.t, 0, 1) * M;
  return mt;
}

namespace {

int find_label(const CylinderDecomposition& dec, const CylCoord& c) {
  for (int b = 0; b < static_cast<int>(dec.points.size()); ++b) {
    const CylCoord& o = dec.points[b].at;
    if (o.cyl == c.cyl && o.boundary == c.boundary && o.eta == c.eta && o.X == c.X) return b;
  }
  return -1;
}

}  // namespace

MarkedPermutation twist_permutation(const TranslationSurface& S, const CylinderDecomposition& dec, int sign) {
  (void)S;
  Multitwist mt = multitwist(dec);
  int n = static_cast<int>(dec.points.size());
  std::vector<int> img(n);
  for (int a = 0; a < n; ++a) {
    const CylCoord& c = dec.points[a].at;
    if (c.boundary) {
      img[a] = a;  // saddle connections stay put
      continue;
    }
    CylCoord d = c;
    d.X = fmod_pos(c.X + QuadNum(sign) * mt.t * c.eta, dec.cylinders[c.cyl].w);
    int b = find_label(dec, d);
    if (b < 0) throw ImageNotMarked(dec.points[a].label + " is sent to a point that is not marked");
    img[a] = b;
  }
  return MarkedPermutation(img);
}

namespace {

bool same_mod(const QuadNum& a, const QuadNum& b, const QuadNum& w) { return fmod_pos(a - b, w).is_zero(); }

bool shifted_sets_equal(const std::vector<QuadNum>& a, const QuadNum& delta, const std::vector<QuadNum>& b,
                        const QuadNum& w) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    QuadNum y = fmod_pos(x + delta, w);
    if (std::none_of(b.begin(), b.end(), [&](const QuadNum& z) { return z == y; })) return false;
  }
  return true;
}

}  // namespace

MarkedPermutation twist_permutation_by_isomorphism(const TranslationSurface& S, const CylinderDecomposition& dec) {
  Multitwist mt = multitwist(dec);
  TranslationSurface S2 = apply_matrix(S, mt.matrix);
  CylinderDecomposition dec2 = cylinder_decomposition(S2, dec.dir);
  const int n = static_cast<int>(dec.cylinders.size());
  if (static_cast<int>(dec2.cylinders.size()) != n) throw ImageNotMarked("image has a different cylinder count");

  // per (i in dec2, j in dec) candidate rotations matching bottom singular points
  std::vector<std::vector<std::vector<QuadNum>>> cand(n, std::vector<std::vector<QuadNum>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Cylinder &A = dec2.cylinders[i], &B = dec.cylinders[j];
      if (A.w != B.w || A.h != B.h || A.top_segments.size() != B.top_segments.size()) continue;
      for (const auto& x : A.bottom_sing) {
        QuadNum delta = fmod_pos(B.bottom_sing.front() - x, B.w);
        if (shifted_sets_equal(A.bottom_sing, delta, B.bottom_sing, B.w)) cand[i][j].push_back(delta);
      }
    }

  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::optional<MarkedPermutation> result;
  do {
    bool possible = true;
    for (int i = 0; i < n && possible; ++i) possible = !cand[i][sigma[i]].empty();
    if (!possible) continue;
    std::vector<size_t> idx(n, 0);
    while (true) {
      std::vector<QuadNum> delta(n);
      for (int i = 0; i < n; ++i) delta[i] = cand[i][sigma[i]][idx[i]];
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        const Cylinder& A = dec2.cylinders[i];
        const Cylinder& B = dec.cylinders[sigma[i]];
        for (const auto& s : A.top_segments) {
          int o = s.other_cyl;
          const QuadNum& wo = dec.cylinders[sigma[o]].w;
          bool hit = std::any_of(B.top_segments.begin(), B.top_segments.end(), [&](const BoundarySegment& t) {
            return t.other_cyl == sigma[o] && t.length == s.length && same_mod(s.start + delta[i], t.start, B.w) &&
                   same_mod(s.other_start + delta[o], t.other_start, wo);
          });
          if (!hit) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        std::vector<int> img(dec.points.size());
        for (size_t a = 0; a < dec2.points.size(); ++a) {
          CylCoord c = dec2.points[a].at;
          c.X = fmod_pos(c.X + delta[c.cyl], dec.cylinders[sigma[c.cyl]].w);
          c.cyl = sigma[c.cyl];
          int b = find_label(dec, c);
          if (b < 0) throw ImageNotMarked("isomorphism sends " + dec2.points[a].label + " to an unmarked point");
          img[a] = b;
        }
        MarkedPermutation p(img);
        if (result && !(*result == p)) throw ImageNotMarked("isomorphisms disagree on marked points");
        result = p;
      }
      int k = 0;
      while (k < n && ++idx[k] == cand[k][sigma[k]].size()) idx[k++] = 0;
      if (k == n) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  if (!result) throw ImageNotMarked("no isomorphism between the twisted surface and the original");
  return *result;
}

PQDecomposition pq_decompose(const Mat2& A, long D, long d) {
  if (!OrderBasis::half_available(D) || canonical_d(D) != d)
    throw EntriesOutsideOrders("D=" + std::to_string(D) + " with d=" + std::to_string(d) + " has no {1, rho/2} basis");
  OrderBasis half(D, true);
  PQDecomposition out;
  out.d = d;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      RationalPart rp = rational_part_fr(A(r, c), half);
      if (rp.p.get_den() != 1 || rp.q.get_den() != 1)
        throw EntriesOutsideOrders("entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " + A(r, c).str());
      // first row in O_D: even rho/2 coefficient
      if (r == 0 && rp.q.get_num() % 2 != 0)
        throw EntriesOutsideOrders("entry (0," + std::to_string(c) + ") not in O_D: " + A(r, c).str());
      out.P[r][c] = rp.p.get_num();
      out.Q[r][c] = rp.q.get_num();
    }
  out.det_P = out.P[0][0] * out.P[1][1] - out.P[0][1] * out.P[1][0];
  out.det_Q = out.Q[0][0] * out.Q[1][1] - out.Q[0][1] * out.Q[1][0];
  out.identity_value = out.det_P + mpz_class((D - d * d) / 16) * out.det_Q;
  out.identity_holds = out.identity_value == 1;
  mpz_class m = out.det_P % 2;
  out.P_mod2_det = m == 0 ? 0 : 1;
  return out;
}

}  // namespace prym
