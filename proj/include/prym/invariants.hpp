#pragma once

#include <array>
#include <string>
#include <vector>

#include "prym/permgroup.hpp"
#include "prym/surface.hpp"

namespace prym {

struct HLKInvariant {
  int n_integral = 0;
  std::vector<char> types;          // sorted in (h, v, c) order
  std::array<char, 3> per_point{};  // '0', 'h', 'v' or 'c' for w1, w2, w3
  std::string str() const;          // e.g. "(1,[v,v])"
  // class under SL(2,Z), which permutes h, v, c: type counts in decreasing
  // order, e.g. "(1,[2,0,0])"
  std::string orbit_str() const;
  SubgroupClass allowed() const;    // permutations preserving the types
};

HLKInvariant hlk_invariant(const TranslationSurface& S);

struct FrClassPartition {
  long D = 0, e = 0;
  std::array<std::pair<mpq_class, mpq_class>, 3> cls;
  std::array<Vec2, 3> v;  // displacement from the singularity to w_i
  SubgroupClass upper;
  std::string str() const;
};

bool in_restricted_case(long D);
FrClassPartition fr_classes(long D, long e);

// fr of both coordinates of x in the {1, rho/2} basis
std::pair<mpq_class, mpq_class> fr_pair(const Vec2& x, long D);
// displacement of a marked point from a chosen vertex of the polygon holding it
Vec2 displacement(const TranslationSurface& S, int label_index, int vertex_index);

struct FrLawCheck {
  bool holds = false;
  std::pair<mpq_class, mpq_class> lhs, rhs;
};
// fr(A v) against (1/2) P_A p_v mod 1
FrLawCheck fr_law(const Mat2& A, const Vec2& v, long D);

}  // namespace prym
