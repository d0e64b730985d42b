#pragma once

#include <array>
#include <vector>

#include "prym/cylinders.hpp"
#include "prym/permgroup.hpp"

namespace prym {

struct Multitwist {
  Direction dir;
  QuadNum t;                 // t = k_i m_i for every cylinder
  std::vector<mpz_class> k;  // minimal positive twist counts
  Mat2 matrix;               // R T_t R^-1 in the surface's coordinates
};

Multitwist multitwist(const CylinderDecomposition& dec);

// pointwise shear (X, eta) -> (X + sign * t * eta, eta) in every cylinder
MarkedPermutation twist_permutation(const TranslationSurface& S, const CylinderDecomposition& dec, int sign = 1);

// second computation: apply the twist matrix to S, decompose the image and
// find the cut-and-translate isomorphism back to S; returns the relabeling
// of marked points it induces
MarkedPermutation twist_permutation_by_isomorphism(const TranslationSurface& S, const CylinderDecomposition& dec);

using IntMat2 = std::array<std::array<mpz_class, 2>, 2>;

struct PQDecomposition {
  IntMat2 P, Q;  // A = P + Q rho/2
  long d = 0;
  mpz_class det_P, det_Q;
  mpz_class identity_value;  // det P + (D - d^2)/16 det Q
  bool identity_holds = false;
  int P_mod2_det = 0;
};

PQDecomposition pq_decompose(const Mat2& A, long D, long d);

}  // namespace prym
