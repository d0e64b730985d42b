#pragma once

#include <string>
#include <vector>

#include "prym/errors.hpp"

namespace prym {

// splitting prototype (a, b, c, e) with D = e^2 + 8bc
struct Prototype {
  long a = 0, b = 0, c = 0, e = 0;
  long D = 0;

  Prototype() = default;
  Prototype(long a, long b, long c, long e);
  // reduced prototype (0, (D - e^2)/8, 1, e)
  static Prototype reduced(long D, long e);
  bool is_reduced() const { return a == 0 && c == 1; }
};

enum class LocusStatus { empty, connected, two_components };
std::string to_string(LocusStatus s);

enum class Model { A_plus, A_minus, Z, B8, SQ_Z, MODEL_C, MODEL_D };
std::string to_string(Model m);

bool is_discriminant(long D);
LocusStatus locus_status(long D);

std::vector<long> reduced_prototypes(long D);  // S_D
std::vector<long> aux_prototypes(long D);      // R_D

// components of E_D(4) for D = 1 mod 8; models restricted to A+/A-
bool same_component(Model m1, long e1, Model m2, long e2, long D);

enum class ComponentTag { whole, plus, minus };
std::string to_string(ComponentTag t);
// plus holds A+(e) for e = 1 (mod 4); A-(e) sits with A+(-e)
ComponentTag component_of(Model m, long e, long D);
std::vector<ComponentTag> components(long D);

enum class GroupName { Sym2, Sym3 };
std::string to_string(GroupName g);
GroupName predicted_group(long D);

long mod(long x, long m);

}  // namespace prym
