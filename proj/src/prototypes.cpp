#include "prym/prototypes.hpp"

#include <algorithm>

#include <cmath>
#include <numeric>

namespace prym {

long mod(long x, long m) { return ((x % m) + m) % m; }

Prototype::Prototype(long a_, long b_, long c_, long e_) : a(a_), b(b_), c(c_), e(e_) {
  if (b <= 0 || c <= 0) throw InadmissibleSpec("b, c must be positive");
  if (a < 0 || a >= std::gcd(b, c)) throw InadmissibleSpec("need 0 <= a < gcd(b,c)");
  if (2 * c + e >= b) throw InadmissibleSpec("need 2c + e < b");
  if (std::gcd(std::gcd(a, b), std::gcd(c, e)) != 1) throw InadmissibleSpec("gcd(a,b,c,e) != 1");
  D = e * e + 8 * b * c;
}

Prototype Prototype::reduced(long D, long e) {
  if (mod(D - e * e, 8) != 0) throw InadmissibleSpec("e^2 != D mod 8");
  long b = (D - e * e) / 8;
  Prototype p(0, b, 1, e);
  if ((e + 4) * (e + 4) >= D) throw InadmissibleSpec("e not in S_D");
  return p;
}

std::string to_string(LocusStatus s) {
  switch (s) {
    case LocusStatus::empty: return "empty";
    case LocusStatus::connected: return "connected";
    case LocusStatus::two_components: return "two_components";
  }
  return "?";
}

std::string to_string(Model m) {
  switch (m) {
    case Model::A_plus: return "A+";
    case Model::A_minus: return "A-";
    case Model::Z: return "Z";
    case Model::B8: return "B8";
    case Model::SQ_Z: return "SQZ";
    case Model::MODEL_C: return "C";
    case Model::MODEL_D: return "D";
  }
  return "?";
}

std::string to_string(ComponentTag t) {
  switch (t) {
    case ComponentTag::whole: return "whole";
    case ComponentTag::plus: return "plus";
    case ComponentTag::minus: return "minus";
  }
  return "?";
}

std::string to_string(GroupName g) { return g == GroupName::Sym2 ? "Sym2" : "Sym3"; }

bool is_discriminant(long D) { return D > 0 && (mod(D, 4) == 0 || mod(D, 4) == 1); }

LocusStatus locus_status(long D) {
  if (!is_discriminant(D)) throw NotADiscriminant(std::to_string(D));
  bool nonempty = D == 8 || D == 12 || (D >= 17 && (mod(D, 8) == 1 || mod(D, 4) == 0));
  if (!nonempty) return LocusStatus::empty;
  return mod(D, 8) == 1 ? LocusStatus::two_components : LocusStatus::connected;
}

std::vector<long> reduced_prototypes(long D) {
  if (!is_discriminant(D)) throw NotADiscriminant(std::to_string(D));
  std::vector<long> out;
  long bound = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(D)))) + 4;
  for (long e = -bound; e <= bound; ++e)
    if (mod(e * e - D, 8) == 0 && e * e < D && (e + 4) * (e + 4) < D) out.push_back(e);
  return out;
}

std::vector<long> aux_prototypes(long D) {
  if (D <= 0) throw NotADiscriminant(std::to_string(D));
  std::vector<long> out;
  long bound = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(D)))) + 2;
  for (long e = -bound; e <= bound; ++e)
    if (mod(e - D, 2) == 0 && e * e < D && (e + 2) * (e + 2) < D) out.push_back(e);
  return out;
}

namespace {
// residue mod 4 of the component class: A+(e) -> e, A-(e) -> -e
long component_class(Model m, long e) {
  if (m == Model::A_plus) return mod(e, 4);
  if (m == Model::A_minus) return mod(-e, 4);
  throw InadmissibleSpec("component bookkeeping is defined for A+ and A- only");
}
}  // namespace

bool same_component(Model m1, long e1, Model m2, long e2, long D) {
  if (locus_status(D) != LocusStatus::two_components)
    throw ConnectedLocus("D=" + std::to_string(D) + " has a single component or is empty");
  auto S = reduced_prototypes(D);
  for (long e : {e1, e2})
    if (std::find(S.begin(), S.end(), e) == S.end()) throw InadmissibleSpec("e not in S_D");
  return component_class(m1, e1) == component_class(m2, e2);
}

ComponentTag component_of(Model m, long e, long D) {
  if (locus_status(D) != LocusStatus::two_components) return ComponentTag::whole;
  return component_class(m, e) == 1 ? ComponentTag::plus : ComponentTag::minus;
}

std::vector<ComponentTag> components(long D) {
  switch (locus_status(D)) {
    case LocusStatus::empty: return {};
    case LocusStatus::connected: return {ComponentTag::whole};
    case LocusStatus::two_components: return {ComponentTag::plus, ComponentTag::minus};
  }
  return {};
}

GroupName predicted_group(long D) {
  if (locus_status(D) == LocusStatus::empty) throw EmptyLocus(std::to_string(D));
  return (mod(D, 2) == 0 && (mod(D, 16) == 0 || mod(D, 16) == 4)) ? GroupName::Sym2 : GroupName::Sym3;
}

}  // namespace prym
