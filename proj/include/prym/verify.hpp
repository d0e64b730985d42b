#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prym/invariants.hpp"
#include "prym/twists.hpp"

namespace prym {

struct GeneratorResult {
  std::string surface;
  Direction dir;
  MarkedPermutation perm;
  std::vector<mpz_class> k;  // twist counts per cylinder
  bool cross_checked = false;  // isomorphism relabeling agrees with the shear
};

struct ComponentResult {
  long D = 0;
  ComponentTag tag = ComponentTag::whole;
  std::vector<std::string> surfaces;
  std::vector<GeneratorResult> generators;
  SubgroupClass lower, upper;
  std::string upper_source;  // "none", "hlk" or "fr"
  std::string obstruction;   // invariant values backing the upper bound
  GroupName predicted = GroupName::Sym3;
  bool lower_in_upper = false;
  bool pass = false;
  std::vector<std::string> errors;
};

// never consults predicted_group except to fill in the verdict
ComponentResult compute_group(long D, ComponentTag tag);

struct SuiteResult {
  long passed = 0, failed = 0;
  std::vector<std::string> failures;
  void record(bool ok, const std::string& what);
};

// parity table for A+/A- in both directions, e in S_D
SuiteResult lemma41_suite(long D);
// fr classes, order membership and the fr action law on Z_D(e)
SuiteResult fr_law_suite(long D);

struct DiscriminantResult {
  long D = 0;
  std::vector<ComponentResult> components;
};

struct Report {
  long dmin = 0, dmax = 0;
  std::vector<DiscriminantResult> results;
  SuiteResult lemma41, fr_law;
  std::vector<std::string> failures;
  bool all_pass() const { return failures.empty(); }
};

std::vector<long> admissible_discriminants(long dmin, long dmax);
Report verify_range(long dmin, long dmax, int jobs = 1);

struct AppendixModel {
  std::string surface;
  bool valid = false;
  long squares = 0;
  HLKInvariant hlk;
  std::vector<QuadNum> vertical_widths, vertical_heights, vertical_moduli;
  long horizontal_cylinders = 0;
  bool lateral_equal = false;
  bool moduli_law = false;   // central/lateral winding law with integer n
  long n_law = 0;
  bool widths_rational = false;
};

struct AppendixReport {
  long d = 0;
  AppendixModel C, D;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

AppendixReport appendixA_check(long d);

std::string report_json(const Report& r);
std::string report_csv(const Report& r);
std::string report_text(const Report& r);
std::string appendix_json(const AppendixReport& r);

}  // namespace prym
