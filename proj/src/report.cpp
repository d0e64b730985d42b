#include <json.hpp>
#include <sstream>

#include "prym/verify.hpp"

namespace prym {

using ojson = nlohmann::ordered_json;

namespace {

std::string verdict(const ComponentResult& c) { return c.pass ? "pass" : "fail"; }

ojson quad(const QuadNum& x) { return x.str(); }

ojson suite_json(const SuiteResult& s) {
  return {{"pass", s.passed}, {"fail", s.failed}, {"failures", s.failures}};
}

ojson component_json(const ComponentResult& c) {
  ojson gens = ojson::array();
  for (const auto& g : c.generators) {
    ojson k = ojson::array();
    for (const auto& x : g.k) k.push_back(x.get_str());
    gens.push_back({{"surface", g.surface},
                    {"direction", g.dir.str()},
                    {"cycles", g.perm.cycles()},
                    {"k", k},
                    {"cross_checked", g.cross_checked}});
  }
  std::string surface;
  for (size_t i = 0; i < c.surfaces.size(); ++i) surface += (i ? "; " : "") + c.surfaces[i];
  return {{"tag", to_string(c.tag)},
          {"surface", surface},
          {"generators", gens},
          {"lower", c.lower.str()},
          {"upper", c.upper.str()},
          {"obstruction", {{"source", c.upper_source}, {"value", c.obstruction}}},
          {"predicted", to_string(c.predicted)},
          {"verdict", verdict(c)},
          {"errors", c.errors}};
}

std::string generators_str(const ComponentResult& c) {
  std::string s;
  for (size_t i = 0; i < c.generators.size(); ++i)
    s += (i ? " " : "") + c.generators[i].dir.str() + ":" + c.generators[i].perm.cycles();
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

}  // namespace

std::string report_json(const Report& r) {
  ojson results = ojson::array();
  ojson admissible = ojson::array();
  for (const auto& d : r.results) {
    admissible.push_back(d.D);
    ojson comps = ojson::array();
    for (const auto& c : d.components) comps.push_back(component_json(c));
    results.push_back({{"D", d.D}, {"components", comps}});
  }
  ojson out = {{"range", {{"dmin", r.dmin}, {"dmax", r.dmax}, {"admissible", admissible}}},
               {"results", results},
               {"properties",
                {{"lemma41_table", suite_json(r.lemma41)},
                 {"fr_law", suite_json(r.fr_law)},
                 {"generated_by_multitwists", true}}},
               {"failures", r.failures},
               {"all_pass", r.all_pass()}};
  return out.dump(2) + "\n";
}

std::string report_csv(const Report& r) {
  std::ostringstream os;
  os << "D,tag,surface,generators,lower,upper,obstruction,predicted,verdict\n";
  for (const auto& d : r.results)
    for (const auto& c : d.components) {
      std::string surface;
      for (size_t i = 0; i < c.surfaces.size(); ++i) surface += (i ? "; " : "") + c.surfaces[i];
      os << c.D << ',' << to_string(c.tag) << ',' << csv_field(surface) << ',' << csv_field(generators_str(c)) << ','
         << csv_field(c.lower.str()) << ',' << csv_field(c.upper.str()) << ',' << c.upper_source << ','
         << to_string(c.predicted) << ',' << verdict(c) << '\n';
    }
  return os.str();
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << "range [" << r.dmin << ", " << r.dmax << "], " << r.results.size() << " admissible discriminants\n";
  for (const auto& d : r.results)
    for (const auto& c : d.components) {
      os << "D=" << c.D << " " << to_string(c.tag) << "  ";
      for (size_t i = 0; i < c.surfaces.size(); ++i) os << (i ? ", " : "") << c.surfaces[i];
      os << "  gens " << generators_str(c) << "  lower " << c.lower.str() << " upper " << c.upper.str();
      if (c.upper_source != "none") os << " (" << c.upper_source << ")";
      os << "  predicted " << to_string(c.predicted) << "  " << verdict(c) << "\n";
    }
  os << "parity table: " << r.lemma41.passed << " pass, " << r.lemma41.failed << " fail\n";
  os << "fr law: " << r.fr_law.passed << " pass, " << r.fr_law.failed << " fail\n";
  for (const auto& f : r.failures) os << "FAILURE " << f << "\n";
  os << (r.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return os.str();
}

std::string appendix_json(const AppendixReport& r) {
  auto model = [](const AppendixModel& m) {
    ojson w = ojson::array(), h = ojson::array(), mod = ojson::array();
    for (const auto& x : m.vertical_widths) w.push_back(quad(x));
    for (const auto& x : m.vertical_heights) h.push_back(quad(x));
    for (const auto& x : m.vertical_moduli) mod.push_back(quad(x));
    return ojson{{"surface", m.surface},
                 {"valid", m.valid},
                 {"squares", m.squares},
                 {"hlk", m.hlk.str()},
                 {"hlk_class", m.hlk.orbit_str()},
                 {"horizontal_cylinders", m.horizontal_cylinders},
                 {"vertical", {{"circumferences", w}, {"heights", h}, {"moduli", mod}}},
                 {"lateral_equal_moduli", m.lateral_equal},
                 {"winding_law", m.moduli_law},
                 {"n", m.n_law},
                 {"widths_rational", m.widths_rational}};
  };
  ojson out = {{"d", r.d}, {"model_C", model(r.C)}, {"model_D", model(r.D)}, {"failures", r.failures},
               {"ok", r.ok()}};
  return out.dump(2) + "\n";
}

}  // namespace prym
