#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "prym/verify.hpp"

using namespace prym;

namespace {

Model parse_model(const std::string& s) {
  if (s == "A+") return Model::A_plus;
  if (s == "A-") return Model::A_minus;
  if (s == "Z") return Model::Z;
  if (s == "B8") return Model::B8;
  if (s == "SQZ") return Model::SQ_Z;
  if (s == "C") return Model::MODEL_C;
  if (s == "D") return Model::MODEL_D;
  throw InadmissibleSpec("unknown model " + s);
}

Direction parse_direction(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw InadmissibleSpec("direction must be X,Y");
  mpq_class x, y;
  if (x.set_str(s.substr(0, comma), 10) != 0 || y.set_str(s.substr(comma + 1), 10) != 0)
    throw InadmissibleSpec("direction coordinates must be rationals");
  x.canonicalize();
  y.canonicalize();
  return Direction(QuadNum(x), QuadNum(y));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

struct SurfaceArgs {
  std::string model = "A+";
  long D = 0, e = 0, d = 0;
  std::vector<long> proto;
  std::string from;

  void add(CLI::App* app) {
    app->add_option("--model", model, "A+, A-, Z, B8, SQZ, C or D")
        ->check(CLI::IsMember({"A+", "A-", "Z", "B8", "SQZ", "C", "D"}));
    app->add_option("--D", D, "discriminant");
    app->add_option("--e", e, "reduced prototype parameter");
    app->add_option("--d", d, "square root of D for SQZ, family parameter for C and D");
    app->add_option("--proto", proto, "general prototype a,b,c,e for A+ and A-")->delimiter(',')->expected(4);
    app->add_option("--from", from, "read the surface from a JSON file instead");
  }
  SurfaceSpec spec() const {
    SurfaceSpec s{parse_model(model), D, e, std::nullopt, d};
    if (s.model == Model::B8 && s.D == 0) s.D = 8;
    if (!proto.empty()) {
      s.proto = Prototype(proto[0], proto[1], proto[2], proto[3]);
      s.D = s.proto->D;
      s.e = s.proto->e;
    }
    return s;
  }
  TranslationSurface build() const { return from.empty() ? build_surface(spec()) : surface_from_json(slurp(from)); }
};

void print_validation(const ValidationReport& r) {
  std::cout << "area " << r.area << "\n";
  std::cout << "vertex classes " << r.vertex_classes << ", cone angles (x2pi):";
  for (int c : r.cone_multiples) std::cout << " " << c;
  std::cout << "\neuler characteristic " << r.euler << ", involution fixed points " << r.fixed_points << "\n";
  for (const auto& f : r.failures) std::cout << "FAIL " << f << "\n";
  std::cout << (r.ok() ? "valid" : "invalid") << "\n";
}

int cmd_surface(const SurfaceArgs& a, const std::string& emit) {
  TranslationSurface S = a.build();
  std::cout << S.name << "\n";
  ValidationReport r = a.from.empty() ? validate_builder_output(a.spec(), S) : validate_surface(S);
  print_validation(r);
  for (const auto& m : S.marked) std::cout << m.label << " polygon " << m.poly << " at (" << m.pos(0) << ", " << m.pos(1) << ")\n";
  if (!emit.empty()) spit(emit, surface_to_json(S) + "\n");
  return r.ok() ? 0 : 1;
}

int cmd_decompose(const SurfaceArgs& a, const std::string& dir) {
  TranslationSurface S = a.build();
  CylinderDecomposition dec = cylinder_decomposition(S, parse_direction(dir));
  std::cout << S.name << " direction " << dec.dir.str() << ": " << dec.cylinders.size() << " cylinders, "
            << dec.steps << " crossings\n";
  for (size_t i = 0; i < dec.cylinders.size(); ++i) {
    const auto& c = dec.cylinders[i];
    std::cout << "  C" << i + 1 << "  w=" << c.w << "  h=" << c.h << "  m=" << c.m << "\n";
  }
  for (const auto& p : dec.points)
    std::cout << "  " << p.label << " in C" << p.at.cyl + 1 << " X=" << p.at.X << " eta=" << p.at.eta
              << (p.at.boundary ? " (boundary)" : p.on_core ? " (core)" : "") << "\n";
  std::cout << "  area check " << (total_area(dec) == area(S) ? "ok" : "FAILED") << "\n";
  try {
    Multitwist mt = multitwist(dec);
    std::cout << "  multitwist t=" << mt.t << " k=(";
    for (size_t i = 0; i < mt.k.size(); ++i) std::cout << (i ? "," : "") << mt.k[i];
    std::cout << ")\n  matrix [[" << mt.matrix(0, 0) << ", " << mt.matrix(0, 1) << "], [" << mt.matrix(1, 0) << ", "
              << mt.matrix(1, 1) << "]]\n";
    std::cout << "  permutation " << twist_permutation(S, dec).cycles() << "\n";
  } catch (const NotCommensurable& ex) {
    std::cout << "  not parabolic: " << ex.what() << "\n";
  }
  return 0;
}

int cmd_group(long D, const std::string& component) {
  if (locus_status(D) == LocusStatus::empty) throw EmptyLocus("no eigenforms of discriminant " + std::to_string(D));
  std::vector<ComponentTag> tags;
  if (component == "plus") tags = {ComponentTag::plus};
  else if (component == "minus") tags = {ComponentTag::minus};
  else tags = components(D);
  bool ok = true;
  for (ComponentTag t : tags) {
    ComponentResult c = compute_group(D, t);
    std::cout << "D=" << D << " component " << to_string(t) << "\n";
    for (const auto& s : c.surfaces) std::cout << "  surface " << s << "\n";
    for (const auto& g : c.generators)
      std::cout << "  " << g.surface << " " << g.dir.str() << " -> " << g.perm.cycles()
                << (g.cross_checked ? "" : " (isomorphism disagrees)") << "\n";
    std::cout << "  lower " << c.lower.str() << "\n  upper " << c.upper.str();
    if (c.upper_source != "none") std::cout << " from " << c.obstruction;
    std::cout << "\n  predicted " << to_string(c.predicted) << "\n";
    for (const auto& e : c.errors) std::cout << "  ERROR " << e << "\n";
    std::cout << "  " << (c.pass ? "pass" : "fail") << "\n";
    ok = ok && c.pass;
  }
  return ok ? 0 : 1;
}

int cmd_verify(long dmin, long dmax, int jobs, const std::string& format, const std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  Report r = verify_range(dmin, dmax, jobs);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string text = format == "json" ? report_json(r) : format == "csv" ? report_csv(r) : report_text(r);
  if (out.empty()) std::cout << text;
  else spit(out, text);
  std::cerr << "verified " << r.results.size() << " discriminants in " << secs << " s with " << jobs << " jobs: "
            << (r.all_pass() ? "all pass" : std::to_string(r.failures.size()) + " failures") << "\n";
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prym point permutation groups in genus three"};
  app.require_subcommand(1);

  long dmin = 5, dmax = 30;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string format = "json", out;
  auto* verify = app.add_subcommand("verify", "verify the classification over a range of discriminants");
  verify->add_option("--dmin", dmin)->required();
  verify->add_option("--dmax", dmax)->required();
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--out", out);

  SurfaceArgs surf;
  std::string emit;
  auto* surface = app.add_subcommand("surface", "build, validate and optionally emit a surface");
  surf.add(surface);
  surface->add_option("--emit", emit, "write the surface as JSON");

  SurfaceArgs dsurf;
  std::string dir = "1,0";
  auto* decompose = app.add_subcommand("decompose", "cylinder decomposition in a direction");
  dsurf.add(decompose);
  decompose->add_option("--dir", dir, "direction X,Y");

  long gD = 0;
  std::string component;
  auto* group = app.add_subcommand("group", "permutation group of one discriminant");
  group->add_option("--D", gD)->required();
  group->add_option("--component", component)->check(CLI::IsMember({"plus", "minus"}));

  long hd = 0, he = 0;
  auto* hlk = app.add_subcommand("hlk", "HLK invariant of the square-tiled surface Z_{d^2}(e)");
  hlk->add_option("--d", hd)->required();
  hlk->add_option("--e", he)->required();

  long ad = 0;
  auto* appa = app.add_subcommand("appendix-a", "one- and two-cylinder model checks");
  appa->add_option("--d", ad)->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*verify) return cmd_verify(dmin, dmax, jobs, format, out);
    if (*surface) return cmd_surface(surf, emit);
    if (*decompose) return cmd_decompose(dsurf, dir);
    if (*group) return cmd_group(gD, component);
    if (*hlk) {
      TranslationSurface S = build_surface({Model::SQ_Z, 0, he, std::nullopt, hd});
      HLKInvariant h = hlk_invariant(S);
      std::cout << S.name << " " << h.str() << " class " << h.orbit_str() << " allowed " << h.allowed().str() << "\n";
      return 0;
    }
    if (*appa) {
      AppendixReport r = appendixA_check(ad);
      std::cout << appendix_json(r);
      return r.ok() ? 0 : 1;
    }
  } catch (const Error& ex) {
    std::cerr << ex.what() << "\n";
    return 2;
  }
  return 0;
}
