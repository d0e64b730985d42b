#include "prym/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace prym {

void SuiteResult::record(bool ok, const std::string& what) {
  if (ok) {
    ++passed;
  } else {
    ++failed;
    failures.push_back(what);
  }
}

namespace {

std::vector<MarkedPermutation> sym3() { return closure({MarkedPermutation::transposition(1, 2),
                                                         MarkedPermutation::transposition(1, 3)}); }

struct Plan {
  SurfaceSpec spec;
  std::vector<Direction> dirs;
};

void run_plan(ComponentResult& out, const Plan& plan) {
  TranslationSurface S = build_surface(plan.spec);
  out.surfaces.push_back(S.name);
  ValidationReport vr = validate_builder_output(plan.spec, S);
  for (const auto& f : vr.failures) out.errors.push_back(S.name + ": " + f);
  for (const auto& dir : plan.dirs) {
    CylinderDecomposition dec = cylinder_decomposition(S, dir);
    Multitwist mt = multitwist(dec);
    GeneratorResult g;
    g.surface = S.name;
    g.dir = dir;
    g.k = mt.k;
    g.perm = twist_permutation(S, dec);
    if (!(twist_permutation(S, dec, -1) == g.perm))
      out.errors.push_back(S.name + " " + dir.str() + ": inverse twist induces a different permutation");
    MarkedPermutation iso = twist_permutation_by_isomorphism(S, dec);
    g.cross_checked = iso == g.perm;
    if (!g.cross_checked)
      out.errors.push_back(S.name + " " + dir.str() + ": shear gives " + g.perm.cycles() + ", isomorphism gives " +
                           iso.cycles());
    out.generators.push_back(g);
  }
}

std::vector<MarkedPermutation> perms_of(const ComponentResult& r) {
  std::vector<MarkedPermutation> g;
  for (const auto& x : r.generators) g.push_back(x.perm);
  return g;
}

std::string partition_str(const std::array<char, 3>& t) {
  std::string s;
  for (int k = 0; k < 3; ++k) s += std::string(k ? " " : "") + "w" + std::to_string(k + 1) + ":" + t[k];
  return s;
}

// Z-surface obstruction for even D = 0, 4 (mod 16); returns the allowed group
std::vector<MarkedPermutation> obstruction(ComponentResult& out, long D) {
  long d = 0;
  bool square = is_perfect_square(D, &d);
  auto S = reduced_prototypes(D);
  if (S.empty()) throw InadmissibleSpec("S_" + std::to_string(D) + " is empty");
  std::optional<SubgroupClass> first;
  std::vector<MarkedPermutation> allowed;
  for (long e : S) {
    SubgroupClass u;
    std::vector<std::string> labels;
    std::string shown;
    if (square) {
      HLKInvariant h = hlk_invariant(build_surface({Model::SQ_Z, 0, e, std::nullopt, d}));
      for (char c : h.per_point) labels.push_back(std::string(1, c));
      shown = "hlk Z_" + std::to_string(D) + "(" + std::to_string(e) + ")=" + h.str() + " [" +
              partition_str(h.per_point) + "]";
    } else {
      FrClassPartition f = fr_classes(D, e);
      for (const auto& c : f.cls) labels.push_back(c.first.get_str() + "," + c.second.get_str());
      shown = "fr Z_" + std::to_string(D) + "(" + std::to_string(e) + ") " + f.str();
    }
    auto group = stabilizer_of_partition(labels);
    u = classify(group);
    if (!first) {
      first = u;
      allowed = group;
      out.obstruction = shown;
    } else if (!(*first == u)) {
      out.errors.push_back("obstruction differs between prototypes: " + shown);
    }
  }
  out.upper = *first;
  out.upper_source = square ? "hlk" : "fr";
  return allowed;
}

void check_tag(long D, ComponentTag tag) {
  LocusStatus st = locus_status(D);
  if (st == LocusStatus::empty) throw EmptyLocus("E_" + std::to_string(D) + "(4) is empty");
  bool two = st == LocusStatus::two_components;
  if (two == (tag == ComponentTag::whole))
    throw InadmissibleSpec("component " + to_string(tag) + " does not exist for D=" + std::to_string(D));
}

void expect_component(ComponentResult& out, Model m, long e, long D) {
  if (out.tag == ComponentTag::whole) return;
  if (component_of(m, e, D) != out.tag)
    out.errors.push_back(to_string(m) + "_" + std::to_string(D) + "(" + std::to_string(e) + ") lies on the " +
                         to_string(component_of(m, e, D)) + " component");
}

}  // namespace

ComponentResult compute_group(long D, ComponentTag tag) {
  check_tag(D, tag);
  ComponentResult out;
  out.D = D;
  out.tag = tag;
  const Direction H(1, 0), V(0, 1);
  std::vector<MarkedPermutation> allowed = sym3();
  out.upper = classify(allowed);
  out.upper_source = "none";
  try {
    const long r16 = mod(D, 16);
    if (D == 8) {
      run_plan(out, {{Model::B8, 8, 0, std::nullopt, 0}, {H, V}});
    } else if (D % 2 == 0 && (r16 == 8 || r16 == 12)) {
      long e0 = r16 == 8 ? 0 : -2;
      run_plan(out, {{Model::A_plus, D, e0, std::nullopt, 0}, {H, V}});
    } else if (D % 2 == 0) {
      allowed = obstruction(out, D);
      long d = 0;
      bool square = is_perfect_square(D, &d);
      // lower bound: first prototype whose horizontal twist moves a point
      for (long e : reduced_prototypes(D)) {
        SurfaceSpec spec = square ? SurfaceSpec{Model::SQ_Z, 0, e, std::nullopt, d}
                                  : SurfaceSpec{Model::Z, D, e, std::nullopt, 0};
        ComponentResult trial;
        run_plan(trial, {spec, {H}});
        out.surfaces.insert(out.surfaces.end(), trial.surfaces.begin(), trial.surfaces.end());
        out.generators.insert(out.generators.end(), trial.generators.begin(), trial.generators.end());
        out.errors.insert(out.errors.end(), trial.errors.begin(), trial.errors.end());
        if (!trial.generators.back().perm.is_identity()) break;
      }
    } else if (D == 17) {
      if (tag == ComponentTag::plus) {
        expect_component(out, Model::A_plus, -3, D);
        run_plan(out, {{Model::A_plus, 17, -3, std::nullopt, 0}, {H, V}});
      } else {
        expect_component(out, Model::A_minus, -3, D);
        run_plan(out, {{Model::Z, 17, -3, std::nullopt, 0}, {H, Direction(2, 1)}});
      }
    } else if (D == 25) {
      if (tag == ComponentTag::minus) {
        expect_component(out, Model::A_minus, -3, D);
        run_plan(out, {{Model::A_minus, 25, -3, std::nullopt, 0}, {H, V}});
      } else {
        expect_component(out, Model::A_minus, -1, D);
        run_plan(out, {{Model::A_minus, 25, -1, std::nullopt, 0}, {H, Direction(1, 1)}});
      }
    } else {
      std::vector<long> cand = r16 == 1 ? std::vector<long>{-5, -3} : std::vector<long>{-1, 1};
      auto S = reduced_prototypes(D);
      std::optional<long> pick;
      for (long e : cand)
        if (std::find(S.begin(), S.end(), e) != S.end() && component_of(Model::A_plus, e, D) == tag) pick = e;
      if (!pick) throw InadmissibleSpec("no A+ prototype on the " + to_string(tag) + " component");
      run_plan(out, {{Model::A_plus, D, *pick, std::nullopt, 0}, {H, V}});
    }
  } catch (const Error& ex) {
    out.errors.push_back(ex.what());
  } catch (const std::exception& ex) {
    out.errors.push_back(std::string("internal: ") + ex.what());
  }

  auto gens = perms_of(out);
  auto lower = closure(gens);
  out.lower = classify(lower);
  out.lower_in_upper = contained_in(lower, allowed);
  if (!out.lower_in_upper) out.errors.push_back("generated group " + out.lower.str() + " escapes " + out.upper.str());

  // verdict: the only place the predicted group is consulted
  out.predicted = predicted_group(D);
  auto tag_of = [](GroupName g) {
    return g == GroupName::Sym2 ? SubgroupClass::Tag::sym2 : SubgroupClass::Tag::sym3;
  };
  out.pass = out.errors.empty() && out.lower == out.upper && out.lower.tag == tag_of(out.predicted);
  return out;
}

SuiteResult lemma41_suite(long D) {
  SuiteResult r;
  const std::string Ds = std::to_string(D);
  for (long e : reduced_prototypes(D)) {
    Prototype P = Prototype::reduced(D, e);
    const bool b_odd = P.b % 2 != 0, bv_odd = (P.b - e - 2) % 2 != 0;
    struct Row {
      Model m;
      Direction dir;
      bool nontrivial;
      MarkedPermutation perm;
      const char* name;
    };
    const Row rows[] = {
        {Model::A_plus, Direction(1, 0), b_odd, MarkedPermutation::transposition(1, 2), "A+ horizontal"},
        {Model::A_plus, Direction(0, 1), true, MarkedPermutation::transposition(1, 3), "A+ vertical"},
        {Model::A_minus, Direction(1, 0), true, MarkedPermutation::transposition(1, 2), "A- horizontal"},
        {Model::A_minus, Direction(0, 1), bv_odd, MarkedPermutation::transposition(2, 3), "A- vertical"},
    };
    std::map<Model, TranslationSurface> built;
    for (Model m : {Model::A_plus, Model::A_minus}) {
      SurfaceSpec spec{m, D, e, std::nullopt, 0};
      std::string tag = to_string(m) + "_" + Ds + "(" + std::to_string(e) + ")";
      try {
        built[m] = build_surface(spec);
        auto vr = validate_builder_output(spec, built[m]);
        r.record(vr.ok(), tag + " builder: " + (vr.ok() ? "" : vr.failures.front()));
      } catch (const Error& ex) {
        r.record(false, tag + ": " + ex.what());
      }
    }
    for (const auto& row : rows) {
      std::string tag = to_string(row.m) + "_" + Ds + "(" + std::to_string(e) + ") " + row.name;
      if (!built.count(row.m)) continue;
      try {
        const TranslationSurface& S = built[row.m];
        auto dec = cylinder_decomposition(S, row.dir);
        auto mt = multitwist(dec);
        MarkedPermutation p = twist_permutation(S, dec);
        bool ok = row.nontrivial ? p == row.perm : p.is_identity();
        r.record(ok, tag + ": got " + p.cycles());
        // two points on one core are exchanged iff that cylinder twists an odd number of times
        bool parity = true;
        for (int c = 0; c < static_cast<int>(dec.cylinders.size()); ++c) {
          std::vector<int> on;
          for (int a = 0; a < 3; ++a)
            if (dec.points[a].on_core && dec.points[a].at.cyl == c) on.push_back(a);
          if (on.size() == 2) parity = parity && ((p(on[0]) == on[1]) == (mt.k[c] % 2 != 0));
        }
        r.record(parity, tag + ": exchange does not follow the parity of k");
      } catch (const Error& ex) {
        r.record(false, tag + ": " + ex.what());
      }
    }
  }
  return r;
}

SuiteResult fr_law_suite(long D) {
  SuiteResult r;
  if (!in_restricted_case(D)) return r;
  const std::string Ds = std::to_string(D);
  const std::pair<mpq_class, mpq_class> half_y{0, mpq_class(1, 2)}, zero{0, 0};
  for (long e : reduced_prototypes(D)) {
    std::string tag = "Z_" + Ds + "(" + std::to_string(e) + ")";
    try {
      FrClassPartition f = fr_classes(D, e);
      r.record(f.cls[0] == half_y && f.cls[1] == half_y && f.cls[2] == zero, tag + " classes " + f.str());
      TranslationSurface Z = build_surface({Model::Z, D, e, std::nullopt, 0});
      std::vector<std::string> labels;
      for (const auto& c : f.cls) labels.push_back(c.first.get_str() + "," + c.second.get_str());
      auto allowed = stabilizer_of_partition(labels);
      for (const auto& dir : {Direction(1, 0), Direction(0, 1)}) {
        std::string dt = tag + " " + dir.str();
        auto dec = cylinder_decomposition(Z, dir);
        auto mt = multitwist(dec);
        PQDecomposition pq = pq_decompose(mt.matrix, D, canonical_d(D));
        r.record(pq.identity_holds, dt + ": det identity gives " + pq.identity_value.get_str());
        r.record(pq.P_mod2_det == 1, dt + ": det P_A even");
        for (int k = 0; k < 3; ++k) {
          FrLawCheck c = fr_law(mt.matrix, f.v[k], D);
          r.record(c.holds, dt + ": fr law fails for w" + std::to_string(k + 1));
        }
        MarkedPermutation p = twist_permutation(Z, dec);
        r.record(contained_in({p}, allowed), dt + ": " + p.cycles() + " breaks the fr partition");
      }
    } catch (const Error& ex) {
      r.record(false, tag + ": " + ex.what());
    }
  }
  return r;
}

std::vector<long> admissible_discriminants(long dmin, long dmax) {
  std::vector<long> out;
  for (long D = std::max(dmin, 1L); D <= dmax; ++D)
    if (is_discriminant(D) && locus_status(D) != LocusStatus::empty) out.push_back(D);
  return out;
}

Report verify_range(long dmin, long dmax, int jobs) {
  if (dmin > dmax) throw InadmissibleSpec("dmin > dmax");
  Report rep;
  rep.dmin = dmin;
  rep.dmax = dmax;
  auto Ds = admissible_discriminants(dmin, dmax);
  struct Slot {
    DiscriminantResult res;
    SuiteResult l41, fr;
  };
  std::vector<Slot> slots(Ds.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < Ds.size(); i = next++) {
      long D = Ds[i];
      Slot& s = slots[i];
      s.res.D = D;
      for (ComponentTag t : components(D)) {
        try {
          s.res.components.push_back(compute_group(D, t));
        } catch (const Error& ex) {
          ComponentResult c;
          c.D = D;
          c.tag = t;
          c.errors.push_back(ex.what());
          s.res.components.push_back(c);
        }
      }
      s.l41 = lemma41_suite(D);
      s.fr = fr_law_suite(D);
    }
  };
  int n = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& s : slots) {
    for (const auto& c : s.res.components) {
      std::string where = "D=" + std::to_string(c.D) + " " + to_string(c.tag);
      for (const auto& e : c.errors) rep.failures.push_back(where + ": " + e);
      if (!c.pass)
        rep.failures.push_back(where + ": lower " + c.lower.str() + ", upper " + c.upper.str() + ", predicted " +
                               to_string(c.predicted));
    }
    rep.results.push_back(std::move(s.res));
    for (auto [from, to] : {std::make_pair(&s.l41, &rep.lemma41), std::make_pair(&s.fr, &rep.fr_law)}) {
      to->passed += from->passed;
      to->failed += from->failed;
      to->failures.insert(to->failures.end(), from->failures.begin(), from->failures.end());
    }
  }
  for (const auto& f : rep.lemma41.failures) rep.failures.push_back("lemma41 table: " + f);
  for (const auto& f : rep.fr_law.failures) rep.failures.push_back("fr law: " + f);
  return rep;
}

namespace {

// vertical cylinders: the pair of equal moduli are the lateral ones
bool split_lateral(const CylinderDecomposition& v, int& central, std::vector<int>& lateral) {
  const auto& c = v.cylinders;
  for (int k = 0; k < 3; ++k) {
    int a = (k + 1) % 3, b = (k + 2) % 3;
    if (c[a].m == c[b].m) {
      central = k;
      lateral = {std::min(a, b), std::max(a, b)};
      return true;
    }
  }
  return false;
}

AppendixModel check_model(long d, Model m, std::vector<std::string>& failures) {
  AppendixModel out;
  SurfaceSpec spec{m, 0, 0, std::nullopt, d};
  TranslationSurface S = build_surface(spec);
  out.surface = S.name;
  auto vr = validate_surface(S);
  out.valid = vr.ok();
  for (const auto& f : vr.failures) failures.push_back(S.name + ": " + f);
  auto sq = vr.area.rational_value();
  if (!sq || sq->get_den() != 1) failures.push_back(S.name + ": area is not an integer");
  else out.squares = sq->get_num().get_si();
  out.hlk = hlk_invariant(S);
  auto hor = cylinder_decomposition(S, Direction(1, 0));
  out.horizontal_cylinders = static_cast<long>(hor.cylinders.size());
  auto ver = cylinder_decomposition(S, Direction(0, 1));
  for (const auto& c : ver.cylinders) {
    out.vertical_widths.push_back(c.w);
    out.vertical_heights.push_back(c.h);
    out.vertical_moduli.push_back(c.m);
  }
  if (total_area(ver) != vr.area) failures.push_back(S.name + ": vertical cylinder areas do not sum to the area");
  if (ver.cylinders.size() != 3) {
    failures.push_back(S.name + ": " + std::to_string(ver.cylinders.size()) + " vertical cylinders");
    return out;
  }
  int central = -1;
  std::vector<int> lat;
  out.lateral_equal = split_lateral(ver, central, lat);
  if (!out.lateral_equal) {
    failures.push_back(S.name + ": no two vertical cylinders of equal modulus");
    return out;
  }
  const auto& C = ver.cylinders;
  // circumferences: model C winds the central cylinder 2n times the lateral one,
  // model D winds each lateral one n times the central one
  auto n = (m == Model::MODEL_C ? C[central].w / (QuadNum(2) * C[lat[0]].w) : C[lat[0]].w / C[central].w)
               .rational_value();
  out.moduli_law = C[lat[0]].w == C[lat[1]].w && n && n->get_den() == 1 && *n > 0;
  if (out.moduli_law) out.n_law = n->get_num().get_si();
  else failures.push_back(S.name + ": vertical circumferences break the winding law");
  out.widths_rational = true;
  for (const auto& a : C)
    for (const auto& b : C) out.widths_rational = out.widths_rational && (a.w / b.w).rational_value().has_value();
  try {
    moduli_ratios(ver);
  } catch (const NotCommensurable& ex) {
    failures.push_back(S.name + ": " + ex.what());
  }
  if (!out.widths_rational) failures.push_back(S.name + ": vertical widths are not commensurable");
  return out;
}

}  // namespace

AppendixReport appendixA_check(long d) {
  if (d <= 4) throw InadmissibleSpec("appendix checks need d > 4");
  AppendixReport r;
  r.d = d;
  try {
    r.C = check_model(d, Model::MODEL_C, r.failures);
    r.D = check_model(d, Model::MODEL_D, r.failures);
  } catch (const Error& ex) {
    r.failures.push_back(ex.what());
    return r;
  }
  if (r.C.horizontal_cylinders != 2) r.failures.push_back("model C is not a two-cylinder surface horizontally");
  if (r.D.horizontal_cylinders != 1) r.failures.push_back("model D is not a one-cylinder surface horizontally");
  if (d % 2) {
    if (r.C.hlk.str() != "(3,[])") r.failures.push_back("model C HLK " + r.C.hlk.str());
    if (r.C.squares != 2 * d) r.failures.push_back("model C has " + std::to_string(r.C.squares) + " squares");
    if (r.D.hlk.str() != "(0,[h,v,c])") r.failures.push_back("model D HLK " + r.D.hlk.str());
    if (r.D.squares != d) r.failures.push_back("model D has " + std::to_string(r.D.squares) + " squares");
  } else {
    // only the SL(2,Z) class is meaningful across the two models
    if (r.C.hlk.orbit_str() != "(1,[2,0,0])") r.failures.push_back("model C HLK " + r.C.hlk.str());
    if (r.D.hlk.orbit_str() != "(1,[2,0,0])") r.failures.push_back("model D HLK " + r.D.hlk.str());
  }
  return r;
}

}  // namespace prym
