#include <json.hpp>

#include "prym/surface.hpp"

namespace prym {

using nlohmann::json;

namespace {

json num_to_json(const QuadNum& x) {
  return {{"p_num", x.p().get_num().get_str()},
          {"p_den", x.p().get_den().get_str()},
          {"q_num", x.q().get_num().get_str()},
          {"q_den", x.q().get_den().get_str()},
          {"D", x.radicand()}};
}

mpz_class big(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_number_integer()) return mpz_class(v.get<long>());
  if (!v.is_string()) throw FormatError(std::string(key) + " must be an integer or a decimal string");
  mpz_class z;
  if (z.set_str(v.get<std::string>(), 10) != 0) throw FormatError(std::string(key) + " is not an integer");
  return z;
}

QuadNum num_from_json(const json& j) {
  mpz_class pd = big(j, "p_den"), qd = big(j, "q_den");
  if (pd == 0 || qd == 0) throw FormatError("zero denominator");
  long D = j.at("D").get<long>();
  return QuadNum(mpq_class(big(j, "p_num"), pd), mpq_class(big(j, "q_num"), qd), D);
}

json vec_to_json(const Vec2& v) { return json::array({num_to_json(v(0)), num_to_json(v(1))}); }

Vec2 vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("point must be a pair");
  return vec2(num_from_json(j[0]), num_from_json(j[1]));
}

}  // namespace

std::string surface_to_json(const TranslationSurface& S) {
  json out;
  out["name"] = S.name;
  out["D"] = S.D;
  json polys = json::array();
  for (const auto& poly : S.polygons) {
    json p = json::array();
    for (const auto& v : poly) p.push_back(vec_to_json(v));
    polys.push_back(p);
  }
  out["polygons"] = polys;
  json glue = json::array();
  for (int j = 0; j < S.num_polys(); ++j)
    for (int i = 0; i < S.num_edges(j); ++i) {
      EdgeRef f = S.gluing[j][i];
      if (EdgeRef{j, i} <= f) glue.push_back({j, i, f.poly, f.edge});
    }
  out["gluings"] = glue;
  json marked = json::array();
  for (const auto& m : S.marked) marked.push_back({{"label", m.label}, {"poly", m.poly}, {"pos", vec_to_json(m.pos)}});
  out["marked_points"] = marked;
  json inv = json::array();
  for (int j = 0; j < S.num_polys(); ++j)
    inv.push_back({{"poly", j}, {"target", S.inv_target[j]}, {"centre", vec_to_json(S.inv_centre[j])}});
  out["involution"] = inv;
  return out.dump(2);
}

TranslationSurface surface_from_json(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
  try {
    TranslationSurface S;
    S.name = in.value("name", "");
    S.D = in.at("D").get<long>();
    for (const auto& p : in.at("polygons")) {
      std::vector<Vec2> poly;
      for (const auto& v : p) poly.push_back(vec_from_json(v));
      if (poly.size() < 3) throw FormatError("polygon with fewer than 3 vertices");
      S.polygons.push_back(poly);
      S.gluing.emplace_back(poly.size(), EdgeRef{});
    }
    auto check = [&](int j, int i) {
      if (j < 0 || j >= S.num_polys() || i < 0 || i >= S.num_edges(j)) throw FormatError("edge index out of range");
    };
    for (const auto& g : in.at("gluings")) {
      if (!g.is_array() || g.size() != 4) throw FormatError("gluing must be [poly, edge, poly, edge]");
      int j = g[0], i = g[1], k = g[2], l = g[3];
      check(j, i);
      check(k, l);
      S.gluing[j][i] = {k, l};
      S.gluing[k][l] = {j, i};
    }
    for (int j = 0; j < S.num_polys(); ++j)
      for (int i = 0; i < S.num_edges(j); ++i)
        if (S.gluing[j][i].poly < 0) throw FormatError("edge left unglued");
    for (const auto& m : in.at("marked_points")) {
      MarkedPoint mp{m.at("label").get<std::string>(), m.at("poly").get<int>(), vec_from_json(m.at("pos"))};
      if (mp.poly < 0 || mp.poly >= S.num_polys()) throw FormatError("marked point polygon out of range");
      S.marked.push_back(mp);
    }
    S.inv_target.assign(S.num_polys(), -1);
    S.inv_centre.assign(S.num_polys(), vec2(0, 0));
    for (const auto& e : in.at("involution")) {
      int j = e.at("poly");
      if (j < 0 || j >= S.num_polys()) throw FormatError("involution polygon out of range");
      S.inv_target[j] = e.at("target");
      S.inv_centre[j] = vec_from_json(e.at("centre"));
    }
    return S;
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

}  // namespace prym
