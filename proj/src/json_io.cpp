#include "lzpath/json_io.hpp"

#include <charconv>

#include "lzpath/error.hpp"

namespace lzp {

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(j.get<long>()));
  throw Error(Errc::BadInput, "expected a rational string, got " + j.dump());
}

json to_json(const Weight& w) {
  json p = json::array();
  for (const auto& q : w.pairings) p.push_back(to_json(q));
  return json{{"pairings", p}, {"delta", to_json(w.delta)}};
}

Weight weight_from_json(const json& j, std::size_t rank) {
  if (!j.is_object() || !j.contains("pairings")) throw Error(Errc::BadInput, "weight needs a \"pairings\" array");
  const auto& p = j.at("pairings");
  if (!p.is_array() || p.size() != rank)
    throw Error(Errc::BadInput, "weight needs " + std::to_string(rank) + " pairings");
  Weight w(rank);
  for (std::size_t k = 0; k < rank; ++k) w.pairings[k] = rational_from_json(p[k]);
  if (j.contains("delta")) w.delta = rational_from_json(j.at("delta"));
  return w;
}

json to_json(const Path& p) {
  json segs = json::array();
  for (const auto& s : p.segments())
    segs.push_back(json{{"direction", to_json(s.direction)}, {"duration", to_json(s.duration)}});
  return json{{"segments", segs}};
}

Path path_from_json(const json& j, std::size_t rank) {
  if (!j.is_object() || !j.contains("segments") || !j.at("segments").is_array())
    throw Error(Errc::BadInput, "path needs a \"segments\" array");
  std::vector<Segment> raw;
  for (const auto& s : j.at("segments"))
    raw.push_back(Segment{weight_from_json(s.at("direction"), rank), rational_from_json(s.at("duration"))});
  if (raw.empty()) throw Error(Errc::BadInput, "path has no segments");
  return Path::canonicalize(std::move(raw));
}

json to_json(const LSPath& ls) {
  json dirs = json::array(), cuts = json::array();
  for (const auto& d : ls.directions) dirs.push_back(to_json(d));
  for (const auto& a : ls.cuts) cuts.push_back(to_json(a));
  return json{{"directions", dirs}, {"cuts", cuts}};
}

LSPath ls_from_json(const json& j, std::size_t rank) {
  if (!j.is_object() || !j.contains("directions") || !j.contains("cuts"))
    throw Error(Errc::BadInput, "LS path needs \"directions\" and \"cuts\"");
  LSPath ls;
  for (const auto& d : j.at("directions")) ls.directions.push_back(weight_from_json(d, rank));
  for (const auto& a : j.at("cuts")) ls.cuts.push_back(rational_from_json(a));
  return ls;
}

AffineData algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cartan")) throw Error(Errc::BadInput, "algebra needs a \"cartan\" matrix");
  std::vector<std::vector<long>> rows;
  try {
    rows = j.at("cartan").get<std::vector<std::vector<long>>>();
  } catch (const nlohmann::json::exception&) {
    throw Error(Errc::BadInput, "\"cartan\" must be an integer matrix");
  }
  Index special = j.value("special_vertex", 0);
  return AffineData::validate(CartanMatrix(std::move(rows)), special);
}

json algebra_summary(const AffineData& data) {
  json syms = json::array(), varpi = json::object(), gram = json::array();
  for (const auto& d : data.symmetrizers()) syms.push_back(to_json(d));
  for (Index i : data.classical_indices()) varpi[std::to_string(i)] = to_json(data.fundamental_level_zero(i));
  for (const auto& row : data.gram()) {
    json r = json::array();
    for (const auto& q : row) r.push_back(to_json(q));
    gram.push_back(r);
  }
  return json{{"cartan", data.cartan().entries()},
              {"special_vertex", data.special_vertex()},
              {"marks", data.marks()},
              {"comarks", data.comarks()},
              {"symmetrizers", syms},
              {"delta", to_json(data.delta())},
              {"fundamental_level_zero", varpi},
              {"gram", gram}};
}

Weight weight_spec_from_json(const AffineData& data, const json& j) {
  if (j.is_object() && j.contains("pairings")) return weight_from_json(j, data.size());
  if (!j.is_object()) throw Error(Errc::BadInput, "weight specification must be an object");
  for (const auto& [key, _] : j.items())
    if (key != "Lambda" && key != "varpi" && key != "delta")
      throw Error(Errc::BadInput, "unknown key '" + key + "' in weight specification");
  Weight w = data.zero();
  if (j.contains("Lambda")) {
    const auto& c = j.at("Lambda");
    if (!c.is_array() || c.size() != data.size()) throw Error(Errc::BadInput, "\"Lambda\" needs one coefficient per node");
    for (std::size_t k = 0; k < data.size(); ++k) w += rational_from_json(c[k]) * data.fundamental(k);
  }
  if (j.contains("varpi")) {
    const auto& c = j.at("varpi");
    if (!c.is_object()) throw Error(Errc::BadInput, "\"varpi\" must map index -> coefficient");
    for (const auto& [key, val] : c.items()) {
      Index i = -1;
      auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), i);
      if (ec != std::errc{} || end != key.data() + key.size() || i < 0 || i >= static_cast<Index>(data.size()) ||
          i == data.special_vertex())
        throw Error(Errc::BadInput, "\"varpi\" index '" + key + "' is not a non-special vertex");
      w += rational_from_json(val) * data.fundamental_level_zero(i);
    }
  }
  if (j.contains("delta")) w += rational_from_json(j.at("delta")) * data.delta();
  return w;
}

}  // namespace lzp
