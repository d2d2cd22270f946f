#include "toric/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const Integer& x : v) {
    if (x.fits_slong_p())
      out.push_back(x.get_si());
    else
      out.push_back(x.get_str());
  }
  return out;
}

Json to_json(const GradedCount& g) {
  Json out = Json::array();
  for (std::int64_t c : g.coefficients()) out.push_back(c);
  return out;
}

IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer array");
  IntVector v;
  for (const Json& x : j) {
    if (x.is_number_integer())
      v.emplace_back(x.get<long>());
    else if (x.is_string()) {
      Integer z;
      if (z.set_str(x.get<std::string>(), 10) != 0)
        throw ParseError("bad integer \"" + x.get<std::string>() + "\"");
      v.push_back(z);
    } else {
      throw ParseError("expected an integer, got " + x.dump());
    }
  }
  return v;
}

Fan fan_from_json(const Json& j) {
  try {
    if (j.contains("schema") && j.at("schema") != kFanSchema)
      throw ParseError("unsupported fan schema " + j.at("schema").dump());
    const auto dim = j.at("ambientDim").get<std::size_t>();
    std::vector<IntVector> rays;
    for (const Json& r : j.at("rays")) rays.push_back(int_vector_from_json(r));
    std::vector<Cone> cones;
    for (const Json& c : j.at("maximalCones")) cones.push_back(c.get<Cone>());
    return Fan(dim, std::move(rays), std::move(cones));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("fan file: ") + e.what());
  }
}

Json fan_to_json(const Fan& fan, const std::string& name) {
  Json j;
  j["schema"] = kFanSchema;
  if (!name.empty()) j["name"] = name;
  j["ambientDim"] = fan.ambient_dim();
  Json rays = Json::array();
  for (const IntVector& r : fan.rays()) rays.push_back(to_json(r));
  j["rays"] = rays;
  j["maximalCones"] = fan.maximal_cones();
  return j;
}

Fan load_fan(const std::string& path) { return fan_from_json(read_json_file(path)); }

// ---------------------------------------------------------------------------
// Arrangements

Json layer_to_json(const Layer& layer) {
  Json j;
  Json gamma = Json::array();
  for (std::size_t r = 0; r < layer.codim(); ++r) gamma.push_back(to_json(layer.gamma().basis().row(r)));
  j["gamma"] = gamma;
  Json phi = Json::array();
  for (const Rational& x : layer.phi()) phi.push_back(x.get_str());
  j["phi"] = phi;
  return j;
}

Layer layer_from_json(const Json& j, std::size_t torus_dim) {
  try {
    IntegerMatrix gamma(0, torus_dim);
    for (const Json& row : j.at("gamma")) {
      IntVector v = int_vector_from_json(row);
      if (v.size() != torus_dim) throw ParseError("layer: gamma row " + row.dump() + " has the wrong length");
      gamma.append_row(v);
    }
    std::vector<Rational> phi;
    for (const Json& x : j.at("phi")) {
      if (x.is_number_integer())
        phi.emplace_back(x.get<long>());
      else if (x.is_string())
        phi.push_back(parse_rational(x.get<std::string>()));
      else
        throw ParseError("layer: phi entries must be strings \"p/q\" or integers");
    }
    return Layer(gamma, phi);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("layer: ") + e.what());
  }
}

std::vector<Layer> ArrangementFile::arrangement() const {
  std::vector<Layer> out;
  for (const NamedLayer& l : layers) out.push_back(l.layer);
  return out;
}

std::optional<std::string> ArrangementFile::name_of(const Layer& layer) const {
  for (const auto* list : {&layers, &elements})
    for (const NamedLayer& l : *list)
      if (l.layer == layer && !l.name.empty()) return l.name;
  return std::nullopt;
}

const Layer& ArrangementFile::named(const std::string& n) const {
  for (const auto* list : {&layers, &elements})
    for (const NamedLayer& l : *list)
      if (l.name == n) return l.layer;
  throw ParseError("unknown element name \"" + n + "\"");
}

ArrangementFile arrangement_from_json(const Json& j) {
  try {
    if (j.contains("schema") && j.at("schema") != kArrangementSchema)
      throw ParseError("unsupported arrangement schema " + j.at("schema").dump());
    ArrangementFile a;
    a.name = j.value("name", "");
    a.torus_dim = j.at("torusDim").get<std::size_t>();
    std::set<std::string> names;
    auto read_list = [&](const char* key, std::vector<NamedLayer>& out) {
      if (!j.contains(key)) return;
      for (const Json& l : j.at(key)) {
        NamedLayer nl{l.value("name", ""), layer_from_json(l, a.torus_dim)};
        if (!nl.name.empty() && !names.insert(nl.name).second)
          throw ParseError("duplicate element name \"" + nl.name + "\"");
        out.push_back(std::move(nl));
      }
    };
    read_list("layers", a.layers);
    read_list("elements", a.elements);
    if (j.contains("buildingSet")) {
      std::vector<std::string> bs;
      for (const Json& e : j.at("buildingSet")) {
        if (e.is_string())
          bs.push_back(e.get<std::string>());
        else if (e.is_number_unsigned() || e.is_number_integer())
          bs.push_back("#" + std::to_string(e.get<long>()));
        else
          throw ParseError("buildingSet entries must be names or poset indices");
      }
      a.building_set = std::move(bs);
    }
    if (j.contains("equalSignBases"))
      for (const auto& [name, rows] : j.at("equalSignBases").items()) {
        std::vector<IntVector> basis;
        for (const Json& r : rows) basis.push_back(int_vector_from_json(r));
        a.equal_sign_bases[name] = std::move(basis);
      }
    return a;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("arrangement file: ") + e.what());
  }
}

Json arrangement_to_json(const ArrangementFile& a) {
  Json j;
  j["schema"] = kArrangementSchema;
  if (!a.name.empty()) j["name"] = a.name;
  j["torusDim"] = a.torus_dim;
  auto write_list = [](const std::vector<NamedLayer>& list) {
    Json out = Json::array();
    for (const NamedLayer& l : list) {
      Json e;
      if (!l.name.empty()) e["name"] = l.name;
      const Json layer = layer_to_json(l.layer);
      for (auto& [k, v] : layer.items()) e[k] = v;
      out.push_back(e);
    }
    return out;
  };
  j["layers"] = write_list(a.layers);
  if (!a.elements.empty()) j["elements"] = write_list(a.elements);
  if (a.building_set) j["buildingSet"] = *a.building_set;
  if (!a.equal_sign_bases.empty()) {
    Json b = Json::object();
    for (const auto& [name, basis] : a.equal_sign_bases) {
      Json rows = Json::array();
      for (const IntVector& v : basis) rows.push_back(to_json(v));
      b[name] = rows;
    }
    j["equalSignBases"] = b;
  }
  return j;
}

ArrangementFile load_arrangement(const std::string& path) {
  return arrangement_from_json(read_json_file(path));
}

std::vector<std::string> element_names(const ArrangementFile& a, const LayerPoset& poset) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (i == 0) {
      out.push_back("torus");
      continue;
    }
    auto n = a.name_of(poset.element(i));
    out.push_back(n ? *n : "E" + std::to_string(i));
  }
  return out;
}

namespace {

std::size_t resolve(const ArrangementFile& a, const LayerPoset& poset, const std::string& ref) {
  if (!ref.empty() && ref[0] == '#') {
    std::size_t idx = 0;
    try {
      idx = std::stoul(ref.substr(1));
    } catch (const std::exception&) {
      throw ParseError("bad poset index \"" + ref + "\"");
    }
    if (idx >= poset.size()) throw ParseError("poset index " + ref + " out of range");
    return idx;
  }
  auto idx = poset.index_of(a.named(ref));
  if (!idx) throw ParseError("element \"" + ref + "\" is not in the poset of layers");
  return *idx;
}

}  // namespace

BuildingSet building_set_from(const ArrangementFile& a, const LayerPoset& poset) {
  if (!a.building_set) throw ParseError("arrangement file has no buildingSet");
  std::vector<std::size_t> members;
  for (const std::string& ref : *a.building_set) members.push_back(resolve(a, poset, ref));
  return BuildingSet(poset, members);
}

std::map<std::size_t, std::vector<IntVector>> supplied_bases(const ArrangementFile& a,
                                                             const LayerPoset& poset) {
  std::map<std::size_t, std::vector<IntVector>> out;
  for (const auto& [name, basis] : a.equal_sign_bases) out[resolve(a, poset, name)] = basis;
  return out;
}

}  // namespace toric
