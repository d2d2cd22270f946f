#pragma once

// JSON interchange for fans and arrangements. Ray indices are 0-based in
// files; human-readable output uses 1-based r1, r2, ...

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/arrangement.hpp"
#include "toric/fan.hpp"
#include "toric/wonderful.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFanSchema = "toric-fan/1";
inline constexpr const char* kArrangementSchema = "toric-arrangement/1";

/// Throws ParseError on malformed JSON or missing fields and ValidationError
/// on structurally invalid content.
Fan fan_from_json(const Json& j);
Json fan_to_json(const Fan& fan, const std::string& name = "");

Json read_json_file(const std::string& path);
Fan load_fan(const std::string& path);

struct NamedLayer {
  std::string name;
  Layer layer;
};

/// Contents of an arrangement file. `layers` form the arrangement;
/// `elements` only attach names to further poset elements.
struct ArrangementFile {
  std::string name;
  std::size_t torus_dim = 0;
  std::vector<NamedLayer> layers;
  std::vector<NamedLayer> elements;
  /// Entries are element names, or "#i" for poset index i.
  std::optional<std::vector<std::string>> building_set;
  /// Element name -> supplied equal-sign basis.
  std::map<std::string, std::vector<IntVector>> equal_sign_bases;

  std::vector<Layer> arrangement() const;
  std::optional<std::string> name_of(const Layer& layer) const;
  /// Throws ParseError for an unknown name.
  const Layer& named(const std::string& name) const;
};

ArrangementFile arrangement_from_json(const Json& j);
Json arrangement_to_json(const ArrangementFile& a);
ArrangementFile load_arrangement(const std::string& path);

Json layer_to_json(const Layer& layer);
Layer layer_from_json(const Json& j, std::size_t torus_dim);

/// Display names of poset elements: the file's names where available,
/// "torus" for element 0 and "E<i>" otherwise.
std::vector<std::string> element_names(const ArrangementFile& a, const LayerPoset& poset);
/// Throws ParseError if the file has no building set or names an element
/// outside the poset.
BuildingSet building_set_from(const ArrangementFile& a, const LayerPoset& poset);
/// Supplied bases keyed by poset index.
std::map<std::size_t, std::vector<IntVector>> supplied_bases(const ArrangementFile& a,
                                                             const LayerPoset& poset);

Json to_json(const IntVector& v);
Json to_json(const GradedCount& g);
IntVector int_vector_from_json(const Json& j);

}  // namespace toric
