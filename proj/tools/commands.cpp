#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "toric/error.hpp"
#include "toric/series.hpp"
#include "toric/typea.hpp"

namespace toric::cli {

namespace {

constexpr const char* kReportSchema = "toric-report/1";

using Rows = std::vector<std::vector<std::string>>;

std::string format_table(const Rows& rows, const std::string& indent = "  ") {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line = indent;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string polynomial(const GradedCount& g) {
  std::vector<mpq_class> c;
  for (std::int64_t x : g.coefficients()) c.emplace_back(static_cast<long>(x));
  return QPoly(std::move(c)).to_string();
}

Json report(const std::string& command) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  return j;
}

std::string fan_name(const std::string& path) {
  Json j = read_json_file(path);
  if (j.contains("name") && j["name"].is_string()) return j["name"].get<std::string>();
  return std::filesystem::path(path).stem().string();
}

// ---------------------------------------------------------------------------
// Arrangement models

struct Model {
  ArrangementFile file;
  LayerPoset poset;
  std::vector<std::string> names;
  BuildingSet g;
  bool default_building_set;

  std::string member_name(std::size_t m) const { return names[g.poset_index(m)]; }
  std::string set_label(const MemberSet& s) const {
    std::vector<std::string> parts;
    for (std::size_t m : s) parts.push_back(member_name(m));
    return "{" + join(parts, ",") + "}";
  }
  Json set_json(const MemberSet& s) const {
    Json a = Json::array();
    for (std::size_t m : s) a.push_back(member_name(m));
    return a;
  }
  // T-monomial of an admissible function, e.g. "T6*T7^2".
  std::string t_monomial(const AdmissibleFunction& f) const {
    if (f.support.empty()) return "1";
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < f.support.size(); ++i) {
      std::string p = "T" + std::to_string(f.support[i] + 1);
      if (f.values[i] > 1) p += "^" + std::to_string(f.values[i]);
      parts.push_back(p);
    }
    return join(parts, "*");
  }
  std::string values_label(const AdmissibleFunction& f) const {
    if (f.support.empty()) return "f = 0";
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < f.support.size(); ++i)
      parts.push_back(member_name(f.support[i]) + "=" + std::to_string(f.values[i]));
    return join(parts, " ");
  }
};

BuildingSet make_building_set(const ArrangementFile& file, const LayerPoset& poset) {
  if (file.building_set) return building_set_from(file, poset);
  std::vector<std::size_t> members;
  for (std::size_t i = 1; i < poset.size(); ++i) members.push_back(i);
  return BuildingSet(poset, members);
}

Model load_model(const std::string& arr_path) {
  ArrangementFile file = load_arrangement(arr_path);
  LayerPoset poset = poset_of_layers(file.arrangement(), file.torus_dim);
  std::vector<std::string> names = element_names(file, poset);
  BuildingSet g = make_building_set(file, poset);
  const bool dflt = !file.building_set.has_value();
  Model m{std::move(file), std::move(poset), std::move(names), std::move(g), dflt};
  WellConnectedReport wc = is_well_connected(m.g);
  if (!wc.well_connected)
    throw ValidationError("building set is not well-connected: the intersection of " + m.set_label(wc.subset) +
                          " has a component outside the building set (" +
                          (wc.missing_component ? wc.missing_component->to_string() : std::string("?")) + ")");
  return m;
}

void require_good(const Model& m, const Fan& fan, int bound) {
  if (fan.ambient_dim() != m.file.torus_dim) throw ValidationError("fan and arrangement dimensions differ");
  GoodnessReport r = goodness_check(fan, m.poset, supplied_bases(m.file, m.poset), bound);
  if (r.good) return;
  for (std::size_t i = 0; i < r.certificates.size(); ++i)
    if (!r.certificates[i].found)
      throw ValidationError("fan is not good for the arrangement: element " + m.names[i] + ": " +
                            r.certificates[i].detail);
}

Json graded_json(const GradedCount& g) { return to_json(g); }

// Sections shared by the model commands and reproduce.

std::string poset_table(const Model& m) {
  Rows rows{{"id", "name", "codim", "layer"}};
  for (std::size_t i = 0; i < m.poset.size(); ++i)
    rows.push_back({std::to_string(i), m.names[i], std::to_string(m.poset.element(i).codim()),
                    m.poset.element(i).to_string()});
  std::vector<std::string> edges;
  for (const auto& [a, b] : m.poset.hasse_edges()) edges.push_back(m.names[a] + " < " + m.names[b]);
  std::ostringstream os;
  os << "poset elements: " << m.poset.size() << '\n' << format_table(rows);
  os << "hasse edges (reverse inclusion): " << edges.size() << '\n';
  for (const std::string& e : edges) os << "  " << e << '\n';
  return os.str();
}

Json poset_json(const Model& m) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < m.poset.size(); ++i) {
    Json e;
    e["id"] = i;
    e["name"] = m.names[i];
    e["codim"] = m.poset.element(i).codim();
    const Json layer = layer_to_json(m.poset.element(i));
    for (auto& [k, v] : layer.items()) e[k] = v;
    elements.push_back(e);
  }
  Json edges = Json::array();
  for (const auto& [a, b] : m.poset.hasse_edges()) edges.push_back({a, b});
  Json j;
  j["elements"] = elements;
  j["hasse"] = edges;
  return j;
}

std::string building_set_table(const Model& m) {
  std::ostringstream os;
  std::vector<std::string> members;
  for (std::size_t i = 0; i < m.g.size(); ++i) members.push_back("T" + std::to_string(i + 1) + "=" + m.member_name(i));
  os << "building set" << (m.default_building_set ? " (all poset elements)" : "") << ": " << m.g.size()
     << " members\n  " << join(members, " ") << '\n';
  os << "well-connected: yes\n";
  return os.str();
}

std::string nested_table(const Model& m, const std::vector<MemberSet>& nested) {
  std::ostringstream os;
  os << "nested sets: " << nested.size() << '\n';
  for (const MemberSet& s : nested) os << "  " << m.set_label(s) << '\n';
  return os.str();
}

std::string admissible_table(const Model& m, const std::vector<AdmissibleFunction>& fs) {
  Rows rows{{"support", "values", "monomial", "degree"}};
  for (const AdmissibleFunction& f : fs)
    rows.push_back({m.set_label(f.support), m.values_label(f), m.t_monomial(f), std::to_string(f.degree())});
  std::ostringstream os;
  os << "admissible functions: " << fs.size() << '\n' << format_table(rows);
  return os.str();
}

Json admissible_json(const Model& m, const std::vector<AdmissibleFunction>& fs) {
  Json a = Json::array();
  for (const AdmissibleFunction& f : fs) {
    Json e;
    e["support"] = m.set_json(f.support);
    Json values = Json::object();
    for (std::size_t i = 0; i < f.support.size(); ++i) values[m.member_name(f.support[i])] = f.values[i];
    e["values"] = values;
    e["monomial"] = m.t_monomial(f);
    e["degree"] = f.degree();
    a.push_back(e);
  }
  return a;
}

std::string theta_label(const std::vector<std::vector<RayMonomial>>& theta) {
  std::vector<std::string> levels;
  for (const auto& level : theta) {
    if (level.size() > 4) {
      levels.push_back(std::to_string(level.size()) + " monomials");
      continue;
    }
    std::vector<std::string> parts;
    for (const RayMonomial& mono : level) parts.push_back(to_string(mono));
    levels.push_back(join(parts, ","));
  }
  return "{" + join(levels, " | ") + "}";
}

std::string basis_rows_table(const Model& m, const WonderfulBasis& b) {
  Rows rows{{"support", "subfan betti", "theta by degree", "monomials", "contribution"}};
  for (const SupportContribution& row : b.rows) {
    std::vector<std::string> monos;
    for (const AdmissibleFunction& f : row.functions) monos.push_back(m.t_monomial(f));
    rows.push_back({m.set_label(row.support), row.subfan_betti.to_string(), theta_label(row.theta),
                    "{" + join(monos, ",") + "}", row.contribution.to_string()});
  }
  std::ostringstream os;
  os << "basis contributions by support:\n" << format_table(rows);
  os << "poincare: " << b.poincare.to_string() << '\n';
  return os.str();
}

Json basis_json(const Model& m, const WonderfulBasis& b) {
  Json rows = Json::array();
  for (const SupportContribution& row : b.rows) {
    Json r;
    r["support"] = m.set_json(row.support);
    r["subfanBetti"] = graded_json(row.subfan_betti);
    Json theta = Json::array();
    for (const auto& level : row.theta) {
      Json l = Json::array();
      for (const RayMonomial& mono : level) l.push_back(to_string(mono));
      theta.push_back(l);
    }
    r["theta"] = theta;
    r["functions"] = admissible_json(m, row.functions);
    r["contribution"] = graded_json(row.contribution);
    rows.push_back(r);
  }
  Json elements = Json::array();
  for (const BasisElement& e : b.elements) {
    Json x;
    x["theta"] = to_string(e.theta);
    x["monomial"] = m.t_monomial(e.function);
    x["degree"] = e.degree();
    elements.push_back(x);
  }
  Json j;
  j["rows"] = rows;
  j["elements"] = elements;
  j["poincare"] = graded_json(b.poincare);
  return j;
}

struct PoincareCheck {
  GradedCount basis;
  GradedCount blowup;
  bool agree() const { return basis == blowup; }
};

std::string poincare_table(const PoincareCheck& p) {
  std::ostringstream os;
  os << "poincare (admissible functions): " << p.basis.to_string() << '\n';
  os << "poincare (blowup recursion):     " << p.blowup.to_string() << '\n';
  os << "agreement: " << yes_no(p.agree()) << '\n';
  os << "palindromic: " << yes_no(p.basis.is_palindromic()) << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Type-A helpers

std::string hook_table(const Word& w) {
  HookFactorization hf = hook_factorize(w);
  std::ostringstream os;
  os << "word: " << to_string(w) << '\n';
  os << "prefix: " << to_string(hf.prefix) << '\n';
  for (const Word& h : hf.hooks) os << "hook: " << to_string(h) << "  inversions " << inversions(h) << '\n';
  os << "lec: " << lec(w) << '\n';
  os << "des: " << des(w) << '\n';
  return os.str();
}

struct PsiCensus {
  std::size_t n = 0;
  std::size_t pairs = 0;
  std::size_t forests = 0;
  bool round_trip = true;
  bool degrees = true;
  bool counts_by_degree = true;
};

PsiCensus psi_census(std::size_t n) {
  PsiCensus c;
  c.n = n;
  std::map<unsigned, std::size_t> pairs, forests;
  for (const AdmissibleForest& f : enumerate_forests(n)) {
    Word sigma(f.trees.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = static_cast<int>(i + 1);
    do {
      AdmissibleForest out = psi(f, sigma);
      c.degrees = c.degrees && out.degree() == f.degree() + lec(sigma);
      auto back = psi_inverse(out);
      c.round_trip = c.round_trip && back.first == f && back.second == sigma;
      ++pairs[out.degree()];
      ++c.pairs;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  for (const AdmissibleForest& f : enumerate_forests(n + 1)) {
    ++forests[f.degree()];
    ++c.forests;
  }
  c.counts_by_degree = pairs == forests;
  return c;
}

std::string identity_table(const std::vector<IdentityCheck>& checks) {
  Rows rows{{"identity", "order", "holds", "detail"}};
  for (const IdentityCheck& c : checks)
    rows.push_back({c.name, std::to_string(c.order), yes_no(c.holds), c.detail});
  return format_table(rows);
}

std::vector<IdentityCheck> all_identities(std::size_t order) {
  std::vector<IdentityCheck> checks{verify_lambda_recurrence(order), verify_eulerian_egf(order)};
  for (IdentityCheck& c : verify_main_identity(order)) checks.push_back(std::move(c));
  return checks;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// fan

CommandOutput fan_check(const std::string& fan_path) {
  Fan fan = load_fan(fan_path);
  FanReport fr = validate(fan);
  CommandOutput out;
  out.json = report("fan check");
  out.json["fan"] = fan_name(fan_path);
  out.json["ambientDim"] = fan.ambient_dim();
  out.json["rays"] = fan.rays().size();
  out.json["maximalCones"] = fan.maximal_cones().size();
  out.json["simplicial"] = fr.simplicial;
  out.json["smooth"] = fr.smooth;
  out.json["complete"] = fr.complete;
  std::ostringstream os;
  os << "fan: " << fan_name(fan_path) << '\n'
     << "ambient dimension: " << fan.ambient_dim() << '\n'
     << "rays: " << fan.rays().size() << '\n'
     << "maximal cones: " << fan.maximal_cones().size() << '\n'
     << "simplicial: " << yes_no(fr.simplicial) << '\n'
     << "smooth: " << yes_no(fr.smooth) << '\n'
     << "complete: " << yes_no(fr.complete) << '\n';
  if (fr.simplicial) {
    FVector f = f_vector(fan);
    out.json["fVector"] = f;
    std::vector<std::string> parts;
    for (auto x : f) parts.push_back(std::to_string(x));
    os << "f-vector: (" << join(parts, ", ") << ")\n";
  }
  if (fr.smooth && fr.complete) {
    GradedCount b = betti_numbers(fan);
    out.json["betti"] = to_json(b);
    os << "betti: " << b.to_string() << '\n';
  } else {
    out.json["detail"] = fr.detail;
    os << "problem: " << fr.detail << '\n';
    out.status = kExitValidation;
  }
  out.table = os.str();
  return out;
}

// ---------------------------------------------------------------------------
// arr

CommandOutput arr_poset(const std::string& arr_path) {
  ArrangementFile file = load_arrangement(arr_path);
  LayerPoset poset = poset_of_layers(file.arrangement(), file.torus_dim);
  std::vector<std::string> names = element_names(file, poset);
  BuildingSet g = make_building_set(file, poset);
  Model m{std::move(file), std::move(poset), std::move(names), std::move(g), false};
  CommandOutput out;
  out.json = report("arr poset");
  out.json["arrangement"] = m.file.name;
  out.json["torusDim"] = m.file.torus_dim;
  const Json poset_doc = poset_json(m);
  for (auto& [k, v] : poset_doc.items()) out.json[k] = v;
  out.table = "arrangement: " + m.file.name + "\ntorus dimension: " + std::to_string(m.file.torus_dim) + "\n" +
              poset_table(m);
  return out;
}

CommandOutput arr_goodness(const std::string& arr_path, const std::string& fan_path, int bound) {
  ArrangementFile file = load_arrangement(arr_path);
  Fan fan = load_fan(fan_path);
  if (fan.ambient_dim() != file.torus_dim) throw ValidationError("fan and arrangement dimensions differ");
  LayerPoset poset = poset_of_layers(file.arrangement(), file.torus_dim);
  std::vector<std::string> names = element_names(file, poset);
  GoodnessReport r = goodness_check(fan, poset, supplied_bases(file, poset), bound);
  CommandOutput out;
  out.json = report("arr goodness");
  out.json["arrangement"] = file.name;
  out.json["fan"] = fan_name(fan_path);
  out.json["bound"] = bound;
  out.json["good"] = r.good;
  Json certs = Json::array();
  Rows rows{{"element", "source", "equal-sign basis", "status"}};
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const EqualSignResult& c = r.certificates[i];
    Json e;
    e["element"] = names[i];
    e["found"] = c.found;
    e["supplied"] = c.supplied;
    Json basis = Json::array();
    std::vector<std::string> parts;
    for (const IntVector& v : c.basis) {
      basis.push_back(to_json(v));
      parts.push_back(to_string(v));
    }
    e["basis"] = basis;
    if (!c.detail.empty()) e["detail"] = c.detail;
    certs.push_back(e);
    rows.push_back({names[i], c.supplied ? "supplied" : "search", parts.empty() ? "-" : join(parts, " "),
                    c.found ? "ok" : "FAIL: " + c.detail});
  }
  out.json["certificates"] = certs;
  std::ostringstream os;
  os << "arrangement: " << file.name << "\nfan: " << fan_name(fan_path) << "\nsearch bound: " << bound << '\n'
     << format_table(rows) << "good: " << yes_no(r.good) << '\n';
  out.table = os.str();
  if (!r.good) out.status = kExitValidation;
  return out;
}

// ---------------------------------------------------------------------------
// model

CommandOutput model_nested(const std::string& arr_path) {
  Model m = load_model(arr_path);
  auto nested = enumerate_nested_sets(m.g);
  CommandOutput out;
  out.json = report("model nested");
  out.json["arrangement"] = m.file.name;
  Json list = Json::array();
  for (const MemberSet& s : nested) list.push_back(m.set_json(s));
  out.json["count"] = nested.size();
  out.json["nestedSets"] = list;
  out.table = building_set_table(m) + nested_table(m, nested);
  return out;
}

CommandOutput model_admissible(const std::string& arr_path) {
  Model m = load_model(arr_path);
  auto fs = enumerate_admissible(m.g);
  CommandOutput out;
  out.json = report("model admissible");
  out.json["arrangement"] = m.file.name;
  out.json["count"] = fs.size();
  out.json["functions"] = admissible_json(m, fs);
  out.table = building_set_table(m) + admissible_table(m, fs);
  return out;
}

CommandOutput model_basis(const std::string& arr_path, const std::string& fan_path, int bound) {
  Model m = load_model(arr_path);
  Fan fan = load_fan(fan_path);
  require_good(m, fan, bound);
  WonderfulBasis b = compute_basis(m.g, fan);
  CommandOutput out;
  out.json = report("model basis");
  out.json["arrangement"] = m.file.name;
  out.json["fan"] = fan_name(fan_path);
  const Json basis = basis_json(m, b);
  for (auto& [k, v] : basis.items()) out.json[k] = v;
  std::ostringstream os;
  os << building_set_table(m) << basis_rows_table(m, b) << "basis elements: " << b.elements.size() << '\n';
  Rows rows{{"theta", "monomial", "degree"}};
  for (const BasisElement& e : b.elements)
    rows.push_back({to_string(e.theta), m.t_monomial(e.function), std::to_string(e.degree())});
  os << format_table(rows);
  out.table = os.str();
  return out;
}

CommandOutput model_poincare(const std::string& arr_path, const std::string& fan_path, int bound) {
  Model m = load_model(arr_path);
  Fan fan = load_fan(fan_path);
  require_good(m, fan, bound);
  PoincareCheck p{poincare(m.g, fan), rank_via_blowup_recursion(m.g, fan)};
  CommandOutput out;
  out.json = report("model poincare");
  out.json["arrangement"] = m.file.name;
  out.json["fan"] = fan_name(fan_path);
  out.json["poincare"] = graded_json(p.basis);
  out.json["blowupRecursion"] = graded_json(p.blowup);
  out.json["agree"] = p.agree();
  out.json["palindromic"] = p.basis.is_palindromic();
  out.table = poincare_table(p);
  if (!p.agree()) out.status = kExitMath;
  return out;
}

CommandOutput model_presentation(const std::string& arr_path, const std::string& fan_path, int bound) {
  Model m = load_model(arr_path);
  Fan fan = load_fan(fan_path);
  require_good(m, fan, bound);
  Presentation p = emit_presentation(m.g, fan, bound);
  CommandOutput out;
  out.json = report("model presentation");
  out.json["arrangement"] = m.file.name;
  out.json["fan"] = fan_name(fan_path);
  Json vars = Json::array();
  Rows var_rows;
  for (std::size_t i = 0; i < p.variables.size(); ++i) {
    Json v;
    v["name"] = p.variables[i];
    if (i < p.ray_count) {
      v["ray"] = to_json(fan.ray(i));
      var_rows.push_back({p.variables[i], "ray " + to_string(fan.ray(i))});
    } else {
      v["member"] = m.member_name(i - p.ray_count);
      var_rows.push_back({p.variables[i], "member " + m.member_name(i - p.ray_count)});
    }
    vars.push_back(v);
  }
  out.json["variables"] = vars;
  const GeneratorKind kinds[] = {GeneratorKind::StanleyReisner, GeneratorKind::Linear, GeneratorKind::Boundary,
                                 GeneratorKind::NestedPair, GeneratorKind::EmptyIntersection};
  Json gens = Json::object();
  Json counts = Json::object();
  std::ostringstream os;
  os << "variables: " << p.variables.size() << '\n' << format_table(var_rows);
  for (GeneratorKind k : kinds) {
    Json list = Json::array();
    os << to_string(k) << ": " << p.count(k) << '\n';
    for (const Generator& gen : p.generators) {
      if (gen.kind != k) continue;
      const std::string text = p.format(gen);
      Json e;
      e["polynomial"] = text;
      if (gen.member) e["member"] = m.member_name(*gen.member);
      if (gen.ray) e["ray"] = *gen.ray + 1;
      if (k == GeneratorKind::NestedPair || k == GeneratorKind::EmptyIntersection) e["set"] = m.set_json(gen.set);
      if (k == GeneratorKind::NestedPair) {
        Json basis = Json::array();
        for (const IntVector& v : gen.basis) basis.push_back(to_json(v));
        e["basis"] = basis;
        os << "  " << m.member_name(*gen.member) << " " << m.set_label(gen.set) << ": " << text << '\n';
      } else {
        os << "  " << text << '\n';
      }
      list.push_back(e);
    }
    gens[to_string(k)] = list;
    counts[to_string(k)] = p.count(k);
  }
  out.json["counts"] = counts;
  out.json["generators"] = gens;
  out.table = os.str();
  return out;
}

// ---------------------------------------------------------------------------
// typea

CommandOutput typea_eulerian(std::size_t n) {
  if (n < 1 || n > 10) throw ValidationError("typea eulerian: n must lie in 1..10");
  GradedCount a = eulerian_polynomial(n);
  GradedCount d = des_distribution(n);
  GradedCount l = lec_distribution(n);
  CommandOutput out;
  out.json = report("typea eulerian");
  out.json["n"] = n;
  out.json["eulerian"] = to_json(a);
  out.json["des"] = to_json(d);
  out.json["lec"] = to_json(l);
  out.json["equidistributed"] = (d == l);
  std::ostringstream os;
  os << "A_" << n << "(q) = " << polynomial(a) << '\n'
     << "sum q^des = " << polynomial(d) << '\n'
     << "sum q^lec = " << polynomial(l) << '\n'
     << "lec and des equidistributed: " << yes_no(d == l) << '\n';
  out.table = os.str();
  if (d != l) out.status = kExitMath;
  return out;
}

CommandOutput typea_lec(const std::string& word) {
  Word w = parse_word(word);
  HookFactorization hf = hook_factorize(w);
  CommandOutput out;
  out.json = report("typea lec");
  out.json["word"] = w;
  out.json["prefix"] = hf.prefix;
  out.json["hooks"] = hf.hooks;
  out.json["lec"] = lec(w);
  out.json["des"] = des(w);
  out.table = hook_table(w);
  return out;
}

CommandOutput typea_psi(const std::string& forest, const std::string& sigma) {
  AdmissibleForest f = parse_forest(forest);
  Word s = parse_word(sigma);
  AdmissibleForest r = psi(f, s);
  CommandOutput out;
  out.json = report("typea psi");
  out.json["forest"] = to_string(f);
  out.json["sigma"] = s;
  out.json["result"] = to_string(r);
  out.json["degree"] = r.degree();
  std::ostringstream os;
  os << "forest: " << to_string(f) << "  (degree " << f.degree() << ")\n"
     << "sigma: " << to_string(s) << "  (lec " << lec(s) << ")\n"
     << "psi: " << to_string(r) << "  (degree " << r.degree() << ")\n";
  out.table = os.str();
  return out;
}

CommandOutput typea_psi_inverse(const std::string& forest) {
  AdmissibleForest f = parse_forest(forest);
  auto [base, sigma] = psi_inverse(f);
  CommandOutput out;
  out.json = report("typea psi --inverse");
  out.json["forest"] = to_string(f);
  out.json["base"] = to_string(base);
  out.json["sigma"] = sigma;
  std::ostringstream os;
  os << "forest: " << to_string(f) << "  (degree " << f.degree() << ")\n"
     << "base forest: " << to_string(base) << "  (degree " << base.degree() << ")\n"
     << "sigma: " << to_string(sigma) << "  (lec " << lec(sigma) << ")\n";
  out.table = os.str();
  return out;
}

CommandOutput typea_forests(std::size_t n) {
  if (n < 1 || n > 8) throw ValidationError("typea forests: n must lie in 1..8");
  auto counts = forest_counts(n);
  GradedCount trees = tree_degree_counts(n);
  CommandOutput out;
  out.json = report("typea forests");
  out.json["n"] = n;
  out.json["trees"] = to_json(trees);
  Json list = Json::array();
  Rows rows{{"degree", "components", "forests"}};
  for (const auto& [key, c] : counts) {
    list.push_back({{"degree", key.first}, {"components", key.second}, {"count", c}});
    rows.push_back({std::to_string(key.first), std::to_string(key.second), std::to_string(c)});
  }
  out.json["forests"] = list;
  std::ostringstream os;
  os << "admissible trees on " << n << " leaves by degree: " << trees.to_string() << '\n'
     << "admissible forests on " << n << " leaves:\n"
     << format_table(rows);
  out.table = os.str();
  return out;
}

CommandOutput typea_model(std::size_t n) {
  if (n < 2 || n > 4) throw ValidationError("typea model: n must lie in 2..4");
  BuildingSet g = typea_minimal_building_set(n);
  Fan fan = weyl_fan_A(n);
  GradedCount p = poincare(g, fan);
  GradedCount blowup = rank_via_blowup_recursion(g, fan);
  TruncatedSeries e_lambda = compose_in_t(eulerian_series(n), lambda_series(n));
  const QPoly expected = e_lambda.coefficient(n);
  std::vector<mpq_class> pc(p.coefficients().begin(), p.coefficients().end());
  const bool match = QPoly(pc) == expected;
  CommandOutput out;
  out.json = report("typea model");
  out.json["n"] = n;
  out.json["buildingSetSize"] = g.size();
  out.json["poincare"] = to_json(p);
  out.json["blowupRecursion"] = to_json(blowup);
  out.json["seriesCoefficient"] = expected.to_string();
  out.json["agree"] = match && p == blowup;
  std::ostringstream os;
  os << "type-A toric model, n = " << n << " (building set {K_I : |I| >= 2}, " << g.size() << " members)\n"
     << "poincare: " << p.to_string() << '\n'
     << "blowup recursion: " << blowup.to_string() << '\n'
     << "coefficient of t^" << n << "/" << n << "! in E(q, lambda): " << expected.to_string() << '\n'
     << "agreement: " << yes_no(match && p == blowup) << '\n';
  out.table = os.str();
  if (!(match && p == blowup)) out.status = kExitMath;
  return out;
}

CommandOutput typea_verify(std::size_t order) {
  if (order < 1 || order > 10) throw ValidationError("typea verify: order must lie in 1..10");
  std::vector<IdentityCheck> checks = all_identities(order);
  CommandOutput out;
  out.json = report("typea verify");
  out.json["order"] = order;
  Json list = Json::array();
  bool all = true;
  for (const IdentityCheck& c : checks) {
    list.push_back({{"identity", c.name}, {"order", c.order}, {"holds", c.holds}, {"detail", c.detail}});
    all = all && c.holds;
  }
  out.json["checks"] = list;
  out.json["allHold"] = all;
  out.table = identity_table(checks) + "all identities hold: " + yes_no(all) + "\n";
  if (!all) out.status = kExitMath;
  return out;
}

// ---------------------------------------------------------------------------
// reproduce

std::vector<std::string> reproduce_ids() {
  return {"appendix-a", "example-main", "example-arr2", "typea-a4", "typea-identities"};
}

namespace {

struct ModelExample {
  std::string arrangement;
  std::string fan;
};

std::string reproduce_model(const std::string& data_dir, const ModelExample& ex, Json& summary, bool& ok) {
  const std::string arr_path = data_dir + "/" + ex.arrangement;
  const std::string fan_path = data_dir + "/" + ex.fan;
  Model m = load_model(arr_path);
  Fan fan = load_fan(fan_path);
  require_good(m, fan, kDefaultSearchBound);
  auto nested = enumerate_nested_sets(m.g);
  auto fs = enumerate_admissible(m.g);
  WonderfulBasis b = compute_basis(m.g, fan);
  PoincareCheck p{b.poincare, rank_via_blowup_recursion(m.g, fan)};
  ok = ok && p.agree() && p.basis.is_palindromic();
  summary["arrangement"] = m.file.name;
  summary["fan"] = fan_name(fan_path);
  summary["posetSize"] = m.poset.size();
  summary["nestedSets"] = nested.size();
  summary["admissibleFunctions"] = fs.size();
  summary["poincare"] = graded_json(p.basis);
  summary["blowupRecursion"] = graded_json(p.blowup);
  std::ostringstream os;
  os << "arrangement: " << m.file.name << "\nfan: " << fan_name(fan_path) << '\n'
     << poset_table(m) << building_set_table(m) << nested_table(m, nested) << admissible_table(m, fs)
     << basis_rows_table(m, b) << poincare_table(p);
  return os.str();
}

std::string reproduce_typea_identities(Json& summary, bool& ok) {
  std::ostringstream os;
  os << "lec and des distributions:\n";
  Rows rows{{"n", "A_n(q)", "sum q^lec = sum q^des"}};
  bool equi = true;
  for (std::size_t n = 1; n <= 8; ++n) {
    const bool same = lec_distribution(n) == des_distribution(n) &&
                      des_distribution(n).shifted(1) == eulerian_polynomial(n);
    equi = equi && same;
    rows.push_back({std::to_string(n), polynomial(eulerian_polynomial(n)), yes_no(same)});
  }
  os << format_table(rows);

  const Word example{10, 13, 14, 8, 3, 6, 5, 4, 7, 11, 12, 9, 1, 2};
  os << "hook factorization example:\n" << hook_table(example);

  ChainMonomial chain{{{1, 2}, 1}, {{1, 2, 4, 5, 6}, 2}, {{1, 2, 4, 5, 6, 7, 8}, 1}};
  Word sigma = chain_monomial_to_permutation(chain, 10);
  os << "chain monomial z{1,2} z{1,2,4,5,6}^2 z{1,2,4,5,6,7,8}, n = 10 -> " << to_string(sigma) << "  (lec "
     << lec(sigma) << ")\n";

  os << "psi census:\n";
  Rows psi_rows{{"n", "pairs (F, sigma)", "forests on n+1", "round trip", "degrees", "counts by degree"}};
  bool psi_ok = true;
  for (std::size_t n = 1; n <= 6; ++n) {
    PsiCensus c = psi_census(n);
    psi_ok = psi_ok && c.round_trip && c.degrees && c.counts_by_degree && c.pairs == c.forests;
    psi_rows.push_back({std::to_string(n), std::to_string(c.pairs), std::to_string(c.forests), yes_no(c.round_trip),
                        yes_no(c.degrees), yes_no(c.counts_by_degree)});
  }
  os << format_table(psi_rows);

  TruncatedSeries lambda = lambda_series(8);
  os << "lambda coefficients (t^n/n!):\n";
  Rows lrows;
  for (std::size_t n = 1; n <= 8; ++n) lrows.push_back({"n=" + std::to_string(n), lambda.coefficient(n).to_string()});
  os << format_table(lrows);

  std::vector<IdentityCheck> checks = all_identities(8);
  bool ids = true;
  for (const IdentityCheck& c : checks) ids = ids && c.holds;
  os << "series identities:\n" << identity_table(checks);

  ok = ok && equi && psi_ok && ids && lec(example) == 5 && sigma == Word{3, 9, 10, 2, 1, 6, 4, 5, 8, 7};
  summary["equidistribution"] = equi;
  summary["lecExample"] = lec(example);
  summary["chainExample"] = sigma;
  summary["psi"] = psi_ok;
  summary["identities"] = ids;
  return os.str();
}

}  // namespace

CommandOutput reproduce(const std::string& id, const std::string& data_dir, const std::string& golden_dir,
                        bool update) {
  CommandOutput out;
  out.json = report("reproduce");
  out.json["example"] = id;
  Json summary = Json::object();
  bool ok = true;
  std::string text;
  if (id == "appendix-a") {
    CommandOutput f = fan_check(data_dir + "/appendix_a_fan.json");
    text = f.table;
    summary = f.json;
    summary.erase("schema");
    summary.erase("command");
    ok = f.status == kExitOk;
  } else if (id == "example-main") {
    text = reproduce_model(data_dir, {"example_main.json", "appendix_a_fan.json"}, summary, ok);
  } else if (id == "example-arr2") {
    text = reproduce_model(data_dir, {"example_arr2.json", "p1_4_fan.json"}, summary, ok);
  } else if (id == "typea-a4") {
    text = reproduce_model(data_dir, {"typea_a4.json", "weyl_a4_fan.json"}, summary, ok);
    CommandOutput tm = typea_model(4);
    text += tm.table;
    ok = ok && tm.status == kExitOk;
  } else if (id == "typea-identities") {
    text = reproduce_typea_identities(summary, ok);
  } else {
    throw ParseError("unknown example '" + id + "'; known: " + join(reproduce_ids(), ", "));
  }

  const std::string golden_path = golden_dir + "/" + id + ".txt";
  out.json["summary"] = summary;
  out.json["checksPass"] = ok;
  std::string verdict;
  if (update) {
    std::filesystem::create_directories(golden_dir);
    std::ofstream(golden_path, std::ios::binary) << text;
    verdict = "golden: written " + golden_path;
    out.json["golden"] = "written";
  } else {
    const std::string golden = read_file(golden_path);
    if (golden.empty()) {
      verdict = "golden: missing " + golden_path;
      out.json["golden"] = "missing";
      out.status = kExitValidation;
    } else if (golden == text) {
      verdict = "golden: match";
      out.json["golden"] = "match";
    } else {
      std::istringstream a(golden), b(text);
      std::string la, lb;
      std::size_t line = 0;
      while (true) {
        ++line;
        const bool ga = static_cast<bool>(std::getline(a, la));
        const bool gb = static_cast<bool>(std::getline(b, lb));
        if (!ga || !gb || la != lb) {
          verdict = "golden: MISMATCH at line " + std::to_string(line) + "\n  expected: " + (ga ? la : "<eof>") +
                    "\n  actual:   " + (gb ? lb : "<eof>");
          break;
        }
      }
      out.json["golden"] = "mismatch";
      out.status = kExitMath;
    }
  }
  if (!ok) out.status = kExitMath;
  out.table = text + verdict + "\nchecks: " + (ok ? "pass" : "FAIL") + "\n";
  return out;
}

}  // namespace toric::cli
