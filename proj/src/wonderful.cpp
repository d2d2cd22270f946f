#include "toric/wonderful.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "toric/error.hpp"
#include "toric/parallel.hpp"

namespace toric {

namespace {

using Mask = std::uint64_t;

MemberSet mask_members(Mask mask) {
  MemberSet out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1U) out.push_back(i);
  return out;
}

Mask members_mask(const MemberSet& s) {
  Mask m = 0;
  for (std::size_t i : s) m |= Mask{1} << i;
  return m;
}

// Subsets of {0..n-1} ordered by size, then lexicographically as sorted lists.
std::vector<Mask> subsets_by_size(std::size_t n) {
  std::vector<MemberSet> sets;
  for (Mask m = 0; m < (Mask{1} << n); ++m) sets.push_back(mask_members(m));
  std::sort(sets.begin(), sets.end(), [](const MemberSet& a, const MemberSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Mask> out;
  for (const MemberSet& s : sets) out.push_back(members_mask(s));
  return out;
}

void check_size(const BuildingSet& g) {
  if (g.size() > 24) throw MathError("building set too large for exhaustive enumeration");
}

std::vector<Layer> member_layers(const BuildingSet& g, const MemberSet& s) {
  std::vector<Layer> out;
  for (std::size_t i : s) out.push_back(g.layer(i));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// BuildingSet

BuildingSet::BuildingSet(LayerPoset poset, std::vector<std::size_t> members)
    : poset_(std::move(poset)), members_(std::move(members)) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const std::size_t idx = members_[i];
    if (idx >= poset_.size()) throw ValidationError("building set refers to a missing poset element");
    if (idx == 0) throw ValidationError("the torus cannot belong to a building set");
    if (!position_.emplace(idx, i).second) throw ValidationError("building set lists an element twice");
  }
}

std::optional<std::size_t> BuildingSet::position_of(std::size_t poset_index) const {
  auto it = position_.find(poset_index);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Well-connectedness and nested sets

WellConnectedReport is_well_connected(const BuildingSet& g) {
  check_size(g);
  WellConnectedReport report;
  const std::size_t m = g.size();
  for (Mask mask : subsets_by_size(m)) {
    if (std::popcount(mask) < 2) continue;
    MemberSet s = mask_members(mask);
    std::vector<Layer> comps = intersect_all(member_layers(g, s), g.poset().torus_dim());
    if (comps.size() < 2) continue;
    for (const Layer& c : comps) {
      if (!g.position_of(g.poset().require_index(c))) {
        report.well_connected = false;
        report.subset = s;
        report.missing_component = c;
        return report;
      }
    }
  }
  return report;
}

std::optional<Layer> connected_intersection(const BuildingSet& g, const MemberSet& members) {
  std::vector<Layer> comps = intersect_all(member_layers(g, members), g.poset().torus_dim());
  if (comps.size() != 1) return std::nullopt;
  return comps.front();
}

namespace {

bool comparable(const BuildingSet& g, std::size_t a, std::size_t b) {
  return g.contained(a, b) || g.contained(b, a);
}

bool is_antichain(const BuildingSet& g, const MemberSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (comparable(g, s[i], s[j])) return false;
  return true;
}

// Antichain condition: intersection non-empty, connected, transversal and
// not a member of the building set.
class AntichainOracle {
 public:
  explicit AntichainOracle(const BuildingSet& g) : g_(g) {}

  bool good(Mask mask) {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    const MemberSet s = mask_members(mask);
    bool ok = false;
    if (auto c = connected_intersection(g_, s)) {
      std::size_t codim_sum = 0;
      for (std::size_t i : s) codim_sum += g_.layer(i).codim();
      ok = c->codim() == codim_sum && !g_.position_of(g_.poset().require_index(*c));
    }
    cache_.emplace(mask, ok);
    return ok;
  }

 private:
  const BuildingSet& g_;
  std::unordered_map<Mask, bool> cache_;
};

}  // namespace

bool is_nested(const BuildingSet& g, const MemberSet& candidate) {
  check_size(g);
  AntichainOracle oracle(g);
  const Mask full = members_mask(candidate);
  for (Mask sub = full; sub; sub = (sub - 1) & full) {
    if (std::popcount(sub) < 2) continue;
    MemberSet s = mask_members(sub);
    if (is_antichain(g, s) && !oracle.good(sub)) return false;
  }
  return true;
}

std::vector<MemberSet> enumerate_nested_sets(const BuildingSet& g) {
  check_size(g);
  AntichainOracle oracle(g);
  const std::size_t m = g.size();
  std::vector<MemberSet> out;
  std::function<void(Mask, std::size_t)> extend = [&](Mask nested, std::size_t from) {
    out.push_back(mask_members(nested));
    for (std::size_t x = from; x < m; ++x) {
      // Only antichains containing x are new.
      Mask others = 0;
      for (std::size_t y : mask_members(nested))
        if (!comparable(g, x, y)) others |= Mask{1} << y;
      bool ok = true;
      for (Mask sub = others; sub && ok; sub = (sub - 1) & others) {
        MemberSet s = mask_members(sub);
        if (!is_antichain(g, s)) continue;
        ok = oracle.good(sub | (Mask{1} << x));
      }
      if (ok) extend(nested | (Mask{1} << x), x + 1);
    }
  };
  extend(0, 0);
  std::sort(out.begin(), out.end(), [](const MemberSet& a, const MemberSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Admissible functions

unsigned AdmissibleFunction::degree() const {
  unsigned d = 0;
  for (unsigned v : values) d += v;
  return d;
}

std::vector<std::size_t> admissible_bounds(const BuildingSet& g, const MemberSet& nested) {
  const std::size_t n = g.poset().torus_dim();
  std::vector<std::size_t> bounds;
  for (std::size_t a : nested) {
    Sublattice above(n);
    for (std::size_t b : nested)
      if (b != a && g.contained(a, b)) above = above.sum(g.layer(b).gamma());
    bounds.push_back(g.layer(a).codim() - above.rank());
  }
  return bounds;
}

std::vector<AdmissibleFunction> enumerate_admissible(const BuildingSet& g) {
  std::vector<AdmissibleFunction> out;
  for (const MemberSet& n : enumerate_nested_sets(g)) {
    std::vector<std::size_t> bounds = admissible_bounds(g, n);
    if (std::any_of(bounds.begin(), bounds.end(), [](std::size_t b) { return b < 2; })) continue;
    std::vector<unsigned> values(n.size(), 1);
    while (true) {
      out.push_back({n, values});
      std::size_t i = n.size();
      while (i > 0 && values[i - 1] + 1 >= bounds[i - 1]) values[--i] = 1;
      if (i == 0) break;
      ++values[i - 1];
    }
  }
  return out;
}

Sublattice support_lattice(const BuildingSet& g, const MemberSet& support) {
  if (support.empty()) return Sublattice(g.poset().torus_dim());
  auto c = connected_intersection(g, support);
  if (!c) throw MathError("support is not nested: intersection is not a single component");
  return c->gamma();
}

// ---------------------------------------------------------------------------
// Basis and Poincaré polynomial

WonderfulBasis compute_basis(const BuildingSet& g, const Fan& fan) {
  if (fan.ambient_dim() != g.poset().torus_dim()) throw MathError("fan and arrangement dimensions differ");
  WonderfulBasis out;
  std::vector<AdmissibleFunction> functions = enumerate_admissible(g);
  for (std::size_t i = 0; i < functions.size();) {
    SupportContribution row;
    row.support = functions[i].support;
    while (i < functions.size() && functions[i].support == row.support) row.functions.push_back(functions[i++]);
    out.rows.push_back(std::move(row));
  }
  parallel_for(out.rows.size(), [&](std::size_t r) {
    SupportContribution& row = out.rows[r];
    SubFan sf = subfan(fan, support_lattice(g, row.support));
    row.subfan_betti = betti_numbers(sf.fan);
    for (auto& level : cohomology_basis(sf.fan)) {
      std::vector<RayMonomial> lifted;
      for (RayMonomial m : level) {
        for (auto& [ray, e] : m) ray = sf.parent_rays[ray];
        lifted.push_back(std::move(m));
      }
      row.theta.push_back(std::move(lifted));
    }
    for (const AdmissibleFunction& f : row.functions) row.contribution += row.subfan_betti.shifted(f.degree());
  });
  for (const SupportContribution& row : out.rows) {
    for (const AdmissibleFunction& f : row.functions)
      for (std::size_t k = 0; k < row.theta.size(); ++k)
        for (const RayMonomial& m : row.theta[k]) out.elements.push_back({f, m, k, f.degree()});
    out.poincare += row.contribution;
  }
  return out;
}

GradedCount poincare(const BuildingSet& g, const Fan& fan) {
  if (fan.ambient_dim() != g.poset().torus_dim()) throw MathError("fan and arrangement dimensions differ");
  std::map<MemberSet, GradedCount> betti;
  GradedCount total;
  for (const AdmissibleFunction& f : enumerate_admissible(g)) {
    auto it = betti.find(f.support);
    if (it == betti.end())
      it = betti.emplace(f.support, betti_numbers(subfan(fan, support_lattice(g, f.support)).fan)).first;
    total += it->second.shifted(f.degree());
  }
  return total;
}

// ---------------------------------------------------------------------------
// Blowup recursion

std::vector<std::size_t> inclusion_order(const BuildingSet& g) {
  std::vector<std::size_t> order(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.layer(a).codim() > g.layer(b).codim();
  });
  return order;
}

namespace {

class BlowupRecursion {
 public:
  explicit BlowupRecursion(const Fan& fan) : fan_(fan) {}

  GradedCount rank(const Layer& z, const std::vector<Layer>& centers) {
    auto key = std::make_pair(z, centers);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    GradedCount result;
    if (centers.empty()) {
      result = betti_numbers(subfan(fan_, z.gamma()).fan);
    } else {
      const Layer& last = centers.back();
      std::vector<Layer> rest(centers.begin(), centers.end() - 1);
      result = rank(z, rest);
      const std::size_t codim = last.codim() - z.codim();
      if (codim >= 2) {
        std::vector<Layer> h;
        for (const Layer& c : rest)
          for (const Layer& comp : intersect(c, last))
            if (comp != last && std::find(h.begin(), h.end(), comp) == h.end()) h.push_back(comp);
        std::stable_sort(h.begin(), h.end(),
                         [](const Layer& a, const Layer& b) { return a.codim() > b.codim(); });
        const GradedCount transform = rank(last, h);
        for (std::size_t j = 1; j < codim; ++j) result += transform.shifted(j);
      }
    }
    cache_.emplace(std::move(key), result);
    return result;
  }

 private:
  const Fan& fan_;
  std::map<std::pair<Layer, std::vector<Layer>>, GradedCount> cache_;
};

}  // namespace

GradedCount rank_via_blowup_recursion(const BuildingSet& g, const Fan& fan,
                                      const std::vector<std::size_t>& order) {
  if (fan.ambient_dim() != g.poset().torus_dim()) throw MathError("fan and arrangement dimensions differ");
  std::vector<bool> seen(g.size(), false);
  for (std::size_t i : order) {
    if (i >= g.size() || seen[i]) throw MathError("blowup order is not a permutation of the building set");
    seen[i] = true;
  }
  if (order.size() != g.size()) throw MathError("blowup order is not a permutation of the building set");
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (g.contained(order[j], order[i]))
        throw MathError("blowup order does not refine inclusion");
  std::vector<Layer> centers;
  for (std::size_t i : order) centers.push_back(g.layer(i));
  BlowupRecursion rec(fan);
  return rec.rank(Layer(g.poset().torus_dim()), centers);
}

GradedCount rank_via_blowup_recursion(const BuildingSet& g, const Fan& fan) {
  return rank_via_blowup_recursion(g, fan, inclusion_order(g));
}

// ---------------------------------------------------------------------------
// Presentation

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::StanleyReisner: return "stanley-reisner";
    case GeneratorKind::Linear: return "linear";
    case GeneratorKind::Boundary: return "boundary";
    case GeneratorKind::NestedPair: return "nested-pair";
    case GeneratorKind::EmptyIntersection: return "empty-intersection";
  }
  return "unknown";
}

namespace {

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      Integer& c = out[m];
      c += ca * cb;
      if (c == 0) out.erase(m);
    }
  return out;
}

}  // namespace

Polynomial Generator::expand() const {
  Polynomial p{{monomial, Integer(1)}};
  for (const LinearForm& f : factors) {
    Polynomial q;
    for (const auto& [v, c] : f)
      if (c != 0) q[Monomial{{v, 1U}}] = c;
    p = multiply(p, q);
  }
  return p;
}

std::size_t Generator::t_degree(std::size_t first_t) const {
  std::size_t best = 0;
  for (const auto& [m, c] : expand()) {
    std::size_t d = 0;
    for (const auto& [v, e] : m)
      if (v >= first_t) d += e;
    best = std::max(best, d);
  }
  return best;
}

std::size_t Presentation::count(GeneratorKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(generators.begin(), generators.end(), [&](const Generator& g) { return g.kind == kind; }));
}

namespace {

std::string format_monomial(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (const auto& [v, e] : m) {
    if (!s.empty()) s += '*';
    s += vars.at(v);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string format_terms(const std::vector<std::pair<Monomial, Integer>>& terms,
                         const std::vector<std::string>& vars) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms) {
    Integer a = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (m.empty()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += format_monomial(m, vars);
    }
  }
  return s;
}

}  // namespace

std::string Presentation::format(const Polynomial& p) const {
  return format_terms(std::vector<std::pair<Monomial, Integer>>(p.begin(), p.end()), variables);
}

std::string Presentation::format(const Generator& gen) const {
  std::string s;
  for (const LinearForm& f : gen.factors) {
    std::vector<std::pair<Monomial, Integer>> terms;
    // T variables first, then C variables.
    for (const auto& [v, c] : f)
      if (v >= ray_count) terms.emplace_back(Monomial{{v, 1U}}, c);
    for (const auto& [v, c] : f)
      if (v < ray_count) terms.emplace_back(Monomial{{v, 1U}}, c);
    if (!s.empty()) s += '*';
    s += '(' + format_terms(terms, variables) + ')';
  }
  if (!gen.monomial.empty() || s.empty()) {
    if (!s.empty()) s += '*';
    s += format_monomial(gen.monomial, variables);
  }
  return s;
}

std::size_t count_nested_pairs(const BuildingSet& g) {
  std::size_t total = 0;
  for (std::size_t a = 0; a < g.size(); ++a) {
    std::size_t supersets = 0;
    for (std::size_t b = 0; b < g.size(); ++b)
      if (b != a && g.contained(a, b)) ++supersets;
    total += std::size_t{1} << supersets;
  }
  return total;
}

std::size_t count_empty_intersections(const BuildingSet& g) {
  check_size(g);
  std::size_t total = 0;
  for (Mask mask = 1; mask < (Mask{1} << g.size()); ++mask)
    if (intersect_all(member_layers(g, mask_members(mask)), g.poset().torus_dim()).empty()) ++total;
  return total;
}

Presentation emit_presentation(const BuildingSet& g, const Fan& fan, int bound) {
  check_size(g);
  const std::size_t n = fan.ambient_dim();
  if (n != g.poset().torus_dim()) throw MathError("fan and arrangement dimensions differ");
  const FanReport fr = validate(fan);
  if (!fr.smooth || !fr.complete) throw ValidationError("presentation needs a smooth complete fan: " + fr.detail);

  Presentation p;
  p.ray_count = fan.rays().size();
  p.member_count = g.size();
  for (std::size_t r = 0; r < p.ray_count; ++r) p.variables.push_back("C" + std::to_string(r + 1));
  for (std::size_t m = 0; m < g.size(); ++m) p.variables.push_back("T" + std::to_string(m + 1));
  auto t_var = [&](std::size_t m) { return p.ray_count + m; };

  // (a) minimal non-faces
  const auto faces = faces_by_dimension(fan);
  std::set<Cone> face_set;
  for (const auto& level : faces) face_set.insert(level.begin(), level.end());
  for (std::size_t s = 2; s <= n + 1; ++s) {
    std::set<Cone> nonfaces;
    for (const Cone& f : faces[s - 1 <= n ? s - 1 : n]) {
      if (f.size() != s - 1) continue;
      for (std::size_t r = f.back() + 1; r < p.ray_count; ++r) {
        Cone c = f;
        c.push_back(r);
        if (face_set.count(c)) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop < c.size() && minimal; ++drop) {
          Cone sub = c;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
          minimal = face_set.count(sub) > 0;
        }
        if (minimal) nonfaces.insert(c);
      }
    }
    for (const Cone& c : nonfaces) {
      Generator gen(GeneratorKind::StanleyReisner);
      for (std::size_t r : c) gen.monomial[r] = 1;
      p.generators.push_back(std::move(gen));
    }
  }

  // (b) linear equivalence
  for (std::size_t j = 0; j < n; ++j) {
    Generator gen(GeneratorKind::Linear);
    LinearForm f;
    for (std::size_t r = 0; r < p.ray_count; ++r)
      if (fan.ray(r)[j] != 0) f[r] = fan.ray(r)[j];
    gen.factors.push_back(std::move(f));
    p.generators.push_back(std::move(gen));
  }

  // (c) C_r T_G for rays outside V_{Gamma_G}
  for (std::size_t m = 0; m < g.size(); ++m) {
    const Sublattice& gamma = g.layer(m).gamma();
    for (std::size_t r = 0; r < p.ray_count; ++r) {
      bool outside = false;
      for (std::size_t i = 0; i < gamma.rank() && !outside; ++i)
        outside = dot(gamma.basis().row(i), fan.ray(r)) != 0;
      if (!outside) continue;
      Generator gen(GeneratorKind::Boundary);
      gen.monomial = {{r, 1U}, {t_var(m), 1U}};
      gen.member = m;
      gen.ray = r;
      p.generators.push_back(std::move(gen));
    }
  }

  // (d) F(G, H) over W
  std::map<std::pair<Sublattice, Sublattice>, std::vector<IntVector>> bases;
  for (std::size_t m = 0; m < g.size(); ++m) {
    const Layer& gl = g.layer(m);
    MemberSet above, below;
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (b != m && g.contained(m, b)) above.push_back(b);
      if (g.contained(b, m)) below.push_back(b);
    }
    for (Mask mask : subsets_by_size(above.size())) {
      MemberSet h;
      for (std::size_t i : mask_members(mask)) h.push_back(above[i]);
      std::optional<Layer> mlayer;
      Sublattice inner(n);
      if (!h.empty()) {
        for (const Layer& c : intersect_all(member_layers(g, h), n))
          if (gl.is_contained_in(c)) mlayer = c;
        if (!mlayer) throw MathError("no component of the intersection contains the member");
        inner = mlayer->gamma();
      }
      auto key = std::make_pair(inner, gl.gamma());
      auto it = bases.find(key);
      if (it == bases.end()) it = bases.emplace(key, extend_basis_equal_sign(fan, inner, gl.gamma(), bound)).first;
      const std::vector<IntVector>& chi = it->second;

      Generator gen(GeneratorKind::NestedPair);
      gen.member = m;
      gen.set = h;
      gen.m_layer = mlayer;
      gen.basis = chi;
      for (std::size_t j = inner.rank(); j < chi.size(); ++j) {
        LinearForm f;
        for (std::size_t b : below) f[t_var(b)] = -1;
        for (std::size_t r = 0; r < p.ray_count; ++r) {
          Integer pr = dot(chi[j], fan.ray(r));
          if (pr < 0) f[r] = -pr;
        }
        gen.factors.push_back(std::move(f));
      }
      for (std::size_t k : h) gen.monomial[t_var(k)] = 1;
      p.generators.push_back(std::move(gen));
    }
  }

  // (e) F(H) over W_0
  for (Mask mask : subsets_by_size(g.size())) {
    if (mask == 0) continue;
    MemberSet h = mask_members(mask);
    if (!intersect_all(member_layers(g, h), n).empty()) continue;
    Generator gen(GeneratorKind::EmptyIntersection);
    gen.set = h;
    for (std::size_t k : h) gen.monomial[t_var(k)] = 1;
    p.generators.push_back(std::move(gen));
  }
  return p;
}

}  // namespace toric
