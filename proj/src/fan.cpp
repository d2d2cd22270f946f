#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

namespace {

bool is_primitive(const IntVector& v) {
  Integer g = 0;
  for (const Integer& x : v) g = gcd(g, x);
  return g == 1;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int sign_of(const Integer& x) { return sgn(x); }

}  // namespace

Fan::Fan(std::size_t ambient_dim, std::vector<IntVector> rays, std::vector<Cone> maximal_cones)
    : dim_(ambient_dim), rays_(std::move(rays)), cones_(std::move(maximal_cones)) {
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i].size() != dim_)
      throw ValidationError("ray r" + std::to_string(i + 1) + " has wrong dimension");
    if (!is_primitive(rays_[i]))
      throw ValidationError("ray r" + std::to_string(i + 1) + " " + to_string(rays_[i]) +
                            " is not primitive");
  }
  {
    std::set<IntVector> seen(rays_.begin(), rays_.end());
    if (seen.size() != rays_.size()) throw ValidationError("fan has repeated rays");
  }
  std::vector<bool> used(rays_.size(), false);
  for (Cone& c : cones_) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw ValidationError("cone lists a ray twice");
    for (std::size_t idx : c) {
      if (idx >= rays_.size())
        throw ValidationError("cone refers to ray index " + std::to_string(idx) +
                              " out of range");
      used[idx] = true;
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) throw ValidationError("ray r" + std::to_string(i + 1) + " lies in no cone");
  std::set<Cone> distinct(cones_.begin(), cones_.end());
  if (distinct.size() != cones_.size()) throw ValidationError("fan has repeated cones");
}

bool operator==(const Fan& a, const Fan& b) {
  return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.cones_ == b.cones_;
}

FanReport validate(const Fan& fan) {
  FanReport report;
  const std::size_t n = fan.ambient_dim();
  report.simplicial = true;
  report.smooth = true;
  for (const Cone& c : fan.maximal_cones()) {
    std::vector<IntVector> gens;
    for (std::size_t i : c) gens.push_back(fan.ray(i));
    Sublattice lat(gens, n);
    if (lat.rank() != c.size()) {
      report.simplicial = report.smooth = false;
      if (report.detail.empty()) report.detail = "cone with linearly dependent rays";
      break;
    }
    if (!lat.is_split_summand()) {
      report.smooth = false;
      if (report.detail.empty()) report.detail = "cone whose rays do not extend to a Z-basis";
    }
  }

  report.complete = report.simplicial && !fan.maximal_cones().empty();
  if (report.complete) {
    for (const Cone& c : fan.maximal_cones())
      if (c.size() != n) {
        report.complete = false;
        report.detail = "maximal cone of dimension below the ambient dimension";
        break;
      }
  }
  if (report.complete && n > 0) {
    // ridge -> (cone index, opposite ray)
    std::map<Cone, std::vector<std::pair<std::size_t, std::size_t>>> ridges;
    const auto& cones = fan.maximal_cones();
    for (std::size_t ci = 0; ci < cones.size(); ++ci)
      for (std::size_t k = 0; k < n; ++k) {
        Cone ridge = cones[ci];
        ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(k));
        ridges[ridge].emplace_back(ci, cones[ci][k]);
      }
    std::vector<std::size_t> parent(cones.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [ridge, sides] : ridges) {
      if (sides.size() != 2) {
        report.complete = false;
        report.detail = "a ridge lies in " + std::to_string(sides.size()) + " maximal cones";
        break;
      }
      int signs[2];
      for (int s = 0; s < 2; ++s) {
        IntegerMatrix m(0, n);
        for (std::size_t i : ridge) m.append_row(fan.ray(i));
        m.append_row(fan.ray(sides[s].second));
        signs[s] = sign_of(determinant(m));
      }
      if (signs[0] * signs[1] >= 0) {
        report.complete = false;
        report.detail = "two maximal cones lie on the same side of a shared ridge";
        break;
      }
      parent[find(sides[0].first)] = find(sides[1].first);
    }
    if (report.complete)
      for (std::size_t ci = 0; ci < cones.size(); ++ci)
        if (find(ci) != find(0)) {
          report.complete = false;
          report.detail = "maximal cones are not connected through ridges";
          break;
        }
  }
  if (!report.complete && report.detail.empty()) report.detail = "fan is not complete";
  return report;
}

std::vector<std::vector<Cone>> faces_by_dimension(const Fan& fan) {
  const std::size_t n = fan.ambient_dim();
  std::vector<std::set<Cone>> faces(n + 1);
  for (const Cone& c : fan.maximal_cones()) {
    if (c.size() > n) throw ValidationError("fan is not simplicial");
    std::vector<IntVector> gens;
    for (std::size_t i : c) gens.push_back(fan.ray(i));
    if (Sublattice(gens, n).rank() != c.size()) throw ValidationError("fan is not simplicial");
    const std::size_t k = c.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      Cone f;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (std::size_t{1} << b)) f.push_back(c[b]);
      faces[f.size()].insert(std::move(f));
    }
  }
  std::vector<std::vector<Cone>> out(n + 1);
  for (std::size_t d = 0; d <= n; ++d) out[d].assign(faces[d].begin(), faces[d].end());
  return out;
}

FVector f_vector(const Fan& fan) {
  FVector f;
  for (const auto& level : faces_by_dimension(fan)) f.push_back(static_cast<std::int64_t>(level.size()));
  return f;
}

GradedCount betti_numbers(const Fan& fan) {
  FanReport r = validate(fan);
  if (!r.smooth || !r.complete)
    throw ValidationError("Betti numbers need a smooth complete fan: " + r.detail);
  const FVector f = f_vector(fan);
  const auto n = static_cast<std::int64_t>(fan.ambient_dim());
  std::vector<std::int64_t> b(static_cast<std::size_t>(n + 1), 0);
  for (std::int64_t k = 0; k <= n; ++k) {
    std::int64_t s = 0;
    for (std::int64_t i = k; i <= n; ++i) {
      std::int64_t term = binomial(i, k) * f[static_cast<std::size_t>(n - i)];
      s += ((i - k) % 2 == 0) ? term : -term;
    }
    b[static_cast<std::size_t>(k)] = s;
  }
  return GradedCount(std::move(b));
}

bool equal_sign_holds(const Fan& fan, const IntVector& chi) {
  if (chi.size() != fan.ambient_dim()) throw MathError("equal_sign_holds: dimension mismatch");
  std::vector<int> pairing(fan.rays().size());
  for (std::size_t i = 0; i < fan.rays().size(); ++i) pairing[i] = sign_of(dot(chi, fan.ray(i)));
  for (const Cone& c : fan.maximal_cones()) {
    bool pos = false, neg = false;
    for (std::size_t i : c) {
      pos |= pairing[i] > 0;
      neg |= pairing[i] < 0;
    }
    if (pos && neg) return false;
  }
  return true;
}

SubFan subfan(const Fan& fan, const Sublattice& gamma) {
  const std::size_t n = fan.ambient_dim();
  if (gamma.ambient_rank() != n) throw MathError("subfan: dimension mismatch");
  if (!gamma.is_split_summand()) throw ValidationError("subfan: lattice is not a split summand");

  std::vector<bool> inside(fan.rays().size(), true);
  for (std::size_t i = 0; i < fan.rays().size(); ++i)
    for (std::size_t r = 0; r < gamma.rank() && inside[i]; ++r)
      if (dot(gamma.basis().row(r), fan.ray(i)) != 0) inside[i] = false;

  std::set<Cone> candidates;
  for (const Cone& c : fan.maximal_cones()) {
    Cone f;
    for (std::size_t i : c)
      if (inside[i]) f.push_back(i);
    candidates.insert(std::move(f));
  }
  std::vector<Cone> maximal;
  for (const Cone& c : candidates) {
    bool dominated = false;
    for (const Cone& d : candidates)
      if (d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end())) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(c);
  }

  SubFan out;
  out.coordinate_lattice = gamma.annihilator();
  const std::size_t d = out.coordinate_lattice.rank();
  std::map<std::size_t, std::size_t> renumber;
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < fan.rays().size(); ++i) {
    if (!inside[i]) continue;
    auto coords = out.coordinate_lattice.coordinates(fan.ray(i));
    if (!coords) throw MathError("subfan: ray outside the coordinate lattice");
    renumber[i] = rays.size();
    out.parent_rays.push_back(i);
    rays.push_back(std::move(*coords));
  }
  std::vector<Cone> cones;
  for (const Cone& c : maximal) {
    Cone mapped;
    for (std::size_t i : c) mapped.push_back(renumber.at(i));
    cones.push_back(std::move(mapped));
  }
  out.fan = Fan(d, std::move(rays), std::move(cones));
  FanReport r = validate(out.fan);
  if (!r.smooth || !r.complete)
    throw ValidationError("equal-sign violation: restriction to V_Gamma is not a smooth complete fan (" +
                          r.detail + ")");
  return out;
}

Fan weyl_fan_A(std::size_t n) {
  if (n == 0) throw ValidationError("weyl_fan_A: n must be at least 1");
  if (n > 20) throw ValidationError("weyl_fan_A: n too large");
  const std::size_t d = n - 1;
  const std::size_t subsets = (std::size_t{1} << n) - 2;
  std::vector<IntVector> rays;
  for (std::size_t mask = 1; mask <= subsets; ++mask) {
    IntVector v(d);
    for (std::size_t j = 0; j < d; ++j) {
      long a = (mask >> j) & 1U;
      long b = (mask >> (j + 1)) & 1U;
      v[j] = a - b;
    }
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Cone c;
    std::size_t mask = 0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      mask |= std::size_t{1} << perm[j];
      c.push_back(mask - 1);
    }
    cones.push_back(std::move(c));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Fan(d, std::move(rays), std::move(cones));
}

std::string to_string(const RayMonomial& m, std::size_t index_offset) {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ray, e] : m) {
    if (!first) os << '*';
    first = false;
    os << 'C' << (ray + index_offset);
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

namespace {

bool is_face(const std::set<Cone>& faces, const RayMonomial& m) {
  Cone support;
  for (const auto& [ray, e] : m) support.push_back(ray);
  return faces.count(support) > 0;
}

RayMonomial multiply_by_ray(const RayMonomial& m, std::size_t ray) {
  RayMonomial out = m;
  auto it = std::lower_bound(out.begin(), out.end(), std::make_pair(ray, 0U));
  if (it != out.end() && it->first == ray)
    ++it->second;
  else
    out.insert(it, {ray, 1U});
  return out;
}

// Distribute `extra` further exponent units over positions >= pos.
void add_exponents(RayMonomial& m, std::size_t pos, unsigned extra, std::vector<RayMonomial>& out) {
  if (pos + 1 == m.size()) {
    m[pos].second += extra;
    out.push_back(m);
    m[pos].second -= extra;
    return;
  }
  for (unsigned e = 0; e <= extra; ++e) {
    m[pos].second += e;
    add_exponents(m, pos + 1, extra - e, out);
    m[pos].second -= e;
  }
}

// All monomials of degree k whose support is a face.
std::vector<RayMonomial> face_monomials(const std::vector<std::vector<Cone>>& faces, std::size_t k) {
  std::vector<RayMonomial> out;
  if (k == 0) return {RayMonomial{}};
  for (std::size_t d = 1; d <= std::min(k, faces.size() - 1); ++d)
    for (const Cone& f : faces[d]) {
      RayMonomial m(d);
      for (std::size_t i = 0; i < d; ++i) m[i] = {f[i], 1U};
      add_exponents(m, 0, static_cast<unsigned>(k - d), out);
    }
  return out;
}

bool squarefree(const RayMonomial& m) {
  return std::all_of(m.begin(), m.end(), [](const auto& p) { return p.second == 1; });
}


}  // namespace

std::vector<std::vector<RayMonomial>> cohomology_basis(const Fan& fan) {
  const GradedCount betti = betti_numbers(fan);
  const std::size_t n = fan.ambient_dim();
  const auto faces = faces_by_dimension(fan);
  std::set<Cone> face_set;
  for (const auto& level : faces) face_set.insert(level.begin(), level.end());

  std::vector<std::vector<RayMonomial>> basis(n + 1);
  basis[0] = {RayMonomial{}};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<RayMonomial> gens = face_monomials(faces, k);
    std::map<RayMonomial, std::size_t> index;
    for (std::size_t i = 0; i < gens.size(); ++i) index[gens[i]] = i;

    IntegerMatrix relations(0, gens.size());
    for (const RayMonomial& m : face_monomials(faces, k - 1))
      for (std::size_t b = 0; b < n; ++b) {
        IntVector rel(gens.size(), Integer(0));
        for (std::size_t r = 0; r < fan.rays().size(); ++r) {
          const Integer& c = fan.ray(r)[b];
          if (c == 0) continue;
          RayMonomial prod = multiply_by_ray(m, r);
          if (!is_face(face_set, prod)) continue;
          rel[index.at(prod)] += c;
        }
        relations.append_row(rel);
      }

    const SmithDecomposition snf = smith_normal_form(relations);
    const std::size_t rho = snf.rank();
    for (std::size_t i = 0; i < rho; ++i)
      if (snf.diagonal[i] != 1) throw MathError("cohomology_basis: torsion in the quotient");
    const std::size_t free_rank = gens.size() - rho;
    if (free_rank != static_cast<std::size_t>(betti[k]))
      throw MathError("cohomology_basis: quotient rank disagrees with Betti number");

    std::vector<std::size_t> order(gens.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      bool sa = squarefree(gens[a]), sb = squarefree(gens[b]);
      if (sa != sb) return sa;
      return gens[a] < gens[b];
    });

    std::vector<IntVector> images(gens.size(), IntVector(free_rank));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < free_rank; ++j) images[i][j] = snf.right(i, rho + j);
    auto picked = first_unimodular_subset(images, order, free_rank);
    if (!picked) throw MathError("cohomology_basis: no Z-basis found among candidate monomials");
    for (std::size_t idx : *picked) basis[k].push_back(gens[idx]);
  }
  return basis;
}

}  // namespace toric
