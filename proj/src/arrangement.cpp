#include "toric/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "toric/error.hpp"
#include "toric/parallel.hpp"

namespace toric {

Rational mod_one(Rational x) {
  x.canonicalize();
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  x -= q;
  x.canonicalize();
  return x;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw ParseError("bad rational \"" + text + "\"");
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Layer

Layer::Layer(std::size_t torus_dim) : gamma_(torus_dim) {}

Layer::Layer(Sublattice gamma, std::vector<Rational> phi)
    : gamma_(std::move(gamma)), phi_(std::move(phi)) {
  for (Rational& x : phi_) x = mod_one(x);
}

Layer::Layer(const IntegerMatrix& generators, const std::vector<Rational>& phi)
    : gamma_(generators) {
  if (phi.size() != generators.rows())
    throw ValidationError("layer: phi has " + std::to_string(phi.size()) + " values for " +
                          std::to_string(generators.rows()) + " generators");
  if (!gamma_.is_split_summand())
    throw ValidationError("layer: lattice " + toric::to_string(generators) +
                          " is not a split direct summand");
  HermiteDecomposition h = hermite_normal_form(generators);
  for (std::size_t i = 0; i < generators.rows(); ++i) {
    Rational v = 0;
    for (std::size_t j = 0; j < generators.rows(); ++j) v += Rational(h.transform(i, j)) * phi[j];
    v = mod_one(v);
    if (i < h.rank)
      phi_.push_back(v);
    else if (v != 0)
      throw ValidationError("layer: phi is inconsistent on dependent generators");
  }
}

Rational Layer::value(const IntVector& chi) const {
  auto x = gamma_.coordinates(chi);
  if (!x) throw MathError("layer: character " + toric::to_string(chi) + " is not in Gamma");
  Rational v = 0;
  for (std::size_t i = 0; i < x->size(); ++i) v += Rational((*x)[i]) * phi_[i];
  return mod_one(v);
}

bool Layer::is_contained_in(const Layer& other) const {
  if (other.torus_dim() != torus_dim() || !gamma_.contains(other.gamma_)) return false;
  for (std::size_t i = 0; i < other.codim(); ++i)
    if (value(other.gamma_.basis().row(i)) != other.phi_[i]) return false;
  return true;
}

bool operator<(const Layer& a, const Layer& b) {
  if (a.codim() != b.codim()) return a.codim() < b.codim();
  if (a.gamma_ != b.gamma_) return a.gamma_ < b.gamma_;
  return a.phi_ < b.phi_;
}

std::string Layer::to_string() const {
  std::ostringstream os;
  os << "gamma=" << toric::to_string(gamma_.basis()) << " phi=[";
  for (std::size_t i = 0; i < phi_.size(); ++i) os << (i ? "," : "") << phi_[i].get_str();
  os << ']';
  return os.str();
}

std::vector<Layer> intersect(const Layer& a, const Layer& b) {
  if (a.torus_dim() != b.torus_dim()) throw MathError("intersect: torus dimension mismatch");
  const Sublattice s = a.gamma().sum(b.gamma()).saturation();
  const std::size_t r = s.rank();
  if (r == 0) return {Layer(a.torus_dim())};

  // Each generator of Gamma_a + Gamma_b in coordinates over the basis of s,
  // with its prescribed value.
  IntegerMatrix c(0, r);
  std::vector<Rational> f;
  for (const Layer* layer : {&a, &b})
    for (std::size_t i = 0; i < layer->codim(); ++i) {
      c.append_row(*s.coordinates(layer->gamma().basis().row(i)));
      f.push_back(layer->phi()[i]);
    }
  const std::size_t k = c.rows();

  // Solve c * psi = f in Q/Z: with L c R = D and psi = R y, D y = L f.
  const SmithDecomposition snf = smith_normal_form(c);
  std::vector<Rational> w(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rational v = 0;
    for (std::size_t j = 0; j < k; ++j) v += Rational(snf.left(i, j)) * f[j];
    w[i] = mod_one(v);
  }
  for (std::size_t i = r; i < k; ++i)
    if (w[i] != 0) return {};

  std::vector<Layer> out;
  std::vector<unsigned long> t(r, 0);
  while (true) {
    std::vector<Rational> y(r);
    for (std::size_t i = 0; i < r; ++i) y[i] = (w[i] + Rational(t[i])) / Rational(snf.diagonal[i]);
    std::vector<Rational> psi(r);
    for (std::size_t i = 0; i < r; ++i) {
      Rational v = 0;
      for (std::size_t j = 0; j < r; ++j) v += Rational(snf.right(i, j)) * y[j];
      psi[i] = v;
    }
    out.push_back(Layer(s, std::move(psi)));
    std::size_t i = 0;
    while (i < r && ++t[i] == snf.diagonal[i].get_ui()) t[i++] = 0;
    if (i == r) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Layer> intersect_all(const std::vector<Layer>& layers, std::size_t torus_dim) {
  std::vector<Layer> current{Layer(torus_dim)};
  for (const Layer& l : layers) {
    std::set<Layer> next;
    for (const Layer& c : current)
      for (Layer& comp : intersect(c, l)) next.insert(std::move(comp));
    current.assign(next.begin(), next.end());
    if (current.empty()) break;
  }
  return current;
}

// ---------------------------------------------------------------------------
// LayerPoset

std::optional<std::size_t> LayerPoset::index_of(const Layer& layer) const {
  auto it = index_.find(layer);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LayerPoset::require_index(const Layer& layer) const {
  auto i = index_of(layer);
  if (!i) throw MathError("layer " + layer.to_string() + " is not in the poset");
  return *i;
}

LayerPoset poset_of_layers(const std::vector<Layer>& arrangement, std::size_t torus_dim) {
  for (const Layer& l : arrangement)
    if (l.torus_dim() != torus_dim) throw MathError("poset_of_layers: torus dimension mismatch");
  std::set<Layer> found{Layer(torus_dim)};
  std::deque<Layer> queue;
  for (const Layer& l : arrangement)
    if (found.insert(l).second) queue.push_back(l);
  while (!queue.empty()) {
    Layer x = std::move(queue.front());
    queue.pop_front();
    for (const Layer& l : arrangement)
      for (Layer& comp : intersect(x, l))
        if (found.insert(comp).second) queue.push_back(std::move(comp));
  }

  LayerPoset p;
  p.torus_dim_ = torus_dim;
  p.elements_.assign(found.begin(), found.end());
  const std::size_t n = p.elements_.size();
  for (std::size_t i = 0; i < n; ++i) p.index_[p.elements_[i]] = i;
  p.leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p.leq_[i][j] = p.elements_[j].is_contained_in(p.elements_[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !p.leq_[i][j]) continue;
      bool cover = true;
      for (std::size_t m = 0; m < n && cover; ++m)
        if (m != i && m != j && p.leq_[i][m] && p.leq_[m][j]) cover = false;
      if (cover) p.hasse_.emplace_back(i, j);
    }
  return p;
}

// ---------------------------------------------------------------------------
// Equal-sign bases

namespace {

constexpr std::size_t kSearchNodeLimit = 200000;

// Coefficient vectors over the basis of gamma (up to sign, primitive, in
// [-bound, bound]^rank) whose character has the equal-sign property, sorted
// by max-norm and then lexicographically.
std::vector<IntVector> equal_sign_coefficients(const Fan& fan, const Sublattice& gamma, int bound) {
  const std::size_t k = gamma.rank();
  const std::size_t nrays = fan.rays().size();
  std::vector<std::vector<long>> pair(k, std::vector<long>(nrays));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < nrays; ++r) {
      Integer p = dot(gamma.basis().row(i), fan.ray(r));
      if (!p.fits_slong_p()) throw MathError("equal-sign search: pairing too large");
      pair[i][r] = p.get_si();
    }

  std::vector<std::vector<long>> found;
  std::vector<long> c(k, -bound);
  std::vector<int> sign(nrays);
  while (true) {
    std::size_t lead = 0;
    while (lead < k && c[lead] == 0) ++lead;
    long g = 0;
    for (long x : c) g = std::gcd(g, x);
    if (lead < k && c[lead] > 0 && g == 1) {
      for (std::size_t r = 0; r < nrays; ++r) {
        long s = 0;
        for (std::size_t i = 0; i < k; ++i) s += c[i] * pair[i][r];
        sign[r] = (s > 0) - (s < 0);
      }
      bool ok = true;
      for (const Cone& cone : fan.maximal_cones()) {
        bool pos = false, neg = false;
        for (std::size_t r : cone) {
          pos |= sign[r] > 0;
          neg |= sign[r] < 0;
        }
        if (pos && neg) {
          ok = false;
          break;
        }
      }
      if (ok) found.push_back(c);
    }
    std::size_t i = k;
    while (i > 0 && c[i - 1] == bound) c[--i] = -bound;
    if (i == 0) break;
    ++c[i - 1];
  }
  auto norm = [](const std::vector<long>& v) {
    long m = 0;
    for (long x : v) m = std::max(m, std::labs(x));
    return m;
  };
  std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
    long na = norm(a), nb = norm(b);
    if (na != nb) return na < nb;
    return a < b;
  });
  std::vector<IntVector> out;
  for (const auto& v : found) {
    IntVector z;
    for (long x : v) z.emplace_back(x);
    out.push_back(std::move(z));
  }
  return out;
}

IntVector combine(const IntVector& coeffs, const Sublattice& gamma) { return coeffs * gamma.basis(); }

}  // namespace

EqualSignResult find_equal_sign_basis(const Fan& fan, const Sublattice& gamma, int bound) {
  if (gamma.ambient_rank() != fan.ambient_dim())
    throw MathError("equal-sign search: dimension mismatch");
  EqualSignResult res;
  const std::size_t k = gamma.rank();
  if (k == 0) {
    res.found = true;
    return res;
  }
  std::vector<IntVector> cands = equal_sign_coefficients(fan, gamma, bound);
  std::vector<std::size_t> order(cands.size());
  std::iota(order.begin(), order.end(), 0);
  auto picked = first_unimodular_subset(cands, order, k, 0, kSearchNodeLimit);
  if (!picked) {
    res.detail = "no equal-sign basis found within bound " + std::to_string(bound);
    return res;
  }
  res.found = true;
  for (std::size_t idx : *picked) res.basis.push_back(combine(cands[idx], gamma));
  return res;
}

EqualSignResult verify_equal_sign_basis(const Fan& fan, const Sublattice& gamma,
                                        const std::vector<IntVector>& basis) {
  for (const IntVector& v : basis)
    if (v.size() != gamma.ambient_rank())
      throw ValidationError("supplied basis vector " + to_string(v) + " has the wrong dimension");
  if (basis.size() != gamma.rank() || Sublattice(basis, gamma.ambient_rank()) != gamma)
    throw ValidationError("supplied basis does not generate " + to_string(gamma.basis()));
  EqualSignResult res;
  res.supplied = true;
  res.basis = basis;
  res.found = true;
  for (const IntVector& v : basis)
    if (!equal_sign_holds(fan, v)) {
      res.found = false;
      res.detail = "supplied vector " + to_string(v) + " violates the equal-sign property";
      break;
    }
  return res;
}

GoodnessReport goodness_check(const Fan& fan, const LayerPoset& poset,
                              const std::map<std::size_t, std::vector<IntVector>>& supplied,
                              int bound) {
  const FanReport fr = validate(fan);
  if (!fr.smooth || !fr.complete) throw ValidationError("goodness check needs a smooth complete fan: " + fr.detail);
  GoodnessReport report;
  report.certificates.resize(poset.size());
  parallel_for(poset.size(), [&](std::size_t i) {
    const Sublattice& gamma = poset.element(i).gamma();
    auto it = supplied.find(i);
    report.certificates[i] = it != supplied.end() ? verify_equal_sign_basis(fan, gamma, it->second)
                                                  : find_equal_sign_basis(fan, gamma, bound);
  });
  for (const EqualSignResult& c : report.certificates) report.good = report.good && c.found;
  return report;
}

std::vector<IntVector> extend_basis_equal_sign(const Fan& fan, const Sublattice& inner,
                                               const Sublattice& outer, int bound) {
  if (!outer.contains(inner)) throw MathError("extend_basis_equal_sign: inner is not contained in outer");
  if (!inner.is_split_summand() || !outer.is_split_summand())
    throw MathError("extend_basis_equal_sign: lattices must be split summands");
  EqualSignResult in = find_equal_sign_basis(fan, inner, bound);
  if (!in.found) throw MathError("extend_basis_equal_sign: inner lattice: " + in.detail);
  const std::size_t k = inner.rank();
  const std::size_t s = outer.rank();
  if (k == s) return in.basis;

  std::vector<IntVector> vectors;
  for (const IntVector& v : in.basis) vectors.push_back(*outer.coordinates(v));
  std::vector<IntVector> cands = equal_sign_coefficients(fan, outer, bound);
  vectors.insert(vectors.end(), cands.begin(), cands.end());
  std::vector<std::size_t> order(vectors.size());
  std::iota(order.begin(), order.end(), 0);
  auto picked = first_unimodular_subset(vectors, order, s, k, kSearchNodeLimit);
  if (!picked)
    throw MathError("extend_basis_equal_sign: no extension found within bound " + std::to_string(bound));
  std::vector<IntVector> out = in.basis;
  for (std::size_t j = k; j < s; ++j) out.push_back(combine(vectors[(*picked)[j]], outer));
  return out;
}

}  // namespace toric
