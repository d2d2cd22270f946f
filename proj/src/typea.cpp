#include "toric/typea.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

namespace {

void require_distinct_positive(const Word& word) {
  std::set<int> seen;
  for (int x : word) {
    if (x <= 0) throw ValidationError("word entries must be positive");
    if (!seen.insert(x).second) throw ValidationError("repeated entry " + std::to_string(x) + " in word");
  }
}

void require_permutation(const Word& word, std::size_t m) {
  if (word.size() != m) throw ValidationError("expected a permutation of 1.." + std::to_string(m));
  std::vector<bool> seen(m + 1, false);
  for (int x : word) {
    if (x < 1 || static_cast<std::size_t>(x) > m || seen[static_cast<std::size_t>(x)])
      throw ValidationError("expected a permutation of 1.." + std::to_string(m));
    seen[static_cast<std::size_t>(x)] = true;
  }
}

mpq_class binom(std::size_t n, std::size_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return mpq_class(r);
}

GradedCount to_graded(const QPoly& p) {
  std::vector<std::int64_t> c;
  for (const mpq_class& x : p.coefficients()) c.push_back(x.get_num().get_si());
  return GradedCount(std::move(c));
}

QPoly to_qpoly(const GradedCount& g) {
  std::vector<mpq_class> c;
  for (std::int64_t x : g.coefficients()) c.emplace_back(static_cast<long>(x));
  return QPoly(std::move(c));
}

// Visits every permutation of 1..n.
void for_each_permutation(std::size_t n, const std::function<void(const Word&)>& visit) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

// Set partitions of `labels` (sorted); blocks ordered by their first element.
void for_each_set_partition(const Word& labels, const std::function<void(const std::vector<Word>&)>& visit) {
  std::vector<Word> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == labels.size()) {
      visit(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(labels[i]);
      rec(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({labels[i]});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
}

void collect_leaves(const ForestNode& node, std::vector<int>& out) {
  if (node.is_leaf()) {
    out.push_back(node.leaf);
    return;
  }
  for (const ForestNode& c : node.children) collect_leaves(c, out);
}

bool node_is_admissible(const ForestNode& node) {
  if (node.is_leaf()) return node.children.empty() && node.exponent == 0;
  if (node.leaf < 0) return false;
  const std::size_t k = node.children.size();
  if (k < 3 || node.exponent < 1 || node.exponent > k - 2) return false;
  for (const ForestNode& c : node.children)
    if (!node_is_admissible(c)) return false;
  return true;
}

void canonicalize_node(ForestNode& node) {
  for (ForestNode& c : node.children) canonicalize_node(c);
  std::sort(node.children.begin(), node.children.end(),
            [](const ForestNode& a, const ForestNode& b) { return a.min_leaf() < b.min_leaf(); });
}

bool contains_leaf(const ForestNode& node, int label) {
  if (node.is_leaf()) return node.leaf == label;
  for (const ForestNode& c : node.children)
    if (contains_leaf(c, label)) return true;
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// Words

HookFactorization hook_factorize(const Word& word) {
  require_distinct_positive(word);
  HookFactorization out;
  std::size_t end = word.size();
  while (true) {
    std::size_t start = end;
    for (std::size_t i = end; i-- > 1;) {
      if (word[i - 1] > word[i]) {
        start = i - 1;
        break;
      }
    }
    if (start == end) break;
    out.hooks.emplace_back(word.begin() + static_cast<std::ptrdiff_t>(start),
                           word.begin() + static_cast<std::ptrdiff_t>(end));
    end = start;
  }
  out.prefix.assign(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(end));
  std::reverse(out.hooks.begin(), out.hooks.end());
  return out;
}

std::size_t inversions(const Word& word) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++count;
  return count;
}

std::size_t lec(const Word& word) {
  std::size_t total = 0;
  for (const Word& h : hook_factorize(word).hooks) total += inversions(h);
  return total;
}

std::size_t des(const Word& word) {
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) ++count;
  return count;
}

bool is_hook(const Word& word) {
  if (word.size() < 2 || word[0] < word[1]) return false;
  for (std::size_t i = 1; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) return false;
  return true;
}

Word hook_from_set(const Word& sorted_set, std::size_t i) {
  const std::size_t s = sorted_set.size();
  for (std::size_t a = 0; a + 1 < s; ++a)
    if (sorted_set[a] >= sorted_set[a + 1]) throw ValidationError("hook_from_set: set must be strictly increasing");
  if (i < 1 || i + 1 > s)
    throw ValidationError("hook_from_set: inversion count " + std::to_string(i) + " outside 1.." +
                          std::to_string(s == 0 ? 0 : s - 1));
  Word out;
  out.push_back(sorted_set[i]);
  for (std::size_t a = 0; a < s; ++a)
    if (a != i) out.push_back(sorted_set[a]);
  return out;
}

GradedCount des_distribution(std::size_t n) {
  std::vector<std::int64_t> c(n + 1, 0);
  for_each_permutation(n, [&](const Word& w) { ++c[des(w)]; });
  return GradedCount(std::move(c));
}

GradedCount lec_distribution(std::size_t n) {
  std::vector<std::int64_t> c(n + 1, 0);
  for_each_permutation(n, [&](const Word& w) { ++c[lec(w)]; });
  return GradedCount(std::move(c));
}

GradedCount eulerian_polynomial(std::size_t n) {
  if (n == 0) return GradedCount({1});
  return des_distribution(n).shifted(1);
}

// ---------------------------------------------------------------------------
// Forests

int ForestNode::min_leaf() const {
  if (is_leaf()) return leaf;
  int best = 0;
  for (const ForestNode& c : children) {
    int m = c.min_leaf();
    if (best == 0 || m < best) best = m;
  }
  return best;
}

std::size_t ForestNode::leaf_count() const {
  if (is_leaf()) return 1;
  std::size_t total = 0;
  for (const ForestNode& c : children) total += c.leaf_count();
  return total;
}

unsigned ForestNode::degree() const {
  unsigned total = exponent;
  for (const ForestNode& c : children) total += c.degree();
  return total;
}

std::size_t AdmissibleForest::leaf_count() const {
  std::size_t total = 0;
  for (const ForestNode& t : trees) total += t.leaf_count();
  return total;
}

unsigned AdmissibleForest::degree() const {
  unsigned total = 0;
  for (const ForestNode& t : trees) total += t.degree();
  return total;
}

bool operator<(const AdmissibleForest& a, const AdmissibleForest& b) { return to_string(a) < to_string(b); }

void canonicalize(AdmissibleForest& f) {
  for (ForestNode& t : f.trees) canonicalize_node(t);
  std::sort(f.trees.begin(), f.trees.end(),
            [](const ForestNode& a, const ForestNode& b) { return a.min_leaf() < b.min_leaf(); });
}

bool is_admissible(const AdmissibleForest& f) {
  std::vector<int> leaves;
  for (const ForestNode& t : f.trees) {
    if (!node_is_admissible(t)) return false;
    collect_leaves(t, leaves);
  }
  std::sort(leaves.begin(), leaves.end());
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (leaves[i] != static_cast<int>(i + 1)) return false;
  return true;
}

std::string to_string(const ForestNode& node) {
  if (node.is_leaf()) return std::to_string(node.leaf);
  std::string s = "q" + std::to_string(node.exponent) + "(";
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i) s += ',';
    s += to_string(node.children[i]);
  }
  return s + ")";
}

std::string to_string(const AdmissibleForest& f) {
  std::string s;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) s += ' ';
    s += to_string(f.trees[i]);
  }
  return s;
}

namespace {

class ForestParser {
 public:
  explicit ForestParser(const std::string& text) : s_(text) {}

  AdmissibleForest forest() {
    AdmissibleForest f;
    skip();
    while (pos_ < s_.size()) {
      f.trees.push_back(tree());
      skip();
    }
    return f;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("forest syntax: " + what + " at position " + std::to_string(pos_));
  }
  unsigned number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 6) fail("number too large");
    return static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
  }
  ForestNode tree() {
    skip();
    ForestNode node;
    if (pos_ < s_.size() && s_[pos_] == 'q') {
      ++pos_;
      node.exponent = number();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != '(') fail("expected '('");
      ++pos_;
      while (true) {
        node.children.push_back(tree());
        skip();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < s_.size() && s_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
      return node;
    }
    unsigned v = number();
    if (v == 0) fail("leaf labels start at 1");
    node.leaf = static_cast<int>(v);
    return node;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

AdmissibleForest parse_forest(const std::string& text) {
  AdmissibleForest f = ForestParser(text).forest();
  if (!is_admissible(f)) throw ValidationError("not an admissible forest: " + text);
  canonicalize(f);
  return f;
}

Word parse_word(const std::string& text) {
  Word out;
  std::string cleaned;
  for (char ch : text) cleaned += (ch == '[' || ch == ']' || ch == ',') ? ' ' : ch;
  std::istringstream is(cleaned);
  std::string token;
  while (is >> token) {
    if (token.empty() || token.size() > 9 ||
        !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad word entry '" + token + "'");
    out.push_back(std::stoi(token));
  }
  return out;
}

std::string to_string(const Word& word) {
  std::string s = "[";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(word[i]);
  }
  return s + "]";
}

std::vector<ForestNode> enumerate_trees(const Word& labels) {
  std::vector<ForestNode> out;
  if (labels.empty()) return out;
  if (labels.size() == 1) {
    ForestNode leaf;
    leaf.leaf = labels[0];
    out.push_back(leaf);
    return out;
  }
  for_each_set_partition(labels, [&](const std::vector<Word>& blocks) {
    const std::size_t k = blocks.size();
    if (k < 3) return;
    std::vector<std::vector<ForestNode>> options;
    for (const Word& b : blocks) {
      options.push_back(enumerate_trees(b));
      if (options.back().empty()) return;
    }
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      for (unsigned e = 1; e + 2 <= k; ++e) {
        ForestNode node;
        node.exponent = e;
        for (std::size_t b = 0; b < k; ++b) node.children.push_back(options[b][idx[b]]);
        out.push_back(std::move(node));
      }
      std::size_t b = 0;
      while (b < k && ++idx[b] == options[b].size()) idx[b++] = 0;
      if (b == k) break;
    }
  });
  return out;
}

std::vector<AdmissibleForest> enumerate_forests(std::size_t n) {
  if (n == 0) throw ValidationError("enumerate_forests: n must be at least 1");
  Word labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<AdmissibleForest> out;
  for_each_set_partition(labels, [&](const std::vector<Word>& blocks) {
    std::vector<std::vector<ForestNode>> options;
    for (const Word& b : blocks) {
      options.push_back(enumerate_trees(b));
      if (options.back().empty()) return;
    }
    std::vector<std::size_t> idx(blocks.size(), 0);
    while (true) {
      AdmissibleForest f;
      for (std::size_t b = 0; b < blocks.size(); ++b) f.trees.push_back(options[b][idx[b]]);
      out.push_back(std::move(f));
      std::size_t b = 0;
      while (b < blocks.size() && ++idx[b] == options[b].size()) idx[b++] = 0;
      if (b == blocks.size()) break;
    }
  });
  return out;
}

std::map<std::pair<unsigned, std::size_t>, std::int64_t> forest_counts(std::size_t n) {
  std::map<std::pair<unsigned, std::size_t>, std::int64_t> out;
  for (const AdmissibleForest& f : enumerate_forests(n)) ++out[{f.degree(), f.trees.size()}];
  return out;
}

GradedCount tree_degree_counts(std::size_t n) {
  if (n == 0) return GradedCount();
  // tree[s] = generating polynomial of trees on s labeled leaves;
  // part[m][k] = k-block set partitions of m leaves weighted by trees.
  std::vector<QPoly> tree(n + 1);
  std::vector<std::vector<QPoly>> part(n + 1, std::vector<QPoly>(n + 1));
  part[0][0] = QPoly(1);
  for (std::size_t m = 1; m <= n; ++m) {
    if (m == 1) {
      tree[1] = QPoly(1);
    } else {
      QPoly t;
      QPoly weight;  // q + ... + q^{k-2}
      for (std::size_t k = 3; k <= m; ++k) {
        std::vector<mpq_class> w(k - 1, 0);
        for (std::size_t e = 1; e + 2 <= k; ++e) w[e] = 1;
        weight = QPoly(std::move(w));
        // part[m][k] only needs tree[s] for s < m when k >= 2.
        QPoly pk;
        for (std::size_t s = 1; s + (k - 1) <= m; ++s)
          if (!tree[s].is_zero() && !part[m - s][k - 1].is_zero()) pk += (tree[s] * part[m - s][k - 1]) * binom(m - 1, s - 1);
        part[m][k] = pk;
        t += pk * weight;
      }
      tree[m] = t;
    }
    for (std::size_t k = 1; k <= 2 && k <= m; ++k) {
      QPoly pk;
      for (std::size_t s = 1; s + (k - 1) <= m; ++s)
        if (!tree[s].is_zero() && !part[m - s][k - 1].is_zero()) pk += (tree[s] * part[m - s][k - 1]) * binom(m - 1, s - 1);
      part[m][k] = pk;
    }
  }
  return to_graded(tree[n]);
}

// ---------------------------------------------------------------------------
// Psi

AdmissibleForest psi(const AdmissibleForest& forest, const Word& sigma) {
  if (!is_admissible(forest)) throw ValidationError("psi: input forest is not admissible");
  AdmissibleForest f = forest;
  canonicalize(f);
  const std::size_t m = f.trees.size();
  require_permutation(sigma, m);
  const HookFactorization hf = hook_factorize(sigma);
  ForestNode current;
  current.leaf = static_cast<int>(f.leaf_count() + 1);
  for (std::size_t h = hf.hooks.size(); h-- > 0;) {
    const Word& tau = hf.hooks[h];
    ForestNode node;
    node.exponent = static_cast<unsigned>(inversions(tau));
    for (int x : tau) node.children.push_back(f.trees[static_cast<std::size_t>(x - 1)]);
    node.children.push_back(std::move(current));
    current = std::move(node);
  }
  AdmissibleForest out;
  for (int x : hf.prefix) out.trees.push_back(f.trees[static_cast<std::size_t>(x - 1)]);
  out.trees.push_back(std::move(current));
  canonicalize(out);
  return out;
}

std::pair<AdmissibleForest, Word> psi_inverse(const AdmissibleForest& forest) {
  if (!is_admissible(forest)) throw ValidationError("psi_inverse: input forest is not admissible");
  const std::size_t total = forest.leaf_count();
  if (total < 2) throw ValidationError("psi_inverse: forest needs at least two leaves");
  const int top = static_cast<int>(total);

  std::vector<ForestNode> others;
  const ForestNode* root = nullptr;
  for (const ForestNode& t : forest.trees) {
    if (contains_leaf(t, top))
      root = &t;
    else
      others.push_back(t);
  }

  // Path vertices from the root down to the parent of the top leaf.
  std::vector<std::pair<unsigned, std::vector<ForestNode>>> path;
  const ForestNode* v = root;
  while (!v->is_leaf()) {
    const ForestNode* next = nullptr;
    std::vector<ForestNode> off;
    for (const ForestNode& c : v->children) {
      if (contains_leaf(c, top))
        next = &c;
      else
        off.push_back(c);
    }
    path.emplace_back(v->exponent, std::move(off));
    v = next;
  }

  AdmissibleForest f;
  f.trees = others;
  for (const auto& [e, off] : path) f.trees.insert(f.trees.end(), off.begin(), off.end());
  canonicalize(f);
  std::map<int, int> index_of_min;
  for (std::size_t i = 0; i < f.trees.size(); ++i) index_of_min[f.trees[i].min_leaf()] = static_cast<int>(i + 1);

  Word sigma;
  for (const ForestNode& t : others) sigma.push_back(index_of_min.at(t.min_leaf()));
  std::sort(sigma.begin(), sigma.end());
  for (const auto& [e, off] : path) {
    Word set;
    for (const ForestNode& t : off) set.push_back(index_of_min.at(t.min_leaf()));
    std::sort(set.begin(), set.end());
    Word hook = hook_from_set(set, e);
    sigma.insert(sigma.end(), hook.begin(), hook.end());
  }
  return {f, sigma};
}

// ---------------------------------------------------------------------------
// Chains

Word chain_monomial_to_permutation(const ChainMonomial& chain, std::size_t n) {
  std::vector<bool> used(n + 1, false);
  std::vector<Word> hooks;
  Word previous;
  for (const ChainStep& step : chain) {
    for (std::size_t a = 0; a < step.set.size(); ++a) {
      if (step.set[a] < 1 || static_cast<std::size_t>(step.set[a]) > n)
        throw ValidationError("chain subset entry outside 1.." + std::to_string(n));
      if (a > 0 && step.set[a - 1] >= step.set[a]) throw ValidationError("chain subsets must be sorted and distinct");
    }
    if (!std::includes(step.set.begin(), step.set.end(), previous.begin(), previous.end()) ||
        step.set.size() == previous.size())
      throw ValidationError("chain must be strictly increasing");
    Word diff;
    std::set_difference(step.set.begin(), step.set.end(), previous.begin(), previous.end(), std::back_inserter(diff));
    if (step.exponent < 1 || step.exponent + 1 > diff.size())
      throw ValidationError("exponent " + std::to_string(step.exponent) + " must lie in 1.." +
                            std::to_string(diff.size() - 1) + " for relative codimension " +
                            std::to_string(diff.size() - 1));
    hooks.push_back(hook_from_set(diff, step.exponent));
    for (int x : diff) used[static_cast<std::size_t>(x)] = true;
    previous = step.set;
  }
  Word sigma;
  for (std::size_t x = 1; x <= n; ++x)
    if (!used[x]) sigma.push_back(static_cast<int>(x));
  for (const Word& h : hooks) sigma.insert(sigma.end(), h.begin(), h.end());
  return sigma;
}

ChainMonomial permutation_to_chain_monomial(const Word& sigma) {
  require_permutation(sigma, sigma.size());
  ChainMonomial chain;
  Word current;
  for (const Word& h : hook_factorize(sigma).hooks) {
    current.insert(current.end(), h.begin(), h.end());
    std::sort(current.begin(), current.end());
    chain.push_back({current, static_cast<unsigned>(inversions(h))});
  }
  return chain;
}

std::vector<ChainMonomial> enumerate_chain_monomials(std::size_t n) {
  std::vector<ChainMonomial> out;
  ChainMonomial chain;
  std::function<void(const Word&, const Word&)> rec = [&](const Word& current, const Word& rest) {
    out.push_back(chain);
    const std::size_t r = rest.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask) {
      Word diff, remaining;
      for (std::size_t a = 0; a < r; ++a) ((mask >> a) & 1U ? diff : remaining).push_back(rest[a]);
      if (diff.size() < 2) continue;
      Word next;
      std::merge(current.begin(), current.end(), diff.begin(), diff.end(), std::back_inserter(next));
      for (unsigned e = 1; e < diff.size(); ++e) {
        chain.push_back({next, e});
        rec(next, remaining);
        chain.pop_back();
      }
    }
  };
  Word all(n);
  std::iota(all.begin(), all.end(), 1);
  rec({}, all);
  return out;
}

// ---------------------------------------------------------------------------
// Generating functions

TruncatedSeries lambda_series(std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t n = 1; n <= order; ++n) s.set_coefficient(n, to_qpoly(tree_degree_counts(n)));
  return s;
}

TruncatedSeries lec_series(std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t n = 1; n <= order; ++n) s.set_coefficient(n, to_qpoly(lec_distribution(n)));
  return s;
}

TruncatedSeries eulerian_series(std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t n = 1; n <= order; ++n) s.set_coefficient(n, to_qpoly(des_distribution(n)));
  return s;
}

namespace {

IdentityCheck compare(std::string name, std::size_t order, const TruncatedSeries& a, const TruncatedSeries& b) {
  IdentityCheck c;
  c.name = std::move(name);
  c.order = order;
  c.holds = true;
  for (std::size_t n = 0; n <= order; ++n) {
    if (a.coefficient(n) != b.coefficient(n)) {
      c.holds = false;
      c.detail = "t^" + std::to_string(n) + ": " + a.coefficient(n).to_string() + " vs " + b.coefficient(n).to_string();
      return c;
    }
  }
  c.detail = "agree through t^" + std::to_string(order);
  return c;
}

TruncatedSeries constant(std::size_t order, const QPoly& c) {
  TruncatedSeries s(order);
  s.set_coefficient(0, c);
  return s;
}

}  // namespace

IdentityCheck verify_lambda_recurrence(std::size_t order) {
  const TruncatedSeries lambda = lambda_series(order + 1);
  const QPoly q = QPoly::q();
  const TruncatedSeries lhs =
      derivative_t(lambda) * (exp_series(q * lambda) - q * exp_series(lambda)).truncated(order);
  return compare("lambda' (e^{q lambda} - q e^lambda) = 1 - q", order, lhs, constant(order, QPoly(1) - q));
}

IdentityCheck verify_eulerian_egf(std::size_t order) {
  const QPoly q = QPoly::q();
  const TruncatedSeries e = eulerian_series(order);
  const TruncatedSeries lhs = (q * e + constant(order, QPoly(1))) *
                              (constant(order, QPoly(1)) - q * exp_series(TruncatedSeries::t(order, QPoly(1) - q)));
  return compare("(q E + 1)(1 - q e^{t(1-q)}) = 1 - q", order, lhs, constant(order, QPoly(1) - q));
}

std::vector<IdentityCheck> verify_main_identity(std::size_t order) {
  const TruncatedSeries lambda = lambda_series(order + 1);
  const TruncatedSeries inner = lambda.truncated(order);
  const TruncatedSeries middle = derivative_t(exp_series(lambda)) - constant(order, QPoly(1));
  const TruncatedSeries l_of_lambda = compose_in_t(lec_series(order), inner);
  const TruncatedSeries e_of_lambda = compose_in_t(eulerian_series(order), inner);
  return {compare("L(q, lambda) = d/dt(e^lambda - 1) - 1", order, l_of_lambda, middle),
          compare("E(q, lambda) = d/dt(e^lambda - 1) - 1", order, e_of_lambda, middle)};
}

// ---------------------------------------------------------------------------
// Type-A arrangement

IntVector typea_root(std::size_t n, std::size_t i, std::size_t j) {
  if (n < 2 || i < 1 || j > n || i >= j) throw ValidationError("typea_root: need 1 <= i < j <= n");
  IntVector v(n - 1, 0);
  for (std::size_t k = i - 1; k + 1 < j; ++k) v[k] = 1;
  return v;
}

std::vector<Layer> typea_toric_arrangement(std::size_t n) {
  std::vector<Layer> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      out.emplace_back(IntegerMatrix::from_rows({typea_root(n, i, j)}, n - 1), std::vector<Rational>{0});
  return out;
}

Layer typea_layer(std::size_t n, const Word& subset) {
  require_distinct_positive(subset);
  Word s = subset;
  std::sort(s.begin(), s.end());
  if (s.size() < 2 || static_cast<std::size_t>(s.back()) > n)
    throw ValidationError("typea_layer: need a subset of 1..n with at least two elements");
  std::vector<IntVector> rows;
  for (std::size_t a = 0; a + 1 < s.size(); ++a)
    rows.push_back(typea_root(n, static_cast<std::size_t>(s[a]), static_cast<std::size_t>(s[a + 1])));
  return Layer(IntegerMatrix::from_rows(rows, n - 1), std::vector<Rational>(rows.size(), 0));
}

BuildingSet typea_minimal_building_set(std::size_t n) {
  if (n < 2 || n > 8) throw ValidationError("typea_minimal_building_set: n must lie in 2..8");
  std::vector<Word> subsets;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Word s;
    for (std::size_t a = 0; a < n; ++a)
      if ((mask >> a) & 1U) s.push_back(static_cast<int>(a + 1));
    if (s.size() >= 2) subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  LayerPoset poset = poset_of_layers(typea_toric_arrangement(n), n - 1);
  std::vector<std::size_t> members;
  for (const Word& s : subsets) members.push_back(poset.require_index(typea_layer(n, s)));
  return BuildingSet(std::move(poset), std::move(members));
}

}  // namespace toric
