#include "hypcox/grow.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <queue>
#include <set>
#include <stdexcept>

namespace hypcox {

int DoublingTree::add(int parent_vertex, int g) {
  parent.push_back(parent_vertex);
  gen.push_back(g);
  return size() - 1;
}

std::vector<int> DoublingTree::word(int v) const {
  std::vector<int> w;
  for (; v > 0; v = parent[static_cast<std::size_t>(v)]) w.push_back(gen[static_cast<std::size_t>(v)]);
  std::reverse(w.begin(), w.end());
  return w;
}

void DoublingTree::validate() const {
  if (k < 1) throw std::invalid_argument("doubling tree needs at least one generator");
  if (parent.empty() || parent.size() != gen.size() || parent[0] != -1) {
    throw std::invalid_argument("doubling tree must start at the identity vertex");
  }
  std::set<std::pair<int, int>> children;
  for (int v = 1; v < size(); ++v) {
    const int p = parent[static_cast<std::size_t>(v)];
    const int g = gen[static_cast<std::size_t>(v)];
    if (p < 0 || p >= v) throw std::invalid_argument("parents must precede their children");
    if (g < 0 || g >= k) throw std::invalid_argument("generator out of range");
    if (p > 0 && gen[static_cast<std::size_t>(p)] == g) throw std::invalid_argument("word is not reduced");
    if (!children.insert({p, g}).second) throw std::invalid_argument("repeated vertex");
  }
}

DoublingTree DoublingTree::single() { return {}; }

DoublingTree DoublingTree::alternating_path(int k, int vertices) {
  if (vertices < 1) throw std::invalid_argument("a tree needs at least one vertex");
  DoublingTree t;
  t.k = k;
  for (int v = 1; v < vertices; ++v) t.add(v - 1, (v - 1) % 2);
  return t;
}

namespace {

// The ray of v: v scaled by 1/|first nonzero coordinate|, as text.
std::string ray_key(const QVector& v) {
  FieldScalar scale;
  for (const auto& x : v.coords) {
    if (!x.is_zero()) {
      scale = x.sign() > 0 ? x : -x;
      break;
    }
  }
  std::string key;
  for (const auto& x : v.coords) key += (x / scale).to_string() + ",";
  return key;
}

}  // namespace

TreeDoubleResult tree_double(const Polyhedron& p, const std::vector<int>& walls, const DoublingTree& t,
                             const TreeDoubleOptions& options) {
  t.validate();
  if (static_cast<int>(walls.size()) != t.k) {
    throw std::invalid_argument("tree has " + std::to_string(t.k) + " generators but " +
                                std::to_string(walls.size()) + " walls were given");
  }
  for (int w : walls) {
    if (w < 0 || w >= p.size()) throw PolyhedronError("wall index out of range");
  }
  if (!pairwise_disjoint_doubling(p.diagram(), walls)) {
    throw PolyhedronError("walls must be pairwise non-meeting doubling walls");
  }
  const int n = p.size();
  const long raw = static_cast<long>(n) * t.size();
  if (raw > options.max_walls) {
    throw PolyhedronError("tree doubling would produce " + std::to_string(raw) + " roots, over the budget of " +
                          std::to_string(options.max_walls));
  }

  std::vector<std::vector<QVector>> roots(static_cast<std::size_t>(t.size()));
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(t.size()));
  std::vector<std::vector<bool>> interior(static_cast<std::size_t>(t.size()), std::vector<bool>(static_cast<std::size_t>(n)));
  roots[0] = p.roots();
  names[0] = p.names();
  for (int v = 1; v < t.size(); ++v) {
    const auto uv = static_cast<std::size_t>(v);
    const auto up = static_cast<std::size_t>(t.parent[uv]);
    const auto w = static_cast<std::size_t>(walls[static_cast<std::size_t>(t.gen[uv])]);
    const QVector& mirror = roots[up][w];
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      roots[uv].push_back(clear_denominators(reflect(p.space(), mirror, roots[up][i])));
      names[uv].push_back(mirror_name(names[up][w], names[up][i]));
    }
    interior[up][w] = true;
    interior[uv][w] = true;
  }

  std::vector<QVector> out_roots;
  std::vector<std::string> out_names;
  std::set<std::string> seen;
  for (std::size_t v = 0; v < roots.size(); ++v) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      if (interior[v][i]) continue;
      if (!seen.insert(ray_key(roots[v][i])).second) continue;
      out_roots.push_back(roots[v][i]);
      out_names.push_back(names[v][i]);
    }
  }
  TreeDoubleResult result;
  result.polyhedron = Polyhedron::build(p.space(), std::move(out_roots), std::move(out_names));
  result.copies = t.size();
  result.raw_roots = static_cast<int>(raw);
  return result;
}

std::vector<TreeDoubleResult> tree_double_all(const Polyhedron& p, const std::vector<int>& walls,
                                              const std::vector<DoublingTree>& trees,
                                              const TreeDoubleOptions& options) {
  std::vector<TreeDoubleResult> out(trees.size());
  std::exception_ptr error;
  std::mutex m;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < trees.size(); ++i) {
    try {
      out[i] = tree_double(p, walls, trees[i], options);
    } catch (...) {
      const std::lock_guard<std::mutex> lock(m);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

TreeDoubleResult index_subgroup(const Polyhedron& p, const std::vector<int>& walls, int index,
                                const TreeDoubleOptions& options) {
  if (index < 1) throw std::invalid_argument("index must be positive");
  if (walls.size() < 2) throw std::invalid_argument("index_subgroup needs two walls");
  const std::vector<int> two(walls.begin(), walls.begin() + 2);
  return tree_double(p, two, DoublingTree::alternating_path(2, index), options);
}

// ------------------------------------------------------------ abstract trees

AbstractTree::AbstractTree(int vertices) : adj_(static_cast<std::size_t>(vertices)) {}

AbstractTree AbstractTree::from_edges(int vertices, const std::vector<std::pair<int, int>>& edges) {
  AbstractTree t(vertices);
  for (auto [u, v] : edges) t.add_edge(u, v);
  return t;
}

AbstractTree AbstractTree::from(const DoublingTree& d) {
  AbstractTree t(d.size());
  for (int v = 1; v < d.size(); ++v) t.add_edge(d.parent[static_cast<std::size_t>(v)], v);
  return t;
}

int AbstractTree::edge_count() const {
  std::size_t deg = 0;
  for (const auto& a : adj_) deg += a.size();
  return static_cast<int>(deg / 2);
}

void AbstractTree::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= size() || v >= size()) throw std::invalid_argument("bad tree edge");
  adj_[static_cast<std::size_t>(u)].push_back(v);
  adj_[static_cast<std::size_t>(v)].push_back(u);
}

std::vector<std::pair<int, int>> AbstractTree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool AbstractTree::is_tree() const {
  if (size() == 0 || edge_count() != size() - 1) return false;
  std::vector<bool> seen(adj_.size(), false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == size();
}

std::string AbstractTree::canonical() const {
  if (!is_tree()) throw std::invalid_argument("canonical form needs a tree");
  const int n = size();
  // Subtree sizes from vertex 0, then the centroids.
  std::vector<int> order, par(static_cast<std::size_t>(n), -1), sub(static_cast<std::size_t>(n), 1);
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int u = order[i];
    for (int v : neighbors(u)) {
      if (v != par[static_cast<std::size_t>(u)]) {
        par[static_cast<std::size_t>(v)] = u;
        order.push_back(v);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (par[static_cast<std::size_t>(*it)] >= 0) sub[static_cast<std::size_t>(par[static_cast<std::size_t>(*it)])] += sub[static_cast<std::size_t>(*it)];
  }
  std::vector<int> centroids;
  for (int u = 0; u < n; ++u) {
    int heaviest = n - sub[static_cast<std::size_t>(u)];
    for (int v : neighbors(u)) {
      if (v != par[static_cast<std::size_t>(u)]) heaviest = std::max(heaviest, sub[static_cast<std::size_t>(v)]);
    }
    if (2 * heaviest <= n) centroids.push_back(u);
  }
  std::function<std::string(int, int)> encode = [&](int u, int from) {
    std::vector<std::string> parts;
    for (int v : neighbors(u)) {
      if (v != from) parts.push_back(encode(v, u));
    }
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    return s + ")";
  };
  std::string best;
  for (int c : centroids) {
    std::string s = encode(c, -1);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

// ------------------------------------------------------------ trivalent trees

namespace {

std::map<int, std::vector<AbstractTree>>& tree_memo() {
  static std::map<int, std::vector<AbstractTree>> memo;
  return memo;
}

std::mutex& tree_memo_mutex() {
  static std::mutex m;
  return m;
}

std::vector<AbstractTree> build_trivalent(int edges) {
  if (edges < 1 || edges % 2 == 0) return {};
  if (edges == 1) return {AbstractTree::from_edges(2, {{0, 1}})};
  std::map<std::string, AbstractTree> classes;
  for (const auto& t : trivalent_trees(edges - 2)) {
    for (int leaf = 0; leaf < t.size(); ++leaf) {
      if (t.neighbors(leaf).size() != 1) continue;
      AbstractTree grown = AbstractTree::from_edges(t.size() + 2, t.edges());
      grown.add_edge(leaf, t.size());
      grown.add_edge(leaf, t.size() + 1);
      classes.emplace(grown.canonical(), grown);
    }
  }
  std::vector<AbstractTree> out;
  for (auto& [key, tree] : classes) out.push_back(std::move(tree));
  return out;
}

}  // namespace

std::vector<AbstractTree> trivalent_trees(int edges) {
  {
    const std::lock_guard<std::mutex> lock(tree_memo_mutex());
    if (auto it = tree_memo().find(edges); it != tree_memo().end()) return it->second;
  }
  auto trees = build_trivalent(edges);
  const std::lock_guard<std::mutex> lock(tree_memo_mutex());
  tree_memo().emplace(edges, trees);
  return trees;
}

std::vector<std::uint64_t> count_trivalent_trees(int max_edges) {
  if (max_edges < 1) throw std::invalid_argument("max_edges must be at least 1");
  std::vector<std::uint64_t> out;
  for (int e = 1; e <= max_edges; ++e) out.push_back(trivalent_trees(e).size());
  return out;
}

namespace {

DoublingTree embed(const AbstractTree& t, int k) {
  DoublingTree d;
  d.k = k;
  std::vector<int> index(static_cast<std::size_t>(t.size()), -1);
  index[0] = 0;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    const int dv = index[static_cast<std::size_t>(u)];
    const int incoming = d.gen[static_cast<std::size_t>(dv)];
    int g = 0;
    for (int v : t.neighbors(u)) {
      if (index[static_cast<std::size_t>(v)] >= 0) continue;
      if (g == incoming) ++g;
      if (g >= k) throw std::invalid_argument("tree degree exceeds the number of generators");
      index[static_cast<std::size_t>(v)] = d.add(dv, g++);
      q.push(v);
    }
  }
  return d;
}

}  // namespace

std::vector<DoublingTree> branch_spaced_subtrees(int k, int vertices, int spacing) {
  if (k < 3) throw std::invalid_argument("branch-spaced subtrees need k >= 3");
  if (spacing < 1) throw std::invalid_argument("spacing must be at least 1");
  if (vertices < 1) throw std::invalid_argument("a tree needs at least one vertex");
  const int max_edges = (vertices - 1) / spacing;
  std::vector<DoublingTree> out;
  for (int e = 1; e <= max_edges; e += 2) {
    for (const auto& t : trivalent_trees(e)) {
      AbstractTree s(1 + e * spacing);
      int next = t.size();
      for (auto [u, v] : t.edges()) {
        int prev = u;
        for (int step = 1; step < spacing; ++step) {
          s.add_edge(prev, next);
          prev = next++;
        }
        s.add_edge(prev, v);
      }
      int leaf = 0;
      while (s.neighbors(leaf).size() != 1) ++leaf;
      AbstractTree padded = AbstractTree::from_edges(vertices, s.edges());
      for (int v = s.size(); v < vertices; ++v) {
        padded.add_edge(leaf, v);
        leaf = v;
      }
      out.push_back(embed(padded, k));
    }
  }
  if (out.empty()) out.push_back(DoublingTree::alternating_path(k, vertices));
  return out;
}

std::uint64_t branch_spaced_count(int vertices, int spacing) {
  if (spacing < 1 || vertices < 1) throw std::invalid_argument("vertices and spacing must be positive");
  std::uint64_t total = 0;
  for (int e = 1; e <= (vertices - 1) / spacing; ++e) total += trivalent_trees(e).size();
  return std::max<std::uint64_t>(total, 1);
}

}  // namespace hypcox
