#include "hypcox/coxdiagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace hypcox {

NotCoxeterError::NotCoxeterError(int i, int j, const std::string& detail)
    : DiagramError("not a Coxeter system at pair (" + std::to_string(i) + ", " + std::to_string(j) +
                   "): " + detail),
      first(i),
      second(j) {}

int BondLabel::code() const {
  switch (kind) {
    case Kind::Finite: return m;
    case Kind::Parallel: return 1000;
    case Kind::Ultraparallel: return 1001;
  }
  return -1;
}

std::string BondLabel::to_string() const {
  switch (kind) {
    case Kind::Finite: return std::to_string(m);
    case Kind::Parallel: return "par";
    case Kind::Ultraparallel: return "ultra";
  }
  return "?";
}

std::string BondLabel::table_token() const {
  switch (kind) {
    case Kind::Finite: return std::to_string(m);
    case Kind::Parallel: return "p";
    case Kind::Ultraparallel: return "u";
  }
  return "?";
}

BondLabel BondLabel::parse(const std::string& token) {
  if (token == "par" || token == "p") return parallel();
  if (token == "ultra" || token == "u") return ultraparallel();
  std::size_t used = 0;
  int m = 0;
  try {
    m = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw DiagramError("bad bond label '" + token + "'");
  }
  if (used != token.size() || m < 2) throw DiagramError("bad bond label '" + token + "'");
  return finite(m);
}

CoxDiagram::CoxDiagram(std::vector<std::string> names)
    : names_(std::move(names)), labels_(names_.size() * names_.size(), BondLabel::orthogonal()) {}

CoxDiagram::CoxDiagram(int n) : CoxDiagram([n] {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  return v;
}()) {}

std::optional<int> CoxDiagram::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  }
  return std::nullopt;
}

void CoxDiagram::set_label(int i, int j, BondLabel label) {
  if (i == j) throw DiagramError("self-bond at node " + std::to_string(i));
  if (i < 0 || j < 0 || i >= size() || j >= size()) throw DiagramError("node index out of range");
  if (label.kind == BondLabel::Kind::Finite && label.m < 2) throw DiagramError("bond label below 2");
  labels_[static_cast<std::size_t>(i * size() + j)] = label;
  labels_[static_cast<std::size_t>(j * size() + i)] = label;
}

std::vector<int> CoxDiagram::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j) {
    if (j != i && label(i, j).joined()) out.push_back(j);
  }
  return out;
}

CoxDiagram CoxDiagram::induced(const std::vector<int>& nodes) const {
  std::vector<std::string> sub_names;
  for (int v : nodes) sub_names.push_back(name(v));
  CoxDiagram sub(std::move(sub_names));
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      sub.set_label(static_cast<int>(a), static_cast<int>(b), label(nodes[a], nodes[b]));
    }
  }
  return sub;
}

std::vector<std::vector<int>> CoxDiagram::components() const {
  std::vector<int> comp(static_cast<std::size_t>(size()), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < size(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack = {s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int w : neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

int CoxDiagram::count_joined_pairs() const {
  int count = 0;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) count += label(i, j).joined() ? 1 : 0;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Angles

std::vector<int> supported_orders(long d) {
  std::vector<int> orders = {2, 3, 4, 6};
  if (d == 2) orders.push_back(8);
  if (d == 3) orders.push_back(12);
  if (d == 5) {
    orders.push_back(5);
    orders.push_back(10);
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

FieldScalar supported_cos2(int m, long d) {
  const auto is = [&](long want) { return d == want; };
  switch (m) {
    case 2: return FieldScalar();
    case 3: return FieldScalar::rational(1, 4);
    case 4: return FieldScalar::rational(1, 2);
    case 6: return FieldScalar::rational(3, 4);
    case 8:
      if (is(2)) return FieldScalar(mpz_class(2), mpz_class(1), mpz_class(4), 2);
      break;
    case 12:
      if (is(3)) return FieldScalar(mpz_class(2), mpz_class(1), mpz_class(4), 3);
      break;
    case 5:
      if (is(5)) return FieldScalar(mpz_class(3), mpz_class(1), mpz_class(8), 5);
      break;
    case 10:
      if (is(5)) return FieldScalar(mpz_class(5), mpz_class(1), mpz_class(8), 5);
      break;
    default: break;
  }
  throw DiagramError("cos^2(pi/" + std::to_string(m) + ") is not in Q(sqrt " + std::to_string(d) + ")");
}

BondLabel bond_from_gram(const FieldScalar& gii, const FieldScalar& gjj, const FieldScalar& gij, long d,
                         int i, int j) {
  const int s = gij.sign();
  if (s > 0) throw NotCoxeterError(i, j, "positive inner product " + gij.to_string());
  if (s == 0) return BondLabel::orthogonal();
  const FieldScalar q = gij * gij / (gii * gjj);
  const FieldScalar one(1);
  if (q == one) return BondLabel::parallel();
  if (q > one) return BondLabel::ultraparallel();
  for (int m : supported_orders(d)) {
    if (m > 2 && q == supported_cos2(m, d)) return BondLabel::finite(m);
  }
  throw NotCoxeterError(i, j, "cos^2 of the angle is " + q.to_string());
}

CoxDiagram diagram_from_gram(const QSpace& space, const Matrix& g, std::vector<std::string> names) {
  const int n = static_cast<int>(g.rows());
  if (g.cols() != g.rows()) throw DiagramError("Gram matrix is not square");
  CoxDiagram diagram = names.empty() ? CoxDiagram(n) : CoxDiagram(std::move(names));
  if (diagram.size() != n) throw DiagramError("name count does not match Gram matrix");
  long d = space.field();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (g(i, i).sign() <= 0) throw DiagramError("root " + std::to_string(i + 1) + " has nonpositive norm");
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (d == 0 && !g(i, j).is_rational()) d = g(i, j).d();
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      diagram.set_label(i, j, bond_from_gram(g(ui, ui), g(uj, uj), g(ui, uj), d, i, j));
    }
  }
  return diagram;
}

// ---------------------------------------------------------------------------
// Classification

bool ComponentType::spherical() const {
  switch (family) {
    case Family::A: case Family::B: case Family::D: case Family::E:
    case Family::F: case Family::H: case Family::I2:
      return true;
    default:
      return false;
  }
}

bool ComponentType::affine() const { return family != Family::Other && !spherical(); }

std::string ComponentType::to_string() const {
  static const char* letters[] = {"A", "B", "D", "E", "F", "H", "I2",
                                  "~A", "~B", "~C", "~D", "~E", "~F", "~G", "Other"};
  const auto idx = static_cast<std::size_t>(family);
  if (family == Family::Other) return "Other";
  if (family == Family::I2) return "I2(" + std::to_string(m) + ")";
  return std::string(letters[idx]) + std::to_string(rank);
}

bool DiagramType::spherical() const {
  return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.spherical(); });
}

bool DiagramType::has_affine_component() const {
  return std::any_of(components.begin(), components.end(), [](const auto& c) { return c.affine(); });
}

std::string DiagramType::to_string() const {
  std::string out;
  for (const auto& c : components) out += c.to_string();
  return out.empty() ? "empty" : out;
}

const ComponentType* DiagramType::component_of(int node) const {
  for (const auto& c : components) {
    if (std::find(c.nodes.begin(), c.nodes.end(), node) != c.nodes.end()) return &c;
  }
  return nullptr;
}

namespace {

struct Shape {
  const CoxDiagram& g;
  const std::vector<int>& nodes;
  std::vector<std::vector<int>> adj;  // local indices
  std::vector<std::vector<int>> mark;  // local label matrix (codes)

  Shape(const CoxDiagram& diagram, const std::vector<int>& ns) : g(diagram), nodes(ns) {
    const std::size_t k = ns.size();
    adj.resize(k);
    mark.assign(k, std::vector<int>(k, 2));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (a == b) continue;
        const BondLabel& l = diagram.label(ns[a], ns[b]);
        mark[a][b] = l.code();
        if (l.joined()) adj[a].push_back(static_cast<int>(b));
      }
    }
  }
  int size() const { return static_cast<int>(adj.size()); }
  int deg(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
  int m(int a, int b) const { return mark[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

  // Walks from `from` away from `prev` along a chain of degree-2 nodes and
  // returns the visited nodes (starting with `from`).
  std::vector<int> arm(int prev, int from) const {
    std::vector<int> out = {from};
    int p = prev, c = from;
    while (deg(c) == 2) {
      const auto& nb = adj[static_cast<std::size_t>(c)];
      const int nx = nb[0] == p ? nb[1] : nb[0];
      p = c;
      c = nx;
      out.push_back(c);
    }
    return out;
  }

  // Nodes of a path component in order.
  std::vector<int> path_order() const {
    int start = 0;
    for (int v = 0; v < size(); ++v) {
      if (deg(v) <= 1) {
        start = v;
        break;
      }
    }
    if (size() == 1) return {start};
    auto order = arm(start, adj[static_cast<std::size_t>(start)][0]);
    order.insert(order.begin(), start);
    return order;
  }
};

ComponentType make(Family f, int rank, const std::vector<int>& nodes, int m = 0) {
  ComponentType t;
  t.family = f;
  t.rank = rank;
  t.m = m;
  t.nodes = nodes;
  return t;
}

ComponentType classify_path(const Shape& s, const std::vector<int>& nodes) {
  const int k = s.size();
  const auto order = s.path_order();
  std::vector<int> edge;  // labels along the path
  for (int i = 0; i + 1 < k; ++i) edge.push_back(s.m(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i) + 1]));
  std::vector<int> big;
  for (int i = 0; i < static_cast<int>(edge.size()); ++i) {
    if (edge[static_cast<std::size_t>(i)] != 3) big.push_back(i);
  }
  const int last = k - 2;
  if (k == 1) return make(Family::A, 1, nodes);
  if (k == 2) {
    const int m = edge[0];
    if (m == 3) return make(Family::A, 2, nodes);
    if (m == 4) return make(Family::B, 2, nodes);
    return make(Family::I2, 2, nodes, m);
  }
  if (big.empty()) return make(Family::A, k, nodes);
  if (big.size() == 1) {
    const int pos = big[0];
    const int m = edge[static_cast<std::size_t>(pos)];
    const bool at_end = pos == 0 || pos == last;
    if (m == 4 && at_end) return make(Family::B, k, nodes);
    if (m == 4 && k == 4) return make(Family::F, 4, nodes);
    if (m == 4 && k == 5 && (pos == 1 || pos == 2)) return make(Family::AffineF, 4, nodes);
    if (m == 5 && at_end && k <= 4) return make(Family::H, k, nodes);
    if (m == 6 && at_end && k == 3) return make(Family::AffineG, 2, nodes);
    return make(Family::Other, 0, nodes);
  }
  if (big.size() == 2 && big[0] == 0 && big[1] == last && edge.front() == 4 && edge.back() == 4) {
    return make(Family::AffineC, k - 1, nodes);
  }
  return make(Family::Other, 0, nodes);
}

ComponentType classify_tree(const Shape& s, const std::vector<int>& nodes) {
  const int k = s.size();
  std::vector<int> branch;
  int max_deg = 0;
  for (int v = 0; v < k; ++v) {
    max_deg = std::max(max_deg, s.deg(v));
    if (s.deg(v) >= 3) branch.push_back(v);
  }
  if (max_deg <= 2) return classify_path(s, nodes);

  std::vector<std::pair<int, int>> big;
  for (int a = 0; a < k; ++a) {
    for (int b : s.adj[static_cast<std::size_t>(a)]) {
      if (a < b && s.m(a, b) != 3) big.emplace_back(a, b);
    }
  }
  if (max_deg == 4) {
    if (k == 5 && big.empty()) return make(Family::AffineD, 4, nodes);
    return make(Family::Other, 0, nodes);
  }
  if (max_deg > 4) return make(Family::Other, 0, nodes);

  if (branch.size() == 1) {
    const int c = branch[0];
    std::vector<std::vector<int>> arms;
    for (int nb : s.adj[static_cast<std::size_t>(c)]) arms.push_back(s.arm(c, nb));
    std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    const auto a = arms[0].size(), b = arms[1].size(), l = arms[2].size();
    if (big.empty()) {
      if (a == 1 && b == 1) return make(Family::D, k, nodes);
      if (a == 1 && b == 2 && l >= 2 && l <= 4) return make(Family::E, k, nodes);
      if (a == 2 && b == 2 && l == 2) return make(Family::AffineE, 6, nodes);
      if (a == 1 && b == 3 && l == 3) return make(Family::AffineE, 7, nodes);
      if (a == 1 && b == 2 && l == 5) return make(Family::AffineE, 8, nodes);
      return make(Family::Other, 0, nodes);
    }
    if (big.size() == 1 && a == 1 && b == 1 && s.m(big[0].first, big[0].second) == 4) {
      // the 4 must sit on the last edge of an arm
      for (const auto& arm : arms) {
        const int tip = arm.back();
        const int before = arm.size() >= 2 ? arm[arm.size() - 2] : c;
        const bool hit = (big[0].first == tip && big[0].second == before) ||
                         (big[0].second == tip && big[0].first == before);
        if (hit && (&arm == &arms[2] || l == 1)) return make(Family::AffineB, k - 1, nodes);
      }
    }
    return make(Family::Other, 0, nodes);
  }
  if (branch.size() == 2 && big.empty()) {
    for (int c : branch) {
      int leaves = 0;
      for (int nb : s.adj[static_cast<std::size_t>(c)]) leaves += s.deg(nb) == 1 ? 1 : 0;
      if (leaves < 2) return make(Family::Other, 0, nodes);
    }
    return make(Family::AffineD, k - 1, nodes);
  }
  return make(Family::Other, 0, nodes);
}

}  // namespace

ComponentType classify_component(const CoxDiagram& diagram, const std::vector<int>& nodes) {
  const Shape s(diagram, nodes);
  const int k = s.size();
  int edges = 0;
  bool nonmeeting = false;
  bool ultra = false;
  for (int a = 0; a < k; ++a) {
    for (int b : s.adj[static_cast<std::size_t>(a)]) {
      if (a >= b) continue;
      ++edges;
      const auto& l = diagram.label(nodes[static_cast<std::size_t>(a)], nodes[static_cast<std::size_t>(b)]);
      if (!l.meets()) nonmeeting = true;
      if (l.kind == BondLabel::Kind::Ultraparallel) ultra = true;
    }
  }
  if (nonmeeting) {
    if (k == 2 && !ultra) return make(Family::AffineA, 1, nodes);
    return make(Family::Other, 0, nodes);
  }
  if (edges == k - 1) return classify_tree(s, nodes);
  if (edges == k && k >= 3) {
    for (int v = 0; v < k; ++v) {
      if (s.deg(v) != 2) return make(Family::Other, 0, nodes);
      for (int w : s.adj[static_cast<std::size_t>(v)]) {
        if (s.m(v, w) != 3) return make(Family::Other, 0, nodes);
      }
    }
    return make(Family::AffineA, k - 1, nodes);
  }
  return make(Family::Other, 0, nodes);
}

DiagramType classify(const CoxDiagram& diagram) {
  DiagramType t;
  for (const auto& comp : diagram.components()) t.components.push_back(classify_component(diagram, comp));
  return t;
}

bool is_spherical(const CoxDiagram& diagram, const std::vector<int>& nodes) {
  return classify(diagram.induced(nodes)).spherical();
}

// ---------------------------------------------------------------------------
// Subdiagram stream

SphericalSubdiagramStream::SphericalSubdiagramStream(CoxDiagram diagram, Filter filter)
    : diagram_(std::move(diagram)), filter_(std::move(filter)) {}

std::optional<std::vector<int>> SphericalSubdiagramStream::next() {
  const auto accept = [&](const std::vector<int>& nodes) {
    return !filter_ || filter_(classify(diagram_.induced(nodes)));
  };
  if (!started_) {
    started_ = true;
    stack_.push_back({{}, 0});
    if (accept({})) return std::vector<int>{};
  }
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.next_candidate >= diagram_.size()) {
      stack_.pop_back();
      continue;
    }
    const int c = top.next_candidate++;
    std::vector<int> nodes = top.nodes;
    nodes.push_back(c);
    if (!is_spherical(diagram_, nodes)) continue;
    stack_.push_back({nodes, c + 1});
    if (accept(nodes)) return nodes;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Ears and tails

EarsTails ears_tails(const CoxDiagram& diagram, const std::vector<int>& component) {
  const ComponentType t = classify_component(diagram, component);
  if (t.family != Family::D && t.family != Family::E) {
    throw DiagramError("ears and tails need a D or E component, got " + t.to_string());
  }
  const Shape s(diagram, component);
  int c = -1;
  for (int v = 0; v < s.size(); ++v) {
    if (s.deg(v) == 3) c = v;
  }
  std::vector<std::vector<int>> arms;
  for (int nb : s.adj[static_cast<std::size_t>(c)]) arms.push_back(s.arm(c, nb));
  std::stable_sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  const std::size_t longest = arms.back().size();
  EarsTails out;
  for (const auto& arm : arms) {
    const int tip = component[static_cast<std::size_t>(arm.back())];
    if (arm.size() == 1) out.ears.push_back(tip);
    if (arm.size() == longest) out.tails.push_back(tip);
  }
  std::sort(out.ears.begin(), out.ears.end());
  std::sort(out.tails.begin(), out.tails.end());
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

class Matcher {
 public:
  Matcher(const CoxDiagram& a, const CoxDiagram& b) : a_(a), b_(b), n_(a.size()) {
    for (int side = 0; side < 2; ++side) {
      const CoxDiagram& g = side == 0 ? a_ : b_;
      for (int v = 0; v < n_; ++v) {
        std::vector<std::pair<int, int>> nb;
        for (int w = 0; w < n_; ++w) {
          if (w != v && g.label(v, w).joined()) nb.emplace_back(w + side * n_, g.label(v, w).code());
        }
        adj_.push_back(std::move(nb));
      }
    }
  }

  // Calls `leaf` with each isomorphism until it returns false.
  template <typename Leaf>
  void run(Leaf&& leaf) {
    std::vector<int> colors(static_cast<std::size_t>(2 * n_), 0);
    if (refine(colors)) search(colors, leaf);
  }

 private:
  // Returns false when the two sides became unbalanced.
  bool refine(std::vector<int>& colors) const {
    std::size_t classes = 0;
    while (true) {
      std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> ids;
      std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(colors.size());
      for (std::size_t v = 0; v < colors.size(); ++v) {
        std::vector<std::pair<int, int>> s;
        for (const auto& [w, code] : adj_[v]) s.emplace_back(code, colors[static_cast<std::size_t>(w)]);
        std::sort(s.begin(), s.end());
        sig[v] = {colors[v], std::move(s)};
        ids.emplace(sig[v], 0);
      }
      int next = 0;
      for (auto& [k, id] : ids) id = next++;
      for (std::size_t v = 0; v < colors.size(); ++v) colors[v] = ids[sig[v]];
      if (ids.size() == classes) break;
      classes = ids.size();
    }
    std::vector<int> balance(colors.size(), 0);
    for (int v = 0; v < 2 * n_; ++v) balance[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] += v < n_ ? 1 : -1;
    return std::all_of(balance.begin(), balance.end(), [](int x) { return x == 0; });
  }

  template <typename Leaf>
  bool search(std::vector<int>& colors, Leaf& leaf) {
    std::vector<int> count(colors.size(), 0);
    for (int v = 0; v < n_; ++v) ++count[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
    int pick = -1;
    for (int v = 0; v < n_; ++v) {
      const int c = count[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
      if (c > 1 && (pick < 0 || c < count[static_cast<std::size_t>(colors[static_cast<std::size_t>(pick)])])) pick = v;
    }
    if (pick < 0) {
      std::vector<int> image(static_cast<std::size_t>(n_), -1);
      std::vector<int> by_color(colors.size(), -1);
      for (int w = n_; w < 2 * n_; ++w) by_color[static_cast<std::size_t>(colors[static_cast<std::size_t>(w)])] = w - n_;
      for (int v = 0; v < n_; ++v) image[static_cast<std::size_t>(v)] = by_color[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
      for (int v = 0; v < n_; ++v) {
        for (int u = v + 1; u < n_; ++u) {
          if (!(a_.label(v, u) == b_.label(image[static_cast<std::size_t>(v)], image[static_cast<std::size_t>(u)]))) return true;
        }
      }
      return leaf(image);
    }
    const int target = colors[static_cast<std::size_t>(pick)];
    const int fresh = static_cast<int>(colors.size());
    for (int w = n_; w < 2 * n_; ++w) {
      if (colors[static_cast<std::size_t>(w)] != target) continue;
      std::vector<int> trial = colors;
      trial[static_cast<std::size_t>(pick)] = fresh;
      trial[static_cast<std::size_t>(w)] = fresh;
      if (!refine(trial)) continue;
      if (!search(trial, leaf)) return false;
    }
    return true;
  }

  const CoxDiagram& a_;
  const CoxDiagram& b_;
  int n_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const CoxDiagram& d1, const CoxDiagram& d2) {
  if (d1.size() != d2.size()) return std::nullopt;
  if (d1.size() == 0) return std::vector<int>{};
  std::optional<std::vector<int>> found;
  Matcher(d1, d2).run([&](const std::vector<int>& image) {
    found = image;
    return false;
  });
  return found;
}

std::uint64_t count_automorphisms(const CoxDiagram& d, std::uint64_t limit) {
  if (d.size() == 0) return 1;
  std::uint64_t count = 0;
  Matcher(d, d).run([&](const std::vector<int>&) { return ++count < limit; });
  return count;
}

// ---------------------------------------------------------------------------
// Export

std::string export_dot(const CoxDiagram& diagram) {
  std::ostringstream os;
  os << "graph coxeter {\n  node [shape=circle, label=\"\", width=0.15];\n";
  for (int i = 0; i < diagram.size(); ++i) {
    os << "  n" << i << " [xlabel=\"" << diagram.name(i) << "\"];\n";
  }
  for (int i = 0; i < diagram.size(); ++i) {
    for (int j = i + 1; j < diagram.size(); ++j) {
      const BondLabel& l = diagram.label(i, j);
      if (!l.joined()) continue;
      os << "  n" << i << " -- n" << j;
      if (l.kind == BondLabel::Kind::Parallel) {
        os << " [penwidth=3]";
      } else if (l.kind == BondLabel::Kind::Ultraparallel) {
        os << " [style=dashed]";
      } else if (l.m > 3) {
        os << " [label=\"" << l.m << "\"]";
      }
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string bond_table(const CoxDiagram& diagram) {
  std::ostringstream os;
  for (int i = 0; i < diagram.size(); ++i) {
    for (int j = 0; j < diagram.size(); ++j) {
      if (j) os << ' ';
      os << (i == j ? "*" : diagram.label(i, j).table_token());
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace hypcox
