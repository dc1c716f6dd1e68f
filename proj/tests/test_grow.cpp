#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hypcox/catalog.hpp"
#include "hypcox/grow.hpp"

using namespace hypcox;

namespace {

std::set<std::string> rays(const Polyhedron& p) {
  std::set<std::string> out;
  for (const auto& r : p.roots()) {
    FieldScalar scale;
    for (const auto& x : r.coords) {
      if (!x.is_zero()) {
        scale = x.sign() > 0 ? x : -x;
        break;
      }
    }
    std::string key;
    for (const auto& x : r.coords) key += (x / scale).to_string() + ",";
    out.insert(key);
  }
  return out;
}

const Polyhedron& bugaenko() {
  static const Polyhedron p = bugaenko_h6();
  return p;
}

std::vector<int> walls(std::initializer_list<const char*> names) {
  std::vector<int> out;
  for (const char* n : names) out.push_back(bugaenko().wall(n));
  return out;
}

// Labeled trees on k vertices with all degrees <= 3, from Pruefer sequences,
// reduced to classes by trying every relabeling.
std::uint64_t skeleton_classes(int k) {
  if (k <= 2) return 1;
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::set<std::vector<std::pair<int, int>>> classes;
  std::vector<int> seq(static_cast<std::size_t>(k - 2), 0);
  while (true) {
    std::vector<int> deg(static_cast<std::size_t>(k), 1);
    for (int x : seq) ++deg[static_cast<std::size_t>(x)];
    if (*std::max_element(deg.begin(), deg.end()) <= 3) {
      std::vector<std::pair<int, int>> edges;
      for (int x : seq) {
        int leaf = 0;
        while (deg[static_cast<std::size_t>(leaf)] != 1) ++leaf;
        edges.emplace_back(leaf, x);
        --deg[static_cast<std::size_t>(leaf)];
        --deg[static_cast<std::size_t>(x)];
      }
      int u = -1, v = -1;
      for (int i = 0; i < k; ++i) {
        if (deg[static_cast<std::size_t>(i)] == 1) (u < 0 ? u : v) = i;
      }
      edges.emplace_back(u, v);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<std::pair<int, int>> best;
      do {
        std::vector<std::pair<int, int>> image;
        for (auto [a, b] : edges) {
          const int pa = perm[static_cast<std::size_t>(a)], pb = perm[static_cast<std::size_t>(b)];
          image.emplace_back(std::min(pa, pb), std::max(pa, pb));
        }
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best) best = image;
      } while (std::next_permutation(perm.begin(), perm.end()));
      classes.insert(best);
    }
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == k) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return classes.size();
}

int tree_distance(const AbstractTree& t, int a, int b) {
  std::vector<int> dist(static_cast<std::size_t>(t.size()), -1);
  std::vector<int> queue = {a};
  dist[static_cast<std::size_t>(a)] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int v : t.neighbors(queue[i])) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(queue[i])] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist[static_cast<std::size_t>(b)];
}

}  // namespace

TEST_CASE("doubling trees validate words") {
  DoublingTree t;
  t.k = 3;
  const int a = t.add(0, 1);
  const int b = t.add(a, 2);
  CHECK(t.word(b) == std::vector<int>{1, 2});
  CHECK_NOTHROW(t.validate());
  t.add(b, 2);
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
  DoublingTree dup;
  dup.add(0, 0);
  dup.add(0, 0);
  CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
  CHECK(DoublingTree::alternating_path(2, 5).word(4) == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("single vertex and one edge") {
  const auto& p = bugaenko();
  const auto w = walls({"9", "19"});
  const auto one = tree_double(p, w, DoublingTree::single());
  CHECK(one.copies == 1);
  CHECK(rays(one.polyhedron) == rays(p));
  CHECK(one.polyhedron.names() == p.names());

  for (int g = 0; g < 2; ++g) {
    DoublingTree t;
    t.add(0, g);
    const auto two = tree_double(p, w, t);
    const auto d = double_across(p, w[static_cast<std::size_t>(g)]);
    CHECK(rays(two.polyhedron) == rays(d));
    CHECK(two.polyhedron.size() == double_wall_count(p.diagram(), w[static_cast<std::size_t>(g)]));
  }
}

TEST_CASE("three-vertex path on Bugaenko's polyhedron") {
  const auto& p = bugaenko();
  const auto w = walls({"9", "19"});
  const auto three = tree_double(p, w, DoublingTree::alternating_path(2, 3));
  CHECK(three.copies == 3);
  CHECK(three.raw_roots == 3 * p.size());
  const int expected = double_wall_count(p.diagram(), w[0]) + double_wall_count(p.diagram(), w[1]) - p.size();
  CHECK(three.polyhedron.size() == expected);
  CHECK(three.polyhedron.wall("19") >= 0);
  CHECK_THROWS_AS(three.polyhedron.wall("9"), PolyhedronError);
  CHECK_THROWS_AS(three.polyhedron.wall("[9]19"), PolyhedronError);

  // Doubling the double across the mirror of 19 adds the fourth copy.
  const auto d = double_across(p, w[0]);
  const auto dd = double_across(d, d.wall("[9]19"));
  const auto four = tree_double(p, w, DoublingTree::alternating_path(2, 4));
  CHECK(rays(four.polyhedron) == rays(dd));
  const auto r3 = rays(three.polyhedron);
  CHECK(r3.size() == static_cast<std::size_t>(expected));
}

TEST_CASE("index five subgroup") {
  const auto& p = bugaenko();
  const auto r = index_subgroup(p, walls({"9", "19", "25"}), 5);
  CHECK(r.copies == 5);
  CHECK(r.raw_roots == 5 * p.size());
  CHECK(r.polyhedron.size() > p.size());
  CHECK(rays(index_subgroup(p, walls({"9", "19"}), 1).polyhedron) == rays(p));
  CHECK(rays(index_subgroup(p, walls({"9", "19"}), 2).polyhedron) == rays(double_across(p, p.wall("9"))));
  CHECK_THROWS_AS(index_subgroup(p, walls({"9", "19"}), 0), std::invalid_argument);
  CHECK_THROWS_AS(index_subgroup(p, walls({"9"}), 3), std::invalid_argument);
}

TEST_CASE("tree doubling errors") {
  const auto& p = bugaenko();
  CHECK_THROWS_AS(tree_double(p, walls({"9", "19"}), DoublingTree::alternating_path(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(tree_double(p, walls({"9", "7"}), DoublingTree::alternating_path(2, 2)), PolyhedronError);
  CHECK_THROWS_AS(tree_double(p, walls({"9", "9"}), DoublingTree::alternating_path(2, 2)), PolyhedronError);
  TreeDoubleOptions small;
  small.max_walls = 100;
  CHECK_THROWS_AS(tree_double(p, walls({"9", "19"}), DoublingTree::alternating_path(2, 3), small), PolyhedronError);
}

TEST_CASE("concurrent tree doubling matches serial") {
  const auto& p = bugaenko();
  const auto w = walls({"9", "19", "25"});
  const auto family = branch_spaced_subtrees(3, 5, 1);
  const auto all = tree_double_all(p, w, family);
  REQUIRE(all.size() == family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    CHECK(rays(all[i].polyhedron) == rays(tree_double(p, w, family[i]).polyhedron));
  }
}

TEST_CASE("canonical forms") {
  const auto a = AbstractTree::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
  const auto b = AbstractTree::from_edges(5, {{4, 3}, {3, 2}, {2, 1}, {3, 0}});
  const auto path = AbstractTree::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(a.canonical() == b.canonical());
  CHECK(a.canonical() != path.canonical());
  CHECK_FALSE(AbstractTree::from_edges(3, {{0, 1}}).is_tree());
  CHECK_THROWS_AS(AbstractTree::from_edges(3, {{0, 1}}).canonical(), std::invalid_argument);
  CHECK_THROWS_AS(AbstractTree(2).add_edge(0, 0), std::invalid_argument);
}

TEST_CASE("trivalent tree counts against a brute-force oracle") {
  const auto counts = count_trivalent_trees(15);
  REQUIRE(counts.size() == 15);
  CHECK(counts[0] == 1);
  CHECK(counts[2] == 1);
  for (int e = 2; e <= 15; e += 2) CHECK(counts[static_cast<std::size_t>(e - 1)] == 0);
  // A trivalent tree with 2k + 1 edges is fixed by its k internal vertices,
  // which form a tree of maximum degree 3.
  for (int k = 1; k <= 7; ++k) {
    CAPTURE(k);
    CHECK(counts[static_cast<std::size_t>(2 * k)] == skeleton_classes(k));
  }
  for (int e = 1; e <= 15; e += 2) {
    for (const auto& t : trivalent_trees(e)) {
      CHECK(t.is_tree());
      CHECK(t.edge_count() == e);
      for (int v = 0; v < t.size(); ++v) {
        const auto deg = t.neighbors(v).size();
        CHECK((deg == 1 || deg == 3));
      }
    }
  }
  CHECK_THROWS_AS(count_trivalent_trees(0), std::invalid_argument);
}

TEST_CASE("cumulative counts grow") {
  const auto counts = count_trivalent_trees(15);
  std::vector<std::uint64_t> cumulative;
  std::uint64_t total = 0;
  for (std::size_t e = 0; e < counts.size(); e += 2) cumulative.push_back(total += counts[e]);
  CHECK(cumulative == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 12, 18});
  for (std::size_t i = cumulative.size() - 5; i < cumulative.size(); ++i) {
    CHECK(static_cast<double>(cumulative[i]) / static_cast<double>(cumulative[i - 1]) >= 1.3);
  }
}

TEST_CASE("branch-spaced families") {
  for (int vertices = 1; vertices <= 40; ++vertices) {
    CAPTURE(vertices);
    const auto family = branch_spaced_subtrees(3, vertices, 3);
    CHECK(family.size() == branch_spaced_count(vertices, 3));
    std::set<std::string> forms;
    for (const auto& d : family) {
      CHECK_NOTHROW(d.validate());
      CHECK(d.size() == vertices);
      const auto t = AbstractTree::from(d);
      forms.insert(t.canonical());
      std::vector<int> branch;
      for (int v = 0; v < t.size(); ++v) {
        CHECK(t.neighbors(v).size() <= 3);
        if (t.neighbors(v).size() == 3) branch.push_back(v);
      }
      for (std::size_t i = 0; i < branch.size(); ++i) {
        for (std::size_t j = i + 1; j < branch.size(); ++j) CHECK(tree_distance(t, branch[i], branch[j]) >= 3);
      }
    }
    CHECK(forms.size() == family.size());
  }
  CHECK(branch_spaced_subtrees(3, 4, 3).size() == 1);
  CHECK(branch_spaced_count(13, 3) >= trivalent_trees(3).size());
  CHECK(branch_spaced_count(40, 3) == 12);
  CHECK_THROWS_AS(branch_spaced_subtrees(2, 10, 3), std::invalid_argument);
  CHECK_THROWS_AS(branch_spaced_subtrees(3, 10, 0), std::invalid_argument);
}

TEST_CASE("non-isomorphic trees give non-isomorphic diagrams") {
  const auto& p = bugaenko();
  const auto family = branch_spaced_subtrees(3, 5, 1);
  REQUIRE(family.size() == 2);
  const auto out = tree_double_all(p, walls({"9", "19", "25"}), family);
  for (const auto& r : out) CHECK(r.copies == 5);
  CHECK_FALSE(is_isomorphic(out[0].polyhedron.diagram(), out[1].polyhedron.diagram()).has_value());
}
