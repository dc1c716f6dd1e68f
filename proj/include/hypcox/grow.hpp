// Unions of copies of a polyhedron along subtrees of the Cayley tree of the
// reflections in pairwise disjoint doubling walls, and trivalent tree counts.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypcox/polyhedron.hpp"

namespace hypcox {

/// A finite subtree of the Cayley graph of the free product of k groups of
/// order 2. Vertex 0 is the identity; every other vertex v is parent[v] times
/// generator gen[v], and consecutive generators along a path differ.
struct DoublingTree {
  int k = 2;
  std::vector<int> parent = {-1};
  std::vector<int> gen = {-1};

  int size() const { return static_cast<int>(parent.size()); }
  /// Appends the vertex parent * g and returns its index.
  int add(int parent_vertex, int g);
  /// Generators of the reduced word of v, from the identity outwards.
  std::vector<int> word(int v) const;
  /// Throws std::invalid_argument when the data do not describe a subtree.
  void validate() const;

  static DoublingTree single();
  /// e, s0, s0 s1, s0 s1 s0, ...: a path with I vertices alternating two generators.
  static DoublingTree alternating_path(int k, int vertices);
};

struct TreeDoubleOptions {
  int max_walls = 4096;
};

struct TreeDoubleResult {
  Polyhedron polyhedron;
  int copies = 0;
  /// Roots of all copies before shared walls are removed and duplicates merged.
  int raw_roots = 0;
};

/// The union Q_T of the copies of P indexed by T. walls[i] is the wall whose
/// reflection is generator i. Walls of the copy at v are named by applying
/// mirror_name along the path from the identity.
TreeDoubleResult tree_double(const Polyhedron& p, const std::vector<int>& walls, const DoublingTree& t,
                             const TreeDoubleOptions& options = {});
/// tree_double over several trees, processed concurrently.
std::vector<TreeDoubleResult> tree_double_all(const Polyhedron& p, const std::vector<int>& walls,
                                              const std::vector<DoublingTree>& trees,
                                              const TreeDoubleOptions& options = {});

/// A polyhedron made of I copies of P, along an alternating path of the first
/// two walls; its reflection group has index I in that of P.
TreeDoubleResult index_subgroup(const Polyhedron& p, const std::vector<int>& walls, int index,
                                const TreeDoubleOptions& options = {});

class AbstractTree {
 public:
  AbstractTree() = default;
  explicit AbstractTree(int vertices);
  static AbstractTree from_edges(int vertices, const std::vector<std::pair<int, int>>& edges);
  static AbstractTree from(const DoublingTree& t);

  int size() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  void add_edge(int u, int v);
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::vector<std::pair<int, int>> edges() const;
  bool is_tree() const;

  /// Parenthesis encoding rooted at the centroid (the smaller encoding when
  /// there are two); equal exactly for isomorphic trees.
  std::string canonical() const;

 private:
  std::vector<std::vector<int>> adj_;
};

/// Number of isomorphism classes of trees with E edges whose vertices all have
/// degree 1 or 3, for E = 1..max_edges (zero for even E).
std::vector<std::uint64_t> count_trivalent_trees(int max_edges);
/// Representatives of those classes with exactly E edges, in canonical order.
std::vector<AbstractTree> trivalent_trees(int edges);

/// Pairwise non-isomorphic I-vertex subtrees of the k-regular tree whose branch
/// points lie at distance >= L from each other: every trivalent tree with at
/// most (I - 1) / L edges, edges subdivided to length L and one leaf arm
/// lengthened to reach I vertices. A path when no trivalent tree fits.
std::vector<DoublingTree> branch_spaced_subtrees(int k, int vertices, int spacing);
/// Size of that family.
std::uint64_t branch_spaced_count(int vertices, int spacing);

}  // namespace hypcox
