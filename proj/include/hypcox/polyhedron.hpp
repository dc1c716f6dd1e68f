// Coxeter polyhedra given by simple roots: validation, doubling, and faces.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypcox/coxdiagram.hpp"
#include "hypcox/qspace.hpp"

namespace hypcox {

class PolyhedronError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Polyhedron {
 public:
  Polyhedron() = default;

  /// Validates positive norms, nonpositive inner products and Coxeter angles.
  /// Walls are named "1".."n" unless names are given.
  static Polyhedron build(QSpace space, std::vector<QVector> roots, std::vector<std::string> names = {});

  const QSpace& space() const { return space_; }
  const std::vector<QVector>& roots() const { return roots_; }
  const std::vector<std::string>& names() const { return diagram_.names(); }
  const CoxDiagram& diagram() const { return diagram_; }
  const Matrix& gram_matrix() const { return gram_; }
  int size() const { return static_cast<int>(roots_.size()); }

  /// Index of the wall with the given name; throws PolyhedronError.
  int wall(const std::string& name) const;

 private:
  QSpace space_;
  std::vector<QVector> roots_;
  Matrix gram_;
  CoxDiagram diagram_;
};

bool is_doubling_wall(const CoxDiagram& diagram, int w);
std::vector<int> doubling_walls(const CoxDiagram& diagram);
inline std::vector<int> doubling_walls(const Polyhedron& p) { return doubling_walls(p.diagram()); }

/// First (lexicographic) pair of non-meeting doubling walls.
std::optional<std::pair<int, int>> is_redoublable(const CoxDiagram& diagram);
inline std::optional<std::pair<int, int>> is_redoublable(const Polyhedron& p) { return is_redoublable(p.diagram()); }

/// First (lexicographic) triple of pairwise non-meeting doubling walls.
std::optional<std::array<int, 3>> disjoint_doubling_triple(const CoxDiagram& diagram);
inline std::optional<std::array<int, 3>> disjoint_doubling_triple(const Polyhedron& p) {
  return disjoint_doubling_triple(p.diagram());
}
bool pairwise_disjoint_doubling(const CoxDiagram& diagram, const std::vector<int>& walls);

/// The union of P and its mirror image across doubling wall w. The mirror of
/// wall X is named "[W]X" where W is the name of w.
Polyhedron double_across(const Polyhedron& p, int w);
/// Number of walls of double_across(p, w): 2(n - 1) - (walls orthogonal to w).
int double_wall_count(const CoxDiagram& diagram, int w);

/// Name of the mirror image of wall `x` across wall `w`.
std::string mirror_name(const std::string& w, const std::string& x);

struct Face {
  std::vector<int> sigma;
  DiagramType type;
  /// Nodes A outside sigma with sigma + A spherical, in increasing order.
  std::vector<int> extensions;
};

/// Throws PolyhedronError when sigma is not spherical.
Face make_face(const CoxDiagram& diagram, std::vector<int> sigma);
/// sigma is spherical with no A_n or D_5 component.
bool satisfies_face_hypotheses(const DiagramType& type);

struct FaceProjection {
  Face face;
  QSpace space;
  std::vector<QVector> roots;  // one per extension
  /// Diagram on the extensions; pairs with non-Coxeter angles are left
  /// orthogonal and listed in non_coxeter.
  CoxDiagram diagram;
  std::vector<std::pair<int, int>> non_coxeter;

  bool coxeter() const { return non_coxeter.empty(); }
  /// Throws PolyhedronError when the face is not a Coxeter polyhedron.
  Polyhedron polyhedron() const;
};

/// Projects the extension roots into the orthogonal complement of sigma's
/// roots, expressed in an exact orthogonal basis of that complement.
FaceProjection face_projection(const Polyhedron& p, const std::vector<int>& sigma);

/// The face diagram on sigma's extensions from the diagram alone, by the
/// attachment rules for faces of Coxeter polyhedra. Non-meeting pairs are
/// Parallel when sigma + {A, B} has an affine component, else Ultraparallel.
/// Throws PolyhedronError when the hypotheses fail.
CoxDiagram face_combinatorial(const CoxDiagram& diagram, const std::vector<int>& sigma);

struct DoublingPrediction {
  Face face;
  /// Positions (into face.extensions) of extensions attaching to a D_{n>=6},
  /// E6 or E7 component of sigma.
  std::vector<int> doubling;
  /// For two predicted walls attaching to the same component: true when they
  /// are predicted disjoint (no D6 -> E8 enlargement).
  std::vector<std::tuple<int, int, bool>> same_component_pairs;
};
DoublingPrediction face_doubling_walls_cor(const CoxDiagram& diagram, const std::vector<int>& sigma);

/// True when the dihedral angle of `face_label` is at most that of `label`.
bool angle_not_larger(const BondLabel& face_label, const BondLabel& label);

}  // namespace hypcox
