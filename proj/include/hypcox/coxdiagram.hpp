// Coxeter diagrams: bond labels, synthesis from Gram data, classification of
// spherical and affine types, subdiagram enumeration, isomorphism and export.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypcox/qspace.hpp"

namespace hypcox {

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by diagram_from_gram for a pair of walls whose angle is neither an
/// integral submultiple of pi nor non-meeting.
class NotCoxeterError : public DiagramError {
 public:
  NotCoxeterError(int i, int j, const std::string& detail);
  int first;
  int second;
};

struct BondLabel {
  enum class Kind : std::uint8_t { Finite, Parallel, Ultraparallel };

  Kind kind = Kind::Finite;
  int m = 2;  // meaningful for Finite; 2 means orthogonal (no bond)

  static constexpr BondLabel orthogonal() { return {Kind::Finite, 2}; }
  static constexpr BondLabel finite(int m) { return {Kind::Finite, m}; }
  static constexpr BondLabel parallel() { return {Kind::Parallel, 0}; }
  static constexpr BondLabel ultraparallel() { return {Kind::Ultraparallel, 0}; }

  bool is_orthogonal() const { return kind == Kind::Finite && m == 2; }
  /// The two walls intersect in H^n.
  bool meets() const { return kind == Kind::Finite; }
  bool joined() const { return !is_orthogonal(); }
  /// Integer code used for hashing and isomorphism colouring.
  int code() const;

  /// "2", "3", ..., "par" or "ultra".
  std::string to_string() const;
  /// Single-token form used in bond tables: "2".."12", "p", "u".
  std::string table_token() const;
  static BondLabel parse(const std::string& token);

  friend bool operator==(const BondLabel&, const BondLabel&) = default;
};

class CoxDiagram {
 public:
  CoxDiagram() = default;
  explicit CoxDiagram(std::vector<std::string> names);
  explicit CoxDiagram(int n);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& name) const;

  const BondLabel& label(int i, int j) const { return labels_[static_cast<std::size_t>(i * size() + j)]; }
  void set_label(int i, int j, BondLabel label);

  /// Nodes joined to i by a non-orthogonal bond.
  std::vector<int> neighbors(int i) const;
  CoxDiagram induced(const std::vector<int>& nodes) const;
  /// Node sets of the connected components (bonds of any non-orthogonal kind).
  std::vector<std::vector<int>> components() const;
  int count_joined_pairs() const;

  friend bool operator==(const CoxDiagram&, const CoxDiagram&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<BondLabel> labels_;
};

/// The exact value cos^2(pi/m), for the m whose cosine square lies in Q(sqrt d):
/// 2, 3, 4, 6 always; 8 for d = 2; 12 for d = 3; 5 and 10 for d = 5.
FieldScalar supported_cos2(int m, long d);
std::vector<int> supported_orders(long d);

/// Labels each pair from q = (ri.rj)^2 / (ri^2 rj^2). Throws NotCoxeterError
/// for positive inner products or angles outside the supported set.
CoxDiagram diagram_from_gram(const QSpace& space, const Matrix& gram,
                             std::vector<std::string> names = {});
/// Label of one pair; the same rule diagram_from_gram applies.
BondLabel bond_from_gram(const FieldScalar& gii, const FieldScalar& gjj, const FieldScalar& gij,
                         long d, int i = 0, int j = 1);

enum class Family : std::uint8_t {
  A, B, D, E, F, H, I2,
  AffineA, AffineB, AffineC, AffineD, AffineE, AffineF, AffineG,
  Other
};

struct ComponentType {
  Family family = Family::Other;
  int rank = 0;  // subscript: node count for spherical, node count - 1 for affine
  int m = 0;     // dihedral order for I2(m)
  std::vector<int> nodes;

  bool spherical() const;
  bool affine() const;
  /// "A5", "D6", "I2(5)", "~E8", "Other".
  std::string to_string() const;
  bool is(Family f, int r) const { return family == f && rank == r; }
};

struct DiagramType {
  std::vector<ComponentType> components;

  bool spherical() const;
  bool has_affine_component() const;
  /// Component types concatenated in order of their smallest node, e.g. "D7D16".
  std::string to_string() const;
  const ComponentType* component_of(int node) const;
};

DiagramType classify(const CoxDiagram& diagram);
/// Classification of one connected component given by its nodes.
ComponentType classify_component(const CoxDiagram& diagram, const std::vector<int>& nodes);
bool is_spherical(const CoxDiagram& diagram, const std::vector<int>& nodes);

/// Lazily enumerates node subsets whose induced diagram is spherical (the empty
/// set first). Subsets are extended only while they stay spherical.
class SphericalSubdiagramStream {
 public:
  using Filter = std::function<bool(const DiagramType&)>;
  explicit SphericalSubdiagramStream(CoxDiagram diagram, Filter filter = {});

  std::optional<std::vector<int>> next();

 private:
  struct Frame {
    std::vector<int> nodes;
    int next_candidate;
  };
  CoxDiagram diagram_;
  Filter filter_;
  std::vector<Frame> stack_;
  bool started_ = false;
};

struct EarsTails {
  std::vector<int> ears;
  std::vector<int> tails;
};
/// Ears and tails of a D_n or E_n component. Throws DiagramError otherwise.
EarsTails ears_tails(const CoxDiagram& diagram, const std::vector<int>& component);

/// A label-preserving bijection d1 -> d2 (mapping[i] is the image of node i).
std::optional<std::vector<int>> is_isomorphic(const CoxDiagram& d1, const CoxDiagram& d2);
/// Number of label-preserving automorphisms, stopping early at `limit`.
std::uint64_t count_automorphisms(const CoxDiagram& d, std::uint64_t limit = 1u << 20);

std::string export_dot(const CoxDiagram& diagram);
/// One row per node; tokens separated by single spaces, "*" on the diagonal.
std::string bond_table(const CoxDiagram& diagram);

}  // namespace hypcox
