// The Golay code, the Leech lattice and Conway's polyhedron in H^25, with the
// duad/syntheme/dryad description of the extensions of a D6.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypcox/polyhedron.hpp"

namespace hypcox {

class LeechError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The extended binary Golay code, spanned by the 12 cyclic shifts of
/// g(x) = 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11 with an overall parity bit.
class GolayCode {
 public:
  static const GolayCode& instance();

  const std::array<std::uint32_t, 12>& generators() const { return gens_; }
  /// All 4096 codewords, in the order of their coefficient vectors.
  const std::vector<std::uint32_t>& words() const { return words_; }
  bool contains(std::uint32_t word) const;
  /// Number of codewords of each weight 0..24.
  std::array<int, 25> weight_distribution() const;
  /// FNV-1a of the generator rows; keys on-disk caches.
  std::uint64_t checksum() const;

 private:
  GolayCode();
  std::array<std::uint32_t, 12> gens_{};
  std::vector<std::uint32_t> words_;
  std::vector<std::uint64_t> table_;  // membership bitset over 2^24 words
};

bool golay_contains(std::uint32_t word);

/// Coordinates x_1..x_24 of a vector x / sqrt 8; its norm is sum(x_i^2) / 8.
using LeechPoint = std::array<int, 24>;

bool leech_contains(const LeechPoint& x);
/// 8 |x|^2 as an integer.
int scaled_norm(const LeechPoint& x);
/// 8 |x - y|^2.
int scaled_distance(const LeechPoint& x, const LeechPoint& y);
LeechPoint operator+(const LeechPoint& x, const LeechPoint& y);
LeechPoint operator-(const LeechPoint& x, const LeechPoint& y);
std::string to_string(const LeechPoint& x);

/// Return false to stop the enumeration.
using PointVisitor = std::function<bool(const LeechPoint&)>;

/// Serial reference: every lattice vector of the given norm (even, 4..8),
/// produced by a search over codewords and residue classes. Returns false if
/// the visitor stopped early.
bool shell_for_each(int norm, const PointVisitor& visit);
/// Points of the shell about `center`, i.e. center + shell_for_each(norm).
bool enum_sphere(const LeechPoint& center, int norm, const PointVisitor& visit);

/// OpenMP version of the same search: the shell points accepted by `keep`,
/// sorted. `workers` <= 0 uses the OpenMP default.
std::vector<LeechPoint> shell_collect(int norm, const std::function<bool(const LeechPoint&)>& keep,
                                      int workers = 0);
std::uint64_t shell_count(int norm, int workers = 0);
std::uint64_t shell_count_serial(int norm);

/// Label of the bond between the walls of two distinct lattice points: no bond,
/// 3, Parallel or Ultraparallel for |x - y|^2 = 4, 6, 8, > 8.
BondLabel bond(const LeechPoint& x, const LeechPoint& y);

/// The root (x, 1, x^2/2 - 1) of II_{25,1}, in the coordinates of leech_space().
/// Self inner product 2 and (r_x, r_y) = 2 - |x - y|^2 / 2.
QVector leech_root(const LeechPoint& x);
/// diag(1/8 x 24, 1/2, -1/2); the last two coordinates are 2 - x^2/2 and x^2/2.
const QSpace& leech_space();
CoxDiagram leech_diagram(const std::vector<LeechPoint>& points, std::vector<std::string> names = {});

/// Names of the D6 nodes in the order returned by find_d6: the tail, the two
/// nodes on the long arm, the branch node and the two ears.
inline const std::array<std::string, 6> kD6Names = {"tail", "n2", "n3", "branch", "earII", "earIII"};

/// Six lattice points forming a D6 diagram, the branch node at the origin.
std::array<LeechPoint, 6> find_d6();

/// Every lattice point A with sigma + {A} spherical, sorted. Candidates come
/// from the shells of norm 4 and 6 about one anchor point of sigma.
std::vector<LeechPoint> extensions(const std::vector<LeechPoint>& sigma, int workers = 0);

enum class NodeRole : std::uint8_t { D6, PlainDuad, InfinityDuad, Syntheme, Dryad };
std::string to_string(NodeRole role);

/// How one extension enlarges a spherical sigma.
struct ExtensionRole {
  enum class Kind : std::uint8_t { A1Extension, TailExtension, EarExtension, Other };
  Kind kind = Kind::Other;
  int component = -1;  // index into the type of sigma, or -1
  int node = -1;       // the sigma node it attaches to, or -1
  std::string enlarged;  // type of sigma + {A}, e.g. "D7D4"
};
ExtensionRole extension_role(const CoxDiagram& diagram, const std::vector<int>& sigma, int ext);

/// Canonical form of a node name over {inf, 0..4}: "23", "∞2", "01.23.∞4",
/// "14|032" (dryads as the least of their six spellings), or a D6 name.
/// Accepts "∞", "i" or "I" for infinity, duads in either order and the parts
/// of a syntheme in any order. Throws LeechError.
std::string canonical_name(const std::string& name);
/// Parity of the permutation a,b,c,d,e of 0..4 in a dryad name.
bool dryad_is_even(const std::string& name);

/// The D6 together with its 50 extensions, named by the join rules.
struct LabeledD6 {
  std::vector<LeechPoint> points;  // 6 D6 nodes in kD6Names order, then 50 extensions
  std::vector<std::string> names;
  std::vector<NodeRole> roles;

  int size() const { return static_cast<int>(points.size()); }
  /// Index of a node given by any accepted spelling; throws LeechError.
  int index(const std::string& name) const;
  std::vector<int> indices(const std::vector<std::string>& names) const;
  /// The 56-wall polyhedron of the D6 and its extensions in II_{25,1}.
  Polyhedron universe() const;
};

/// Assigns roles and names; verifies every join rule and throws LeechError on
/// an inconsistency. ext holds the 50 extensions of d6.
LabeledD6 label_extensions_d6(const std::array<LeechPoint, 6>& d6, const std::vector<LeechPoint>& ext);

/// Image of a node name under the permutation i -> perm[i] of {0..4}; odd
/// permutations also exchange the ears.
std::string permute_name(const std::string& name, const std::array<int, 5>& perm);
/// All 120 permutations of {0..4}, the identity first.
std::vector<std::array<int, 5>> s5_elements();
bool is_even(const std::array<int, 5>& perm);
/// Node permutation of the 56 nodes for one element of S5.
std::vector<int> node_action(const LabeledD6& d6, const std::array<int, 5>& perm);
/// Number of distinct permutations of the face walls induced by the elements
/// of S5 that fix sigma setwise.
int induced_face_symmetries(const LabeledD6& d6, const std::vector<int>& sigma);

struct CacheOptions {
  bool enabled = true;
  /// Empty means $HYPCOX_CACHE_DIR, else $HOME/.cache/hypcox.
  std::string dir;
};
std::string cache_directory(const CacheOptions& options);

/// find_d6, extensions and labeling, cached on disk keyed by the code checksum.
LabeledD6 labeled_d6(const CacheOptions& options = {}, int workers = 0);

struct ChainStage {
  std::string name;  // advertised type, e.g. "D7D12"
  std::vector<std::string> nodes;
};
/// D6, D7, E7, D6D4, D7D4, D6D6, D7D6, D7D7, ..., D7D16, D6D6D4. E6 is not in
/// the list since it does not contain the D6.
std::vector<ChainStage> build_chain();
const ChainStage& chain_stage(const std::string& name);

/// The face of Conway's polyhedron for a sigma containing the labeled D6:
/// face_projection of the universe, walls named by their node names.
FaceProjection conway_face(const LabeledD6& d6, const std::vector<int>& sigma);
Polyhedron conway_face_polyhedron(const LabeledD6& d6, const std::vector<int>& sigma);

/// The E6 obtained by deleting the tail from D6 + 01|234, with its extensions
/// found by a full lattice search. Walls of the face are named "x1", "x2", ...
struct E6Face {
  std::vector<LeechPoint> sigma;
  std::vector<LeechPoint> ext;
  FaceProjection face;
};
E6Face conway_face_e6(const LabeledD6& d6, const CacheOptions& options = {}, int workers = 0);

/// The named face of the chain, or "E6". Wall names of chain faces are node names.
Polyhedron conway_face_by_name(const std::string& name, const CacheOptions& options = {}, int workers = 0);

}  // namespace hypcox
