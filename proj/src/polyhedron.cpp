#include "hypcox/polyhedron.hpp"

#include <algorithm>
#include <map>

namespace hypcox {

Polyhedron Polyhedron::build(QSpace space, std::vector<QVector> roots, std::vector<std::string> names) {
  Polyhedron p;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].size() != space.dim()) {
      throw PolyhedronError("root " + std::to_string(i + 1) + " has the wrong dimension");
    }
  }
  if (!names.empty() && names.size() != roots.size()) throw PolyhedronError("name count does not match roots");
  p.gram_ = gram(space, roots);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (p.gram_(i, i).sign() <= 0) {
      throw PolyhedronError("root " + (names.empty() ? std::to_string(i + 1) : names[i]) + " has nonpositive norm");
    }
  }
  try {
    p.diagram_ = diagram_from_gram(space, p.gram_, std::move(names));
  } catch (const NotCoxeterError& e) {
    throw PolyhedronError(e.what());
  }
  p.space_ = std::move(space);
  p.roots_ = std::move(roots);
  return p;
}

int Polyhedron::wall(const std::string& name) const {
  if (auto i = diagram_.index_of(name)) return *i;
  throw PolyhedronError("no wall named '" + name + "'");
}

bool is_doubling_wall(const CoxDiagram& diagram, int w) {
  for (int x = 0; x < diagram.size(); ++x) {
    if (x == w) continue;
    const BondLabel& l = diagram.label(w, x);
    if (l.meets() && l.m % 2 != 0) return false;
  }
  return true;
}

std::vector<int> doubling_walls(const CoxDiagram& diagram) {
  std::vector<int> out;
  for (int w = 0; w < diagram.size(); ++w) {
    if (is_doubling_wall(diagram, w)) out.push_back(w);
  }
  return out;
}

std::optional<std::pair<int, int>> is_redoublable(const CoxDiagram& diagram) {
  const auto walls = doubling_walls(diagram);
  for (std::size_t i = 0; i < walls.size(); ++i) {
    for (std::size_t j = i + 1; j < walls.size(); ++j) {
      if (!diagram.label(walls[i], walls[j]).meets()) return std::make_pair(walls[i], walls[j]);
    }
  }
  return std::nullopt;
}

std::optional<std::array<int, 3>> disjoint_doubling_triple(const CoxDiagram& diagram) {
  const auto walls = doubling_walls(diagram);
  const auto apart = [&](int a, int b) { return !diagram.label(a, b).meets(); };
  for (std::size_t i = 0; i < walls.size(); ++i) {
    for (std::size_t j = i + 1; j < walls.size(); ++j) {
      if (!apart(walls[i], walls[j])) continue;
      for (std::size_t k = j + 1; k < walls.size(); ++k) {
        if (apart(walls[i], walls[k]) && apart(walls[j], walls[k])) return std::array{walls[i], walls[j], walls[k]};
      }
    }
  }
  return std::nullopt;
}

bool pairwise_disjoint_doubling(const CoxDiagram& diagram, const std::vector<int>& walls) {
  for (std::size_t i = 0; i < walls.size(); ++i) {
    if (!is_doubling_wall(diagram, walls[i])) return false;
    for (std::size_t j = i + 1; j < walls.size(); ++j) {
      if (walls[i] == walls[j] || diagram.label(walls[i], walls[j]).meets()) return false;
    }
  }
  return true;
}

std::string mirror_name(const std::string& w, const std::string& x) { return "[" + w + "]" + x; }

int double_wall_count(const CoxDiagram& diagram, int w) {
  int orthogonal = 0;
  for (int x = 0; x < diagram.size(); ++x) {
    if (x != w && diagram.label(w, x).is_orthogonal()) ++orthogonal;
  }
  return 2 * (diagram.size() - 1) - orthogonal;
}

Polyhedron double_across(const Polyhedron& p, int w) {
  if (w < 0 || w >= p.size()) throw PolyhedronError("wall index out of range");
  const CoxDiagram& d = p.diagram();
  if (!is_doubling_wall(d, w)) throw PolyhedronError("wall " + d.name(w) + " is not a doubling wall");
  if (d.neighbors(w).empty()) {
    throw PolyhedronError("wall " + d.name(w) + " is orthogonal to every other wall; the double is degenerate");
  }
  std::vector<QVector> roots;
  std::vector<std::string> names;
  for (int i = 0; i < p.size(); ++i) {
    if (i == w) continue;
    roots.push_back(p.roots()[static_cast<std::size_t>(i)]);
    names.push_back(d.name(i));
  }
  const QVector& rw = p.roots()[static_cast<std::size_t>(w)];
  for (int i = 0; i < p.size(); ++i) {
    if (i == w || p.gram_matrix()(static_cast<std::size_t>(i), static_cast<std::size_t>(w)).is_zero()) continue;
    QVector image = clear_denominators(reflect(p.space(), rw, p.roots()[static_cast<std::size_t>(i)]));
    const bool seen = std::any_of(roots.begin(), roots.end(),
                                  [&](const QVector& r) { return positively_proportional(r, image); });
    if (seen) continue;
    roots.push_back(std::move(image));
    names.push_back(mirror_name(d.name(w), d.name(i)));
  }
  return Polyhedron::build(p.space(), std::move(roots), std::move(names));
}

// ---------------------------------------------------------------------------
// Faces

bool satisfies_face_hypotheses(const DiagramType& type) {
  for (const auto& c : type.components) {
    if (!c.spherical() || c.family == Family::A || c.is(Family::D, 5)) return false;
  }
  return true;
}

Face make_face(const CoxDiagram& diagram, std::vector<int> sigma) {
  std::sort(sigma.begin(), sigma.end());
  if (std::adjacent_find(sigma.begin(), sigma.end()) != sigma.end()) throw PolyhedronError("repeated node in sigma");
  for (int v : sigma) {
    if (v < 0 || v >= diagram.size()) throw PolyhedronError("sigma node out of range");
  }
  Face f;
  f.type = classify(diagram.induced(sigma));
  if (!f.type.spherical()) throw PolyhedronError("sigma is not spherical: " + f.type.to_string());
  f.sigma = sigma;
  std::vector<int> trial = sigma;
  trial.push_back(-1);
  for (int a = 0; a < diagram.size(); ++a) {
    if (std::binary_search(sigma.begin(), sigma.end(), a)) continue;
    trial.back() = a;
    if (is_spherical(diagram, trial)) f.extensions.push_back(a);
  }
  return f;
}

Polyhedron FaceProjection::polyhedron() const {
  if (!coxeter()) {
    throw PolyhedronError("face is not a Coxeter polyhedron: " + std::to_string(non_coxeter.size()) +
                          " pairs have other angles");
  }
  return Polyhedron::build(space, roots, diagram.names());
}

FaceProjection face_projection(const Polyhedron& p, const std::vector<int>& sigma) {
  FaceProjection out;
  out.face = make_face(p.diagram(), sigma);
  const QSpace& space = p.space();
  const std::size_t dim = space.dim();

  Matrix rows(out.face.sigma.size(), dim);
  for (std::size_t i = 0; i < out.face.sigma.size(); ++i) {
    const QVector& r = p.roots()[static_cast<std::size_t>(out.face.sigma[i])];
    for (std::size_t k = 0; k < dim; ++k) rows(i, k) = space.diag()[k] * r[k];
  }
  const std::vector<QVector> basis = orthogonal_basis(space, null_space(rows));
  std::vector<FieldScalar> norms;
  for (const auto& e : basis) norms.push_back(norm(space, e));
  if (!norms.empty()) out.space = QSpace(norms);

  std::vector<std::string> names;
  for (int a : out.face.extensions) {
    const QVector& r = p.roots()[static_cast<std::size_t>(a)];
    QVector v{std::vector<FieldScalar>(basis.size())};
    for (std::size_t j = 0; j < basis.size(); ++j) v[j] = inner(space, r, basis[j]) / norms[j];
    out.roots.push_back(clear_denominators(v));
    names.push_back(p.diagram().name(a));
  }
  out.diagram = CoxDiagram(std::move(names));
  const Matrix g = gram(out.space, out.roots);
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    if (g(i, i).sign() <= 0) throw PolyhedronError("projected root of nonpositive norm");
  }
  const int n = static_cast<int>(out.roots.size());
  long d = out.space.field();
  if (d == 0) d = space.field();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      try {
        out.diagram.set_label(i, j, bond_from_gram(g(ui, ui), g(uj, uj), g(ui, uj), d, i, j));
      } catch (const NotCoxeterError&) {
        out.non_coxeter.emplace_back(i, j);
      }
    }
  }
  return out;
}

namespace {

struct Attachment {
  int node = -1;       // node of sigma joined to the extension, or -1
  int component = -1;  // index into Face::type.components
};

Attachment attachment(const CoxDiagram& diagram, const Face& face, int a) {
  Attachment at;
  for (int s : face.sigma) {
    const BondLabel& l = diagram.label(a, s);
    if (!l.joined()) continue;
    if (at.node >= 0) {
      throw PolyhedronError("extension " + diagram.name(a) + " attaches to more than one node of sigma");
    }
    if (!(l == BondLabel::finite(3))) {
      throw PolyhedronError("extension " + diagram.name(a) + " attaches by a bond other than a single bond");
    }
    at.node = s;
  }
  if (at.node >= 0) {
    for (std::size_t c = 0; c < face.type.components.size(); ++c) {
      const auto& nodes = face.type.components[c].nodes;
      // component nodes are positions within sigma
      for (int pos : nodes) {
        if (face.sigma[static_cast<std::size_t>(pos)] == at.node) at.component = static_cast<int>(c);
      }
    }
  }
  return at;
}

std::vector<int> component_nodes(const Face& face, int c) {
  std::vector<int> out;
  for (int pos : face.type.components[static_cast<std::size_t>(c)].nodes) {
    out.push_back(face.sigma[static_cast<std::size_t>(pos)]);
  }
  return out;
}

// Type of the single component formed by `base` plus `extra`, or Other.
ComponentType enlarged(const CoxDiagram& diagram, std::vector<int> base, std::initializer_list<int> extra) {
  base.insert(base.end(), extra);
  const DiagramType t = classify(diagram.induced(base));
  if (t.components.size() != 1) return ComponentType{};
  return t.components[0];
}

}  // namespace

CoxDiagram face_combinatorial(const CoxDiagram& diagram, const std::vector<int>& sigma) {
  const Face face = make_face(diagram, sigma);
  if (!satisfies_face_hypotheses(face.type)) {
    throw PolyhedronError("sigma = " + face.type.to_string() + " has an A_n or D_5 component");
  }
  std::vector<Attachment> att;
  std::vector<std::string> names;
  for (int a : face.extensions) {
    att.push_back(attachment(diagram, face, a));
    names.push_back(diagram.name(a));
  }
  CoxDiagram out(std::move(names));
  const auto nonmeeting = [&](int a, int b) {
    std::vector<int> nodes = face.sigma;
    nodes.push_back(a);
    nodes.push_back(b);
    return classify(diagram.induced(nodes)).has_affine_component() ? BondLabel::parallel()
                                                                    : BondLabel::ultraparallel();
  };
  const int n = static_cast<int>(face.extensions.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int a = face.extensions[static_cast<std::size_t>(i)], b = face.extensions[static_cast<std::size_t>(j)];
      const Attachment& ta = att[static_cast<std::size_t>(i)];
      const Attachment& tb = att[static_cast<std::size_t>(j)];
      const BondLabel& ab = diagram.label(a, b);
      BondLabel result;
      if (ta.node < 0 && tb.node < 0) {
        result = ab;
      } else if (ta.node < 0 || tb.node < 0) {
        const int c = ta.node >= 0 ? ta.component : tb.component;
        if (ab.is_orthogonal()) {
          result = BondLabel::orthogonal();
        } else if (ab == BondLabel::finite(3)) {
          const ComponentType t = enlarged(diagram, component_nodes(face, c), {a, b});
          if (t.family == Family::B || t.family == Family::D) result = BondLabel::finite(4);
          else if (t.is(Family::E, 8)) result = BondLabel::finite(6);
          else if (t.is(Family::H, 4)) result = BondLabel::finite(10);
          else result = nonmeeting(a, b);
        } else {
          result = nonmeeting(a, b);
        }
      } else if (ta.component != tb.component) {
        result = ab.is_orthogonal() ? BondLabel::orthogonal() : nonmeeting(a, b);
      } else {
        result = nonmeeting(a, b);
        if (ab.is_orthogonal()) {
          const ComponentType t = enlarged(diagram, component_nodes(face, ta.component), {a, b});
          if (t.is(Family::E, 6)) result = BondLabel::finite(3);
          else if (t.is(Family::E, 8) || t.is(Family::F, 4)) result = BondLabel::finite(4);
        }
      }
      out.set_label(i, j, result);
    }
  }
  return out;
}

DoublingPrediction face_doubling_walls_cor(const CoxDiagram& diagram, const std::vector<int>& sigma) {
  DoublingPrediction out;
  out.face = make_face(diagram, sigma);
  if (!satisfies_face_hypotheses(out.face.type)) {
    throw PolyhedronError("sigma = " + out.face.type.to_string() + " has an A_n or D_5 component");
  }
  std::vector<Attachment> att;
  for (std::size_t i = 0; i < out.face.extensions.size(); ++i) {
    const Attachment at = attachment(diagram, out.face, out.face.extensions[i]);
    att.push_back(at);
    if (at.node < 0) continue;
    const ComponentType& t = out.face.type.components[static_cast<std::size_t>(at.component)];
    const bool big_d = t.family == Family::D && t.rank >= 6;
    const bool e67 = t.is(Family::E, 6) || t.is(Family::E, 7);
    if (big_d || e67) out.doubling.push_back(static_cast<int>(i));
  }
  for (std::size_t x = 0; x < out.doubling.size(); ++x) {
    for (std::size_t y = x + 1; y < out.doubling.size(); ++y) {
      const int i = out.doubling[x], j = out.doubling[y];
      const int c = att[static_cast<std::size_t>(i)].component;
      if (c != att[static_cast<std::size_t>(j)].component) continue;
      const ComponentType& t = out.face.type.components[static_cast<std::size_t>(c)];
      const ComponentType e = enlarged(diagram, component_nodes(out.face, c),
                                       {out.face.extensions[static_cast<std::size_t>(i)],
                                        out.face.extensions[static_cast<std::size_t>(j)]});
      const bool exception = t.is(Family::D, 6) && e.is(Family::E, 8);
      out.same_component_pairs.emplace_back(i, j, !exception);
    }
  }
  return out;
}

bool angle_not_larger(const BondLabel& face_label, const BondLabel& label) {
  if (!face_label.meets()) return true;
  if (!label.meets()) return false;
  return face_label.m >= label.m;
}

}  // namespace hypcox
