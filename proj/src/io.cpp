#include "hypcox/io.hpp"

#include <fstream>
#include <sstream>

namespace hypcox {

namespace {

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw FormatError("bad integer '" + j.get<std::string>() + "'");
    return z;
  }
  throw FormatError("expected an integer, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  return j;
}

}  // namespace

Json to_json(const FieldScalar& x) { return Json::array({integer_json(x.a()), integer_json(x.b()), integer_json(x.c())}); }

FieldScalar scalar_from_json(const Json& j, long d) {
  if (j.is_number_integer() || j.is_string()) return FieldScalar(integer_from_json(j));
  if (!j.is_array() || j.size() != 3) throw FormatError("field element must be [a, b, c], got " + j.dump());
  const mpz_class c = integer_from_json(j[2]);
  if (c == 0) throw FormatError("zero denominator");
  const mpz_class b = integer_from_json(j[1]);
  if (b != 0 && d == 0) throw FormatError("irrational part over the rationals");
  return FieldScalar(integer_from_json(j[0]), b, c, b == 0 ? 0 : d);
}

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v.coords) out.push_back(to_json(x));
  return out;
}

QVector vector_from_json(const Json& j, long d) {
  QVector v;
  for (const auto& x : array(j, "vector")) v.coords.push_back(scalar_from_json(x, d));
  return v;
}

Json to_json(const QSpace& space) {
  Json diag = Json::array();
  for (const auto& x : space.diag()) diag.push_back(to_json(x));
  return {{"d", space.field()}, {"diag", diag}};
}

QSpace space_from_json(const Json& j) {
  const long d = field(j, "d").get<long>();
  std::vector<FieldScalar> diag;
  for (const auto& x : array(field(j, "diag"), "diag")) diag.push_back(scalar_from_json(x, d));
  return QSpace(std::move(diag));
}

Json to_json(const CoxDiagram& diagram) {
  Json bonds = Json::array();
  for (int i = 0; i < diagram.size(); ++i) {
    for (int j = i + 1; j < diagram.size(); ++j) {
      const auto& l = diagram.label(i, j);
      if (l.is_orthogonal()) continue;
      Json label = l.kind == BondLabel::Kind::Finite ? Json(l.m) : Json(l.to_string());
      bonds.push_back(Json::array({i, j, label}));
    }
  }
  return {{"nodes", diagram.names()}, {"bonds", bonds}};
}

CoxDiagram diagram_from_json(const Json& j) {
  CoxDiagram d(field(j, "nodes").get<std::vector<std::string>>());
  for (const auto& b : array(field(j, "bonds"), "bonds")) {
    if (!b.is_array() || b.size() != 3) throw FormatError("bond must be [i, j, label]");
    const int u = b[0].get<int>();
    const int v = b[1].get<int>();
    if (u < 0 || v < 0 || u >= d.size() || v >= d.size() || u == v) throw FormatError("bad bond " + b.dump());
    BondLabel label;
    if (b[2].is_number_integer()) {
      label = BondLabel::finite(b[2].get<int>());
      if (label.m < 2) throw FormatError("bad bond label " + b[2].dump());
    } else if (b[2] == "par") {
      label = BondLabel::parallel();
    } else if (b[2] == "ultra") {
      label = BondLabel::ultraparallel();
    } else {
      throw FormatError("bad bond label " + b[2].dump());
    }
    d.set_label(u, v, label);
  }
  return d;
}

Json to_json(const Polyhedron& p) {
  Json roots = Json::array();
  for (const auto& r : p.roots()) roots.push_back(to_json(r));
  return {{"space", to_json(p.space())}, {"roots", roots}, {"names", p.names()}};
}

Polyhedron polyhedron_from_json(const Json& j) {
  QSpace space = space_from_json(field(j, "space"));
  std::vector<QVector> roots;
  for (const auto& r : array(field(j, "roots"), "roots")) {
    roots.push_back(vector_from_json(r, space.field()));
    if (roots.back().size() != space.dim()) throw FormatError("root dimension does not match the space");
  }
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return Polyhedron::build(std::move(space), std::move(roots), std::move(names));
}

Json to_json(const LeechPoint& x) { return Json(std::vector<int>(x.begin(), x.end())); }

LeechPoint leech_point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 24) throw FormatError("a Leech point has 24 integer coordinates");
  LeechPoint x{};
  for (std::size_t i = 0; i < 24; ++i) x[i] = j[i].get<int>();
  return x;
}

Json to_json(const DoublingTree& t) { return {{"k", t.k}, {"parent", t.parent}, {"gen", t.gen}}; }

DoublingTree tree_from_json(const Json& j) {
  DoublingTree t;
  t.k = field(j, "k").get<int>();
  t.parent = field(j, "parent").get<std::vector<int>>();
  t.gen = field(j, "gen").get<std::vector<int>>();
  try {
    t.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return t;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

}  // namespace hypcox
