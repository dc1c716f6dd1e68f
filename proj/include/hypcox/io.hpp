// JSON forms of the library objects.
//
// A field element is [a, b, c] meaning (a + b sqrt d) / c, with d given by the
// enclosing space. Integers too large for 64 bits are written as strings.
#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "hypcox/grow.hpp"
#include "hypcox/leech.hpp"
#include "hypcox/polyhedron.hpp"

namespace hypcox {

using Json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const FieldScalar& x);
FieldScalar scalar_from_json(const Json& j, long d);

Json to_json(const QVector& v);
QVector vector_from_json(const Json& j, long d);

/// {"d": d, "diag": [...]}
Json to_json(const QSpace& space);
QSpace space_from_json(const Json& j);

/// {"nodes": [names], "bonds": [[i, j, label], ...]}, orthogonal pairs omitted;
/// label is an integer m, "par" or "ultra".
Json to_json(const CoxDiagram& diagram);
CoxDiagram diagram_from_json(const Json& j);

/// {"space": ..., "roots": [...], "names": [...]}; re-validated on import.
Json to_json(const Polyhedron& p);
Polyhedron polyhedron_from_json(const Json& j);

/// 24 integers, the coordinates of sqrt 8 times the vector.
Json to_json(const LeechPoint& x);
LeechPoint leech_point_from_json(const Json& j);

/// {"k": k, "parent": [...], "gen": [...]}; the root has parent -1.
Json to_json(const DoublingTree& t);
DoublingTree tree_from_json(const Json& j);

/// Parses text, rethrowing parse errors as FormatError.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace hypcox
