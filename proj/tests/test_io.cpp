#include <doctest.h>

#include "hypcox/catalog.hpp"
#include "hypcox/io.hpp"

using namespace hypcox;

TEST_CASE("field elements") {
  const auto x = FieldScalar(mpz_class(3), mpz_class(-5), mpz_class(7), 2);
  CHECK(to_json(x) == Json::parse("[3,-5,7]"));
  CHECK(scalar_from_json(to_json(x), 2) == x);
  CHECK(scalar_from_json(Json(4), 2) == FieldScalar(4));
  const mpz_class big("123456789012345678901234567890");
  const FieldScalar y(big);
  CHECK(to_json(y)[0].is_string());
  CHECK(scalar_from_json(to_json(y), 0) == y);
  CHECK_THROWS_AS(scalar_from_json(Json::parse("[1,1,0]"), 2), FormatError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse("[1,1,1]"), 0), FormatError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse("[1,1]"), 2), FormatError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse("[\"x\",1,1]"), 2), FormatError);
}

TEST_CASE("space, polyhedron and diagram round trips") {
  const auto p = bugaenko_h6();
  const auto js = to_json(p.space());
  CHECK(js["d"] == 2);
  CHECK(space_from_json(js) == p.space());

  const auto jp = to_json(p);
  const auto q = polyhedron_from_json(parse_json(jp.dump()));
  CHECK(q.roots() == p.roots());
  CHECK(q.names() == p.names());
  CHECK(q.diagram() == p.diagram());
  CHECK(to_json(q) == jp);

  const auto jd = to_json(p.diagram());
  CHECK(jd["nodes"].size() == 34);
  CHECK(diagram_from_json(parse_json(jd.dump())) == p.diagram());
  bool has_ultra = false;
  for (const auto& b : jd["bonds"]) has_ultra = has_ultra || b[2] == "ultra";
  CHECK(has_ultra);
}

TEST_CASE("diagram labels") {
  CoxDiagram d(std::vector<std::string>{"a", "b", "c"});
  d.set_label(0, 1, BondLabel::parallel());
  d.set_label(1, 2, BondLabel::finite(8));
  const auto j = to_json(d);
  CHECK(j["bonds"] == Json::parse(R"([[0,1,"par"],[1,2,8]])"));
  CHECK(diagram_from_json(j) == d);
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"nodes":["a","b"],"bonds":[[0,1,"x"]]})")), FormatError);
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"nodes":["a","b"],"bonds":[[0,2,3]]})")), FormatError);
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"nodes":["a","b"]})")), FormatError);
}

TEST_CASE("invalid polyhedra are rejected") {
  auto j = to_json(bugaenko_h6());
  j["roots"][0] = j["roots"][1];
  CHECK_THROWS(polyhedron_from_json(j));
  auto short_root = to_json(bugaenko_h6());
  short_root["roots"][0].erase(0);
  CHECK_THROWS_AS(polyhedron_from_json(short_root), FormatError);
}

TEST_CASE("leech points and trees") {
  LeechPoint x{};
  x[0] = 4;
  x[5] = -4;
  CHECK(leech_point_from_json(parse_json(to_json(x).dump())) == x);
  CHECK_THROWS_AS(leech_point_from_json(Json::parse("[1,2]")), FormatError);

  const auto family = branch_spaced_subtrees(3, 13, 3);
  for (const auto& t : family) {
    const auto back = tree_from_json(parse_json(to_json(t).dump()));
    CHECK(back.k == t.k);
    CHECK(back.parent == t.parent);
    CHECK(back.gen == t.gen);
  }
  CHECK_THROWS_AS(tree_from_json(Json::parse(R"({"k":2,"parent":[-1,0,1],"gen":[-1,0,0]})")), FormatError);
  CHECK_THROWS_AS(parse_json("{"), FormatError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), FormatError);
}
