#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "doctest.h"
#include "hypcox/leech.hpp"

using namespace hypcox;

namespace {

CacheOptions test_cache() {
  CacheOptions c;
  c.dir = HYPCOX_TEST_CACHE;
  return c;
}

const LabeledD6& labeled() {
  static const LabeledD6 d6 = labeled_d6(test_cache());
  return d6;
}

const Polyhedron& universe() {
  static const Polyhedron u = labeled().universe();
  return u;
}

LeechPoint point(std::initializer_list<int> head) {
  LeechPoint p{};
  std::copy(head.begin(), head.end(), p.begin());
  return p;
}

// Shape of a vector: sorted absolute values, written as "a^k" runs.
std::string shape(const LeechPoint& x) {
  std::map<int, int, std::greater<>> runs;
  for (int v : x) ++runs[std::abs(v)];
  std::string s;
  for (auto [v, k] : runs) {
    if (v == 0) continue;
    s += std::to_string(v) + "^" + std::to_string(k) + " ";
  }
  return s;
}

std::uint64_t binom(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::set<std::string> neighbor_names(const std::string& name) {
  const int i = labeled().index(name);
  std::set<std::string> out;
  for (int j : universe().diagram().neighbors(i)) out.insert(labeled().names[static_cast<std::size_t>(j)]);
  return out;
}

std::string dryad(int a, int b, int c, int d, int e) {
  return canonical_name(std::to_string(a) + std::to_string(b) + "|" + std::to_string(c) + std::to_string(d) +
                        std::to_string(e));
}

std::string syn(int c, int a, int d, int b, int e) {
  return canonical_name("i" + std::to_string(c) + "." + std::to_string(a) + std::to_string(d) + "." +
                        std::to_string(b) + std::to_string(e));
}

}  // namespace

TEST_CASE("Golay code") {
  const auto& code = GolayCode::instance();
  const auto dist = code.weight_distribution();
  std::map<int, int> nonzero;
  for (int w = 0; w <= 24; ++w) {
    if (dist[static_cast<std::size_t>(w)]) nonzero[w] = dist[static_cast<std::size_t>(w)];
  }
  CHECK(nonzero == std::map<int, int>{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}});
  CHECK(golay_contains(0));
  CHECK(golay_contains((1u << 24) - 1));
  for (int i = 0; i < 24; ++i) CHECK_FALSE(golay_contains(1u << i));
  // linearity and closure on a sample of sums
  const auto& w = code.words();
  for (std::size_t i = 0; i < w.size(); i += 97) {
    for (std::size_t j = 0; j < w.size(); j += 131) CHECK(golay_contains(w[i] ^ w[j]));
  }
  std::set<std::uint32_t> distinct(w.begin(), w.end());
  CHECK(distinct.size() == 4096);
}

TEST_CASE("lattice membership") {
  CHECK(leech_contains(LeechPoint{}));
  CHECK(leech_contains(point({4, 4})));
  CHECK(leech_contains(point({4, -4})));
  CHECK_FALSE(leech_contains(point({4})));
  CHECK_FALSE(leech_contains(point({2, 2})));
  LeechPoint ones;
  ones.fill(1);
  ones[5] = -3;
  CHECK(leech_contains(ones));
  ones[5] = 3;
  CHECK_FALSE(leech_contains(ones));
  LeechPoint mixed{};
  mixed[0] = 1;
  CHECK_FALSE(leech_contains(mixed));
}

TEST_CASE("minimal shell: count, membership and shapes") {
  std::map<std::string, std::uint64_t> shapes;
  std::uint64_t n = 0, outside = 0;
  shell_for_each(4, [&](const LeechPoint& x) {
    ++n;
    if (!leech_contains(x) || scaled_norm(x) != 32) ++outside;
    ++shapes[shape(x)];
    return true;
  });
  CHECK(n == 196560);
  CHECK(outside == 0);
  CHECK(shapes["4^2 "] == binom(24, 2) * 4);
  CHECK(shapes["2^8 "] == 759u * 128u);
  CHECK(shapes["3^1 1^23 "] == 24u * 4096u);
  CHECK(shapes.size() == 3);
  CHECK(shell_count(4) == 196560);
  CHECK(shell_count(4, 1) == shell_count_serial(4));
}

TEST_CASE("norm 6 shell by complete enumeration") {
  const auto bad = shell_collect(6, [](const LeechPoint& x) { return !leech_contains(x) || scaled_norm(x) != 48; });
  CHECK(bad.empty());
  std::map<std::string, std::uint64_t> shapes;
  std::uint64_t n = 0;
  shell_for_each(6, [&](const LeechPoint& x) {
    ++n;
    ++shapes[shape(x)];
    return true;
  });
  CHECK(n == 16773120);
  CHECK(shapes["2^12 "] == 2576u * 2048u);
  CHECK(shapes["3^3 1^21 "] == binom(24, 3) * 4096u);
  CHECK(shapes["4^1 2^8 "] == 759u * 16u * 2u * 128u);
  CHECK(shapes["5^1 1^23 "] == 24u * 4096u);
  CHECK(shapes.size() == 4);
}

TEST_CASE("sphere enumeration is a translate of the shell; early stop") {
  LeechPoint c{};
  c[0] = 4;
  c[1] = 4;
  std::vector<LeechPoint> a, b;
  shell_for_each(4, [&](const LeechPoint& x) {
    a.push_back(c + x);
    return a.size() < 1000;
  });
  enum_sphere(c, 4, [&](const LeechPoint& x) {
    b.push_back(x);
    return b.size() < 1000;
  });
  CHECK(a == b);
  CHECK(a.size() == 1000);
  CHECK_THROWS_AS(shell_for_each(5, [](const LeechPoint&) { return true; }), LeechError);
}

TEST_CASE("bonds agree with the Gram matrix of the roots") {
  std::vector<LeechPoint> pts = {LeechPoint{}, point({4, 4}), point({4, -4}), point({8}), point({4, 4, 4, 4})};
  LeechPoint octad{};
  for (auto w : GolayCode::instance().words()) {
    if (std::popcount(w) != 8) continue;
    for (int i = 0; i < 24; ++i) octad[static_cast<std::size_t>(i)] = (w >> i & 1u) ? 2 : 0;
    break;
  }
  pts.push_back(octad);
  LeechPoint odd;
  odd.fill(1);
  odd[0] = -3;
  pts.push_back(odd);
  for (const auto& p : pts) REQUIRE(leech_contains(p));
  std::vector<QVector> roots;
  for (const auto& p : pts) roots.push_back(leech_root(p));
  const Matrix g = gram(leech_space(), roots);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(g(i, i) == FieldScalar(2));
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const int d = scaled_distance(pts[i], pts[j]);
      CHECK(g(i, j) == FieldScalar::rational(2) - FieldScalar::rational(d, 16));
      CHECK(bond(pts[i], pts[j]) == bond_from_gram(g(i, i), g(j, j), g(i, j), 0));
    }
  }
  CHECK(bond(LeechPoint{}, point({4, 4})).is_orthogonal());
  CHECK(bond(LeechPoint{}, point({4, 4, 4})) == BondLabel::finite(3));
  CHECK(bond(LeechPoint{}, point({8})) == BondLabel::parallel());
  CHECK(bond(LeechPoint{}, point({8, 4, 4})) == BondLabel::ultraparallel());
  CHECK_THROWS_AS(bond(LeechPoint{}, point({2, 2})), LeechError);
}

TEST_CASE("node names") {
  CHECK(canonical_name("32") == "23");
  CHECK(canonical_name("2i") == "∞2");
  CHECK(canonical_name("∞2") == "∞2");
  CHECK(canonical_name("23.01.4∞") == "01.23.∞4");
  CHECK(canonical_name("02.3∞.14") == "02.14.∞3");
  CHECK(canonical_name("14|203") == "14|032");
  for (const char* s : {"ab|cde", "ab|ecd", "ab|dec", "ba|edc", "ba|dce", "ba|ced"}) {
    std::string t = s;
    const std::string map = "abcde";
    for (auto& ch : t) {
      if (ch != '|') ch = static_cast<char>('0' + (std::string("31402").at(map.find(ch)) - '0'));
    }
    CHECK(canonical_name(t) == canonical_name("31|402"));
  }
  CHECK(canonical_name("13|024") != canonical_name("13|042"));
  CHECK(dryad_is_even("01|234"));
  CHECK_FALSE(dryad_is_even("01|243"));
  CHECK(dryad_is_even("10|432"));
  CHECK_THROWS_AS(canonical_name("55"), LeechError);
  CHECK_THROWS_AS(canonical_name("01.02.34"), LeechError);
  CHECK_THROWS_AS(canonical_name("01|23"), LeechError);
  CHECK(permute_name("01|234", {1, 0, 2, 3, 4}) == canonical_name("10|234"));
  CHECK(permute_name("earII", {1, 0, 2, 3, 4}) == "earIII");
  CHECK(permute_name("tail", {1, 0, 2, 3, 4}) == "tail");
}

TEST_CASE("found D6 and its 50 extensions") {
  const auto& d6 = labeled();
  std::vector<LeechPoint> sigma(d6.points.begin(), d6.points.begin() + 6);
  const CoxDiagram g = leech_diagram(sigma, {kD6Names.begin(), kD6Names.end()});
  const DiagramType t = classify(g);
  CHECK(t.to_string() == "D6");
  const EarsTails et = ears_tails(g, {0, 1, 2, 3, 4, 5});
  CHECK(et.tails == std::vector<int>{0});
  CHECK(std::set<int>(et.ears.begin(), et.ears.end()) == std::set<int>{4, 5});
  CHECK(d6.size() == 56);
  for (const auto& p : d6.points) CHECK(leech_contains(p));

  std::map<NodeRole, int> census;
  std::map<ExtensionRole::Kind, int> kinds;
  std::map<std::string, int> enlarged;
  const std::vector<int> s = {0, 1, 2, 3, 4, 5};
  for (int e = 6; e < 56; ++e) {
    ++census[d6.roles[static_cast<std::size_t>(e)]];
    const auto role = extension_role(universe().diagram(), s, e);
    ++kinds[role.kind];
    ++enlarged[role.enlarged];
  }
  CHECK(census[NodeRole::PlainDuad] == 10);
  CHECK(census[NodeRole::InfinityDuad] == 5);
  CHECK(census[NodeRole::Syntheme] == 15);
  CHECK(census[NodeRole::Dryad] == 20);
  CHECK(kinds[ExtensionRole::Kind::A1Extension] == 25);
  CHECK(kinds[ExtensionRole::Kind::TailExtension] == 5);
  CHECK(kinds[ExtensionRole::Kind::EarExtension] == 20);
  CHECK(enlarged == std::map<std::string, int>{{"D6A1", 25}, {"D7", 5}, {"E7", 20}});
  int on_ear2 = 0;
  for (int e = 6; e < 56; ++e) on_ear2 += universe().diagram().label(e, 4).joined();
  CHECK(on_ear2 == 10);
}

TEST_CASE("the cache reproduces a fresh search") {
  CacheOptions off;
  off.enabled = false;
  const LabeledD6 fresh = labeled_d6(off);
  CHECK(fresh.points == labeled().points);
  CHECK(fresh.names == labeled().names);
}

TEST_CASE("syntheme and duad incidences") {
  const auto& d6 = labeled();
  for (int e = 6; e < 56; ++e) {
    const std::string& name = d6.names[static_cast<std::size_t>(e)];
    const NodeRole role = d6.roles[static_cast<std::size_t>(e)];
    std::set<std::string> duads_and_syn;
    for (const auto& n : neighbor_names(name)) {
      const NodeRole r = d6.roles[static_cast<std::size_t>(d6.index(n))];
      if (r == NodeRole::PlainDuad || r == NodeRole::InfinityDuad || r == NodeRole::Syntheme) duads_and_syn.insert(n);
    }
    if (role == NodeRole::Syntheme) {
      // exactly the three duads making up the syntheme
      std::set<std::string> parts;
      std::string rest = name;
      for (std::size_t dot; (dot = rest.find('.')) != std::string::npos; rest = rest.substr(dot + 1)) {
        parts.insert(canonical_name(rest.substr(0, dot)));
      }
      parts.insert(canonical_name(rest));
      CHECK(duads_and_syn == parts);
    } else if (role == NodeRole::PlainDuad || role == NodeRole::InfinityDuad) {
      CHECK(duads_and_syn.size() == 3);
      for (const auto& s : duads_and_syn) CHECK(d6.roles[static_cast<std::size_t>(d6.index(s))] == NodeRole::Syntheme);
    }
  }
}

TEST_CASE("dryad joins") {
  const auto& d6 = labeled();
  std::array<int, 5> p = {0, 1, 2, 3, 4};
  int checked = 0;
  do {
    const auto [a, b, c, d, e] = p;
    const std::string name = dryad(a, b, c, d, e);
    std::set<std::string> want = {
        canonical_name(std::to_string(a) + std::to_string(b)),
        canonical_name("i" + std::to_string(a)),
        canonical_name("i" + std::to_string(b)),
        syn(c, a, d, b, e),
        syn(e, a, c, b, d),
        syn(d, a, e, b, c),
        dryad(d, c, a, b, e),
        dryad(c, e, a, b, d),
        dryad(e, d, a, b, c),
        dryad_is_even(name) ? "earIII" : "earII",
    };
    CHECK(neighbor_names(name) == want);
    ++checked;
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(checked == 120);
  CHECK(neighbor_names("01|234").contains("earIII"));
}

TEST_CASE("dryad graph is the bipartite double cover of the Petersen graph") {
  const auto& d6 = labeled();
  std::vector<int> dryads;
  for (int e = 0; e < 56; ++e) {
    if (d6.roles[static_cast<std::size_t>(e)] == NodeRole::Dryad) dryads.push_back(e);
  }
  const CoxDiagram g = universe().diagram().induced(dryads);

  // Petersen graph: duads of {0..4}, joined when disjoint; two sheets.
  std::vector<std::pair<int, int>> duads;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) duads.emplace_back(i, j);
  CoxDiagram cover(20);
  for (int u = 0; u < 10; ++u) {
    for (int v = 0; v < 10; ++v) {
      const auto [a, b] = duads[static_cast<std::size_t>(u)];
      const auto [c, d] = duads[static_cast<std::size_t>(v)];
      if (a != c && a != d && b != c && b != d) cover.set_label(u, 10 + v, BondLabel::finite(3));
    }
  }
  CHECK(is_isomorphic(g, cover).has_value());
  for (int i = 0; i < 20; ++i) CHECK(g.neighbors(i).size() == 3);
  CHECK(g.components().size() == 1);
}

TEST_CASE("S5 acts on the labeled set; A5 orbits of dryads") {
  const auto& d6 = labeled();
  const CoxDiagram& g = universe().diagram();
  const auto group = s5_elements();
  CHECK(group.size() == 120);
  for (const auto& perm : group) {
    const auto act = node_action(d6, perm);
    bool preserved = true;
    for (int i = 0; i < 56; ++i) {
      for (int j = 0; j < 56; ++j) {
        preserved = preserved && g.label(i, j) == g.label(act[static_cast<std::size_t>(i)], act[static_cast<std::size_t>(j)]);
      }
    }
    CHECK(preserved);
  }
  CHECK(count_automorphisms(g) == 120);

  const int ear2 = d6.index("earII"), ear3 = d6.index("earIII");
  std::set<std::set<int>> orbits;
  for (int e = 0; e < 56; ++e) {
    if (d6.roles[static_cast<std::size_t>(e)] != NodeRole::Dryad) continue;
    std::set<int> orbit;
    for (const auto& perm : group) {
      if (is_even(perm)) orbit.insert(node_action(d6, perm)[static_cast<std::size_t>(e)]);
    }
    orbits.insert(orbit);
  }
  CHECK(orbits.size() == 2);
  for (const auto& orbit : orbits) {
    CHECK(orbit.size() == 10);
    const int ear = g.label(*orbit.begin(), ear2).joined() ? ear2 : ear3;
    for (int x : orbit) CHECK(g.label(x, ear).joined());
  }
  const auto odd = node_action(d6, {1, 0, 2, 3, 4});
  CHECK(odd[static_cast<std::size_t>(ear2)] == ear3);
}

TEST_CASE("two dryads join exactly when in different orbits with disjoint duads") {
  const auto& d6 = labeled();
  const CoxDiagram& g = universe().diagram();
  for (int x = 0; x < 56; ++x) {
    for (int y = x + 1; y < 56; ++y) {
      if (d6.roles[static_cast<std::size_t>(x)] != NodeRole::Dryad || d6.roles[static_cast<std::size_t>(y)] != NodeRole::Dryad) continue;
      const std::string& a = d6.names[static_cast<std::size_t>(x)];
      const std::string& b = d6.names[static_cast<std::size_t>(y)];
      const bool disjoint = a.find(b[0]) > 1 && a.find(b[1]) > 1;
      const bool want = dryad_is_even(a) != dryad_is_even(b) && disjoint;
      CHECK(g.label(x, y).joined() == want);
    }
  }
}

TEST_CASE("extensions are hereditary and the D7 search agrees") {
  const auto& d6 = labeled();
  std::vector<LeechPoint> d7(d6.points.begin(), d6.points.begin() + 6);
  d7.push_back(d6.points[static_cast<std::size_t>(d6.index("∞2"))]);
  const auto full = extensions(d7);
  CHECK(full.size() == 37);
  const std::set<LeechPoint> in_universe(d6.points.begin(), d6.points.end());
  for (const auto& p : full) CHECK(in_universe.contains(p));
  const Face face = make_face(universe().diagram(), d6.indices(chain_stage("D7").nodes));
  CHECK(face.extensions.size() == 37);
  CHECK_THROWS_AS(extensions({}), LeechError);
}

TEST_CASE("chain stages classify as advertised") {
  const auto& d6 = labeled();
  const auto chain = build_chain();
  CHECK(chain.size() == 18);
  CHECK(chain.back().name == "D6D6D4");
  for (const auto& stage : chain) {
    const auto idx = d6.indices(stage.nodes);
    CHECK(classify(universe().diagram().induced(idx)).to_string() == stage.name);
  }
  const auto d4 = d6.indices({"23", "23.01.4∞", "23.04.1∞", "23.14.0∞"});
  CHECK(classify(universe().diagram().induced(d4)).to_string() == "D4");
  CHECK(chain_stage("D7D16").nodes.back() == "02.13.4∞");
  CHECK_THROWS_AS(chain_stage("D7D17"), LeechError);
}

TEST_CASE("face wall counts for D6, D7, E7 and E6") {
  const auto& d6 = labeled();
  CHECK(conway_face(d6, d6.indices(chain_stage("D6").nodes)).roots.size() == 50);
  CHECK(conway_face(d6, d6.indices(chain_stage("D7").nodes)).roots.size() == 37);
  const FaceProjection e7 = conway_face(d6, d6.indices(chain_stage("E7").nodes));
  CHECK(e7.roots.size() == 24);
  CHECK(e7.coxeter());
  int to_e8 = 0;
  for (int e : e7.face.extensions) {
    to_e8 += extension_role(universe().diagram(), e7.face.sigma, e).enlarged == "E8";
  }
  // the three infinity-duads not joined to 01|234 lengthen the tail
  CHECK(to_e8 == 3);
  CHECK(is_redoublable(e7.polyhedron()).has_value());

  const E6Face e6 = conway_face_e6(d6, test_cache());
  CHECK(e6.ext.size() == 36);
  CHECK(e6.face.roots.size() == 36);
  CHECK(e6.face.face.type.to_string() == "E6");
  std::vector<LeechPoint> all = e6.sigma;
  all.insert(all.end(), e6.ext.begin(), e6.ext.end());
  const CoxDiagram local = leech_diagram(all);
  int to_e7 = 0;
  for (int e = 6; e < local.size(); ++e) to_e7 += extension_role(local, {0, 1, 2, 3, 4, 5}, e).enlarged == "E7";
  CHECK(to_e7 == 12);
  // independent count: six at each end of the two long arms
  int at_first = 0, at_last = 0;
  enum_sphere(e6.sigma[5], 6, [&](const LeechPoint& p) {
    for (std::size_t k = 0; k < 5; ++k) {
      if (scaled_distance(p, e6.sigma[k]) != 32) return true;
    }
    ++at_last;
    return true;
  });
  enum_sphere(e6.sigma[5], 4, [&](const LeechPoint& p) {
    if (scaled_distance(p, e6.sigma[0]) != 48) return true;
    for (std::size_t k = 1; k < 5; ++k) {
      if (scaled_distance(p, e6.sigma[k]) != 32) return true;
    }
    ++at_first;
    return true;
  });
  CHECK(at_first == 6);
  CHECK(at_last == 6);
  CHECK(is_redoublable(e6.face.polyhedron()).has_value());
}

TEST_CASE("chain faces: rules, projection, corollary and redoublability") {
  const auto& d6 = labeled();
  const CoxDiagram& g = universe().diagram();
  for (const auto& stage : build_chain()) {
    CAPTURE(stage.name);
    const auto sigma = d6.indices(stage.nodes);
    const FaceProjection f = conway_face(d6, sigma);
    REQUIRE(f.coxeter());
    CHECK(satisfies_face_hypotheses(f.face.type));
    CHECK(face_combinatorial(g, sigma) == f.diagram);
    const Polyhedron p = f.polyhedron();
    CHECK(is_redoublable(p).has_value());

    const DoublingPrediction pred = face_doubling_walls_cor(g, sigma);
    const auto direct = doubling_walls(p);
    for (int w : pred.doubling) CHECK(std::find(direct.begin(), direct.end(), w) != direct.end());
    for (const auto& [i, j, disjoint] : pred.same_component_pairs) {
      CHECK(disjoint == !p.diagram().label(i, j).meets());
    }
  }
}

TEST_CASE("disjoint doubling triples") {
  const auto& d6 = labeled();
  auto face = [&](const std::string& name) { return conway_face_polyhedron(d6, d6.indices(chain_stage(name).nodes)); };
  CHECK_FALSE(disjoint_doubling_triple(face("D6D6")).has_value());
  CHECK_FALSE(disjoint_doubling_triple(face("D7D9")).has_value());
  for (const char* name : {"D6", "D7", "D6D4", "D7D4"}) {
    const Polyhedron p = face(name);
    std::vector<int> dryads;
    for (int i = 0; i < p.size() && dryads.size() < 3; ++i) {
      if (p.names()[static_cast<std::size_t>(i)].find('|') != std::string::npos) dryads.push_back(i);
    }
    CHECK(pairwise_disjoint_doubling(p.diagram(), dryads));
  }
  for (const char* name : {"D7D6", "D7D7", "D7D8"}) {
    const Polyhedron p = face(name);
    const std::vector<int> walls = {p.wall(canonical_name("04.31.2∞")), p.wall(canonical_name("30.14.2∞")),
                                    p.wall(canonical_name("14|203"))};
    CHECK(pairwise_disjoint_doubling(p.diagram(), walls));
  }

  const Polyhedron d6d6 = face("D6D6");
  const std::string w1 = canonical_name("14|203");
  const Polyhedron q1 = double_across(d6d6, d6d6.wall(w1));
  const std::string x1 = canonical_name("04|213");
  CHECK(pairwise_disjoint_doubling(q1.diagram(), {q1.wall("04"), q1.wall(x1), q1.wall(mirror_name(w1, x1))}));

  const Polyhedron d6d6d4 = face("D6D6D4");
  const Polyhedron q2 = double_across(d6d6d4, d6d6d4.wall(x1));
  const std::string y = canonical_name("02.3∞.14");
  CHECK(pairwise_disjoint_doubling(q2.diagram(), {q2.wall("14"), q2.wall(y), q2.wall(mirror_name(x1, y))}));
}

TEST_CASE("D7D12 and D7D16 extend to D7D13 and D7D17") {
  const auto& d6 = labeled();
  for (const auto& [from, to] : {std::pair{"D7D12", "D7D13"}, std::pair{"D7D16", "D7D17"}}) {
    const auto sigma = d6.indices(chain_stage(from).nodes);
    const Face f = make_face(universe().diagram(), sigma);
    int hits = 0;
    for (int e : f.extensions) hits += extension_role(universe().diagram(), sigma, e).enlarged == to;
    CHECK(hits >= 1);
  }
}

TEST_CASE("D7D11 face has a symmetry not induced from the D6 stabilizer") {
  const auto& d6 = labeled();
  const auto sigma = d6.indices(chain_stage("D7D11").nodes);
  const Polyhedron p = conway_face_polyhedron(d6, sigma);
  const auto aut = count_automorphisms(p.diagram());
  const int induced = induced_face_symmetries(d6, sigma);
  CHECK(aut > static_cast<std::uint64_t>(induced));
  CHECK(induced_face_symmetries(d6, d6.indices(chain_stage("D6").nodes)) == 120);
}

TEST_CASE("faces by name") {
  const Polyhedron d7 = conway_face_by_name("D7", test_cache());
  CHECK(d7.size() == 37);
  CHECK(d7.wall(canonical_name("01|234")) >= 0);
  CHECK_THROWS_AS(d7.wall(canonical_name("∞3")), PolyhedronError);
  CHECK_THROWS_AS(conway_face_by_name("D5", test_cache()), LeechError);
}
