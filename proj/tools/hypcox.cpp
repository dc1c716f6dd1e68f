// Command-line front end. Results go to stdout; errors are JSON objects on
// stderr. Exit status 0 ok, 1 verification failed or runtime error, 2 usage.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hypcox/acceptance.hpp"
#include "hypcox/catalog.hpp"
#include "hypcox/grow.hpp"
#include "hypcox/io.hpp"
#include "hypcox/leech.hpp"

using namespace hypcox;

namespace {

struct Globals {
  int workers = 0;
  bool no_cache = false;
  std::string cache_dir;
  bool json = false;

  CacheOptions cache() const { return {!no_cache, cache_dir}; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

/// "catalog:NAME", "conway:FACE" or a polyhedron JSON file.
Polyhedron load_polyhedron(const std::string& spec, const Globals& g) {
  if (spec.starts_with("catalog:")) {
    auto entry = catalog_get(spec.substr(8));
    if (!entry.polyhedron) throw UsageError(spec + " is a quadratic form, not a polyhedron");
    return *entry.polyhedron;
  }
  if (spec.starts_with("conway:")) return conway_face_by_name(spec.substr(7), g.cache(), g.workers);
  return polyhedron_from_json(read_json_file(spec));
}

int wall_index(const Polyhedron& p, const std::string& name) {
  const std::string n = [&] {
    try {
      return canonical_name(name);
    } catch (const LeechError&) {
      return name;
    }
  }();
  for (const auto& candidate : {name, n}) {
    if (auto i = p.diagram().index_of(candidate)) return *i;
  }
  throw UsageError("no wall named '" + name + "'");
}

std::vector<int> wall_indices(const Polyhedron& p, const std::string& list) {
  std::vector<int> out;
  for (const auto& w : split(list)) out.push_back(wall_index(p, w));
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit_polyhedron(const Polyhedron& p, const std::string& out_path, const Globals& g) {
  if (!out_path.empty()) write_file(out_path, to_json(p).dump(1) + "\n");
  if (g.json) {
    std::cout << Json{{"walls", p.size()}, {"names", p.names()}, {"diagram", to_json(p.diagram())}}.dump() << "\n";
  } else {
    std::cout << "walls: " << p.size() << "\n";
  }
}

std::string names_of(const CoxDiagram& d, const std::vector<int>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? " " : "") + d.name(idx[i]);
  return s;
}

int cmd_diagram(const std::string& poly, const std::string& dot, const std::string& table, const Globals& g) {
  const Polyhedron p = load_polyhedron(poly, g);
  if (!dot.empty()) write_file(dot, export_dot(p.diagram()));
  if (!table.empty()) write_file(table, bond_table(p.diagram()));
  if (g.json) {
    std::cout << to_json(p.diagram()).dump() << "\n";
  } else {
    std::cout << "walls: " << p.size() << "\n" << bond_table(p.diagram());
  }
  return 0;
}

int cmd_faces(const std::string& poly, const std::string& sigma_text, const std::string& method,
              const std::string& out_path, const Globals& g) {
  const Polyhedron p = load_polyhedron(poly, g);
  const std::vector<int> sigma = wall_indices(p, sigma_text);
  std::optional<FaceProjection> proj;
  std::optional<CoxDiagram> rules;
  if (method == "proj" || method == "both") proj = face_projection(p, sigma);
  std::string rules_skipped;
  if (method == "rules") rules = face_combinatorial(p.diagram(), sigma);
  if (method == "both") {
    try {
      rules = face_combinatorial(p.diagram(), sigma);
    } catch (const PolyhedronError& e) {
      rules_skipped = e.what();
    }
  }
  const CoxDiagram& shown = proj ? proj->diagram : *rules;
  const Face face = make_face(p.diagram(), sigma);
  const bool agree = !(proj && rules) || *rules == proj->diagram;
  if (proj && !out_path.empty()) write_file(out_path, to_json(proj->polyhedron()).dump(1) + "\n");
  if (g.json) {
    Json j{{"type", face.type.to_string()}, {"walls", shown.size()}, {"diagram", to_json(shown)}};
    if (proj) j["coxeter"] = proj->coxeter();
    if (proj && rules) j["methods_agree"] = agree;
    if (!rules_skipped.empty()) j["rules_not_applicable"] = rules_skipped;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "sigma: " << face.type.to_string() << "\nwalls: " << shown.size() << "\n";
    if (proj) std::cout << "coxeter: " << (proj->coxeter() ? "yes" : "no") << "\n";
    if (proj && rules) std::cout << "methods agree: " << (agree ? "yes" : "no") << "\n";
    if (!rules_skipped.empty()) std::cout << "rules not applicable: " << rules_skipped << "\n";
    std::cout << "names: " << names_of(shown, [&] {
      std::vector<int> all(static_cast<std::size_t>(shown.size()));
      for (int i = 0; i < shown.size(); ++i) all[static_cast<std::size_t>(i)] = i;
      return all;
    }()) << "\n"
              << bond_table(shown);
  }
  return agree && (!proj || proj->coxeter()) ? 0 : 1;
}

int cmd_double(const std::string& poly, const std::string& wall, const std::string& out_path, const Globals& g) {
  const Polyhedron p = load_polyhedron(poly, g);
  emit_polyhedron(double_across(p, wall_index(p, wall)), out_path, g);
  return 0;
}

int cmd_redoublable(const std::string& poly, const Globals& g) {
  const Polyhedron p = load_polyhedron(poly, g);
  const auto pair = is_redoublable(p);
  if (g.json) {
    Json j{{"redoublable", pair.has_value()}};
    if (pair) j["walls"] = {p.names()[static_cast<std::size_t>(pair->first)], p.names()[static_cast<std::size_t>(pair->second)]};
    std::cout << j.dump() << "\n";
  } else if (pair) {
    std::cout << "redoublable: yes (" << names_of(p.diagram(), {pair->first, pair->second}) << ")\n";
  } else {
    std::cout << "redoublable: no\n";
  }
  return 0;
}

int cmd_triple(const std::string& poly, const Globals& g) {
  const Polyhedron p = load_polyhedron(poly, g);
  const auto t = disjoint_doubling_triple(p);
  if (g.json) {
    Json j{{"triple", nullptr}};
    if (t) j["triple"] = {p.names()[static_cast<std::size_t>((*t)[0])], p.names()[static_cast<std::size_t>((*t)[1])],
                          p.names()[static_cast<std::size_t>((*t)[2])]};
    std::cout << j.dump() << "\n";
  } else if (t) {
    std::cout << "triple: " << names_of(p.diagram(), {(*t)[0], (*t)[1], (*t)[2]}) << "\n";
  } else {
    std::cout << "triple: none\n";
  }
  return 0;
}

int cmd_leech(const std::string& what, const std::string& name, const std::string& out_path, const Globals& g) {
  if (what == "d6") {
    const LabeledD6 d6 = labeled_d6(g.cache(), g.workers);
    if (g.json) {
      Json nodes = Json::array();
      for (int i = 0; i < d6.size(); ++i) {
        const auto u = static_cast<std::size_t>(i);
        nodes.push_back({{"name", d6.names[u]}, {"role", to_string(d6.roles[u])}, {"point", to_json(d6.points[u])}});
      }
      std::cout << Json{{"nodes", nodes}}.dump() << "\n";
    } else {
      for (int i = 0; i < d6.size(); ++i) {
        const auto u = static_cast<std::size_t>(i);
        std::cout << d6.names[u] << "\t" << to_string(d6.roles[u]) << "\t" << to_string(d6.points[u]) << "\n";
      }
    }
    return 0;
  }
  if (what == "chain") {
    const LabeledD6 d6 = labeled_d6(g.cache(), g.workers);
    Json rows = Json::array();
    for (const auto& stage : build_chain()) {
      const Polyhedron p = conway_face_polyhedron(d6, d6.indices(stage.nodes));
      const bool redoublable = is_redoublable(p).has_value();
      const bool triple = disjoint_doubling_triple(p).has_value();
      if (g.json) {
        rows.push_back({{"name", stage.name}, {"walls", p.size()}, {"redoublable", redoublable}, {"triple", triple}});
      } else {
        std::cout << stage.name << "\twalls: " << p.size() << "\tredoublable: " << (redoublable ? "yes" : "no")
                  << "\ttriple: " << (triple ? "yes" : "no") << "\n";
      }
    }
    if (g.json) std::cout << rows.dump() << "\n";
    return 0;
  }
  if (what == "face") {
    if (name.empty()) throw UsageError("leech face needs a sigma name such as D7");
    emit_polyhedron(conway_face_by_name(name, g.cache(), g.workers), out_path, g);
    return 0;
  }
  throw UsageError("leech expects d6, chain or face");
}

int cmd_count_trees(int max_edges, const Globals& g) {
  const auto counts = count_trivalent_trees(max_edges);
  std::vector<std::uint64_t> odd;
  for (std::size_t e = 0; e < counts.size(); e += 2) odd.push_back(counts[e]);
  auto join = [](const std::vector<std::uint64_t>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
  };
  if (g.json) {
    std::cout << Json{{"by_edges", counts}, {"odd_edges", odd}}.dump() << "\n";
  } else {
    std::cout << "edges 1.." << max_edges << ": " << join(counts) << "\nodd edges: " << join(odd) << "\n";
  }
  return 0;
}

int cmd_tree_double(const std::string& poly, const std::string& walls, const std::string& tree_path, int path,
                    int max_walls, const std::string& out_path, const Globals& g) {
  const Polyhedron p = load_polyhedron(poly, g);
  const auto w = wall_indices(p, walls);
  DoublingTree t;
  if (!tree_path.empty()) {
    t = tree_from_json(read_json_file(tree_path));
  } else {
    t = DoublingTree::alternating_path(static_cast<int>(w.size()), path);
  }
  const auto r = tree_double(p, w, t, {max_walls});
  if (!out_path.empty()) write_file(out_path, to_json(r.polyhedron).dump(1) + "\n");
  if (g.json) {
    std::cout << Json{{"copies", r.copies}, {"raw_roots", r.raw_roots}, {"walls", r.polyhedron.size()}}.dump() << "\n";
  } else {
    std::cout << "copies: " << r.copies << "\nraw roots: " << r.raw_roots << "\nwalls: " << r.polyhedron.size() << "\n";
  }
  return 0;
}

int cmd_index(int index, const std::string& poly, const std::string& walls, int max_walls,
              const std::string& out_path, const Globals& g) {
  const Polyhedron p = load_polyhedron(poly, g);
  const auto r = index_subgroup(p, wall_indices(p, walls), index, {max_walls});
  if (!out_path.empty()) write_file(out_path, to_json(r.polyhedron).dump(1) + "\n");
  if (g.json) {
    std::cout << Json{{"index", index}, {"copies", r.copies}, {"walls", r.polyhedron.size()}}.dump() << "\n";
  } else {
    std::cout << "index: " << index << "\ncopies: " << r.copies << "\nwalls: " << r.polyhedron.size() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& fixtures, const std::vector<int>& only, std::uint64_t seed, const Globals& g) {
  AcceptanceOptions options;
  options.cache = g.cache();
  options.workers = g.workers > 0 ? g.workers : 8;
  options.fixture_dir = fixtures;
  options.only = only;
  options.seed = seed;
  bool ok = true;
  run_acceptance(options, [&](const CriterionResult& r) {
    ok = ok && r.pass;
    if (g.json) {
      std::cout << Json{{"criterion", r.id}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}}.dump()
                << std::endl;
    } else {
      std::cout << format_line(r) << std::endl;
    }
  });
  return ok ? 0 : 1;
}

void error_json(const std::string& kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter polyhedra: diagrams, faces, doubling, Conway's polyhedron and tree growth"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--workers", g.workers, "OpenMP threads for enumeration (0: default)")->check(CLI::NonNegativeNumber);
  app.add_flag("--no-cache", g.no_cache, "Recompute Leech results instead of using the disk cache");
  app.add_option("--cache-dir", g.cache_dir, "Cache directory (default $HYPCOX_CACHE_DIR or ~/.cache/hypcox)");
  app.add_flag("--json", g.json, "Machine-readable output");

  std::string poly, dot, table, sigma, method = "proj", wall, out, leech_what, leech_name, walls = "9,19,25", tree;
  std::string fixtures = HYPCOX_FIXTURE_DIR;
  std::vector<int> only;
  std::uint64_t seed = AcceptanceOptions{}.seed;
  int max_edges = 15, index = 1, path = 3, max_walls = TreeDoubleOptions{}.max_walls;
  std::function<int()> run;

  auto* diagram = app.add_subcommand("diagram", "Bond table (or JSON) of a polyhedron's diagram");
  diagram->add_option("poly", poly, "poly.json, catalog:NAME or conway:FACE")->required();
  diagram->add_option("--dot", dot, "Also write a DOT file");
  diagram->add_option("--table", table, "Also write the bond table");
  diagram->callback([&] { run = [&] { return cmd_diagram(poly, dot, table, g); }; });

  auto* faces = app.add_subcommand("faces", "Face of a polyhedron at a spherical sigma");
  faces->add_option("poly", poly)->required();
  faces->add_option("--sigma", sigma, "Comma-separated wall names")->required();
  faces->add_option("--method", method)->check(CLI::IsMember({"proj", "rules", "both"}));
  faces->add_option("--out", out, "Write the projected face as polyhedron JSON");
  faces->callback([&] { run = [&] { return cmd_faces(poly, sigma, method, out, g); }; });

  auto* dbl = app.add_subcommand("double", "Double a polyhedron across a doubling wall");
  dbl->add_option("poly", poly)->required();
  dbl->add_option("--wall", wall)->required();
  dbl->add_option("--out", out);
  dbl->callback([&] { run = [&] { return cmd_double(poly, wall, out, g); }; });

  auto* redbl = app.add_subcommand("redoublable", "Find two non-meeting doubling walls");
  redbl->add_option("poly", poly)->required();
  redbl->callback([&] { run = [&] { return cmd_redoublable(poly, g); }; });

  auto* triple = app.add_subcommand("triple", "Find three pairwise non-meeting doubling walls");
  triple->add_option("poly", poly)->required();
  triple->callback([&] { run = [&] { return cmd_triple(poly, g); }; });

  auto* leech = app.add_subcommand("leech", "Conway's polyhedron: d6, chain, or face NAME");
  leech->add_option("what", leech_what)->required()->check(CLI::IsMember({"d6", "chain", "face"}));
  leech->add_option("name", leech_name, "Face name for 'face', e.g. D7, D7D12, E6");
  leech->add_option("--out", out);
  leech->callback([&] { run = [&] { return cmd_leech(leech_what, leech_name, out, g); }; });

  auto* grow = app.add_subcommand("grow", "Tree doubling, index subgroups and trivalent tree counts");
  grow->require_subcommand(1);
  auto* count = grow->add_subcommand("count-trees", "Trivalent tree classes by edge count");
  count->add_option("--max-edges", max_edges)->check(CLI::PositiveNumber);
  count->callback([&] { run = [&] { return cmd_count_trees(max_edges, g); }; });
  auto* td = grow->add_subcommand("tree-double", "Union of copies along a doubling tree");
  td->add_option("poly", poly)->default_val("catalog:bugaenko_h6");
  td->add_option("--walls", walls)->default_val("9,19,25");
  td->add_option("--tree", tree, "Tree JSON {k, parent, gen}");
  td->add_option("--path", path, "Alternating path with this many vertices (without --tree)")->check(CLI::PositiveNumber);
  td->add_option("--max-walls", max_walls);
  td->add_option("--out", out);
  td->callback([&] { run = [&] { return cmd_tree_double(poly, walls, tree, path, max_walls, out, g); }; });
  auto* idx = grow->add_subcommand("index", "Reflection subgroup of index I");
  idx->add_option("I", index)->required()->check(CLI::PositiveNumber);
  idx->add_option("poly", poly)->default_val("catalog:bugaenko_h6");
  idx->add_option("--walls", walls)->default_val("9,19");
  idx->add_option("--max-walls", max_walls);
  idx->add_option("--out", out);
  idx->callback([&] { run = [&] { return cmd_index(index, poly, walls, max_walls, out, g); }; });

  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance checks");
  verify->add_option("--fixtures", fixtures, "Directory with bugaenko_h6_labels.txt");
  verify->add_option("--only", only, "Criteria to run")->delimiter(',');
  verify->add_option("--seed", seed);
  verify->callback([&] { run = [&] { return cmd_verify(fixtures, only, seed, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    error_json("usage", e.what());
    return 2;
  }
  try {
    return run();
  } catch (const UsageError& e) {
    error_json("usage", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    error_json("usage", e.what());
    return 2;
  } catch (const FormatError& e) {
    error_json("format", e.what());
    return 2;
  } catch (const Json::exception& e) {
    error_json("format", e.what());
    return 2;
  } catch (const LeechError& e) {
    error_json("leech", e.what());
    return 1;
  } catch (const PolyhedronError& e) {
    error_json("polyhedron", e.what());
    return 1;
  } catch (const std::exception& e) {
    error_json("error", e.what());
    return 1;
  }
}
