#include "hypcox/leech.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hypcox/catalog.hpp"

namespace hypcox {

// ---------------------------------------------------------------- Golay code

namespace {

constexpr std::uint32_t kGolayPoly = 0xC75;  // bits 0,2,4,5,6,10,11
constexpr std::uint32_t kAllOnes = (1u << 24) - 1;

}  // namespace

GolayCode::GolayCode() : table_((1u << 24) / 64, 0) {
  for (int i = 0; i < 12; ++i) {
    std::uint32_t w = kGolayPoly << i;
    if (std::popcount(w) % 2 == 1) w |= 1u << 23;
    gens_[static_cast<std::size_t>(i)] = w;
  }
  words_.reserve(4096);
  for (std::uint32_t mask = 0; mask < 4096; ++mask) {
    std::uint32_t w = 0;
    for (int i = 0; i < 12; ++i) {
      if (mask >> i & 1u) w ^= gens_[static_cast<std::size_t>(i)];
    }
    words_.push_back(w);
    table_[w >> 6] |= std::uint64_t{1} << (w & 63);
  }
}

const GolayCode& GolayCode::instance() {
  static const GolayCode code;
  return code;
}

bool GolayCode::contains(std::uint32_t word) const {
  if (word > kAllOnes) return false;
  return (table_[word >> 6] >> (word & 63) & 1u) != 0;
}

std::array<int, 25> GolayCode::weight_distribution() const {
  std::array<int, 25> dist{};
  for (auto w : words_) ++dist[static_cast<std::size_t>(std::popcount(w))];
  return dist;
}

std::uint64_t GolayCode::checksum() const {
  std::string text;
  for (auto g : gens_) text += std::to_string(g) + "\n";
  return fnv1a(text);
}

bool golay_contains(std::uint32_t word) { return GolayCode::instance().contains(word); }

// ------------------------------------------------------------ lattice points

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

bool leech_contains(const LeechPoint& x) {
  const int m = mod(x[0], 2);
  std::uint32_t pattern = 0;
  int sum = 0;
  for (int i = 0; i < 24; ++i) {
    if (mod(x[static_cast<std::size_t>(i)], 2) != m) return false;
    const int r = mod(x[static_cast<std::size_t>(i)], 4);
    if ((m == 0 && r == 2) || (m == 1 && r == 1)) pattern |= 1u << i;
    sum += x[static_cast<std::size_t>(i)];
  }
  return golay_contains(pattern) && mod(sum, 8) == 4 * m;
}

int scaled_norm(const LeechPoint& x) {
  int s = 0;
  for (int v : x) s += v * v;
  return s;
}

int scaled_distance(const LeechPoint& x, const LeechPoint& y) {
  int s = 0;
  for (std::size_t i = 0; i < 24; ++i) {
    const int d = x[i] - y[i];
    s += d * d;
  }
  return s;
}

LeechPoint operator+(const LeechPoint& x, const LeechPoint& y) {
  LeechPoint r;
  for (std::size_t i = 0; i < 24; ++i) r[i] = x[i] + y[i];
  return r;
}

LeechPoint operator-(const LeechPoint& x, const LeechPoint& y) {
  LeechPoint r;
  for (std::size_t i = 0; i < 24; ++i) r[i] = x[i] - y[i];
  return r;
}

std::string to_string(const LeechPoint& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < 24; ++i) {
    if (i) s += ",";
    s += std::to_string(x[i]);
  }
  return s + ")";
}

// ------------------------------------------------------- shell enumeration

namespace {

// Values v with v = r (mod 4), |v| <= 8, by increasing |v|.
const std::array<std::vector<int>, 4> kResidueValues = {{
    {0, -4, 4, -8, 8},
    {1, -3, 5, -7},
    {-2, 2, -6, 6},
    {-1, 3, -5, 7},
}};
constexpr std::array<int, 4> kMinSquare = {0, 1, 4, 1};

int checked_scaled(int norm) {
  if (norm < 4 || norm > 8 || norm % 2 != 0) {
    throw LeechError("shell norm must be 4, 6 or 8, got " + std::to_string(norm));
  }
  return 8 * norm;
}

// Depth-first search over one codeword and one parity class m: coordinates in
// the codeword are 2 (m = 0) or 1 (m = 1) mod 4, the others 0 or 3 mod 4.
template <class Visit>
class ShellSearch {
 public:
  ShellSearch(int target, std::uint32_t word, int m, Visit& visit) : target_(target), want_(4 * m), visit_(visit) {
    for (int i = 0; i < 24; ++i) {
      const bool in = (word >> i & 1u) != 0;
      const int r = m == 0 ? (in ? 2 : 0) : (in ? 1 : 3);
      vals_[static_cast<std::size_t>(i)] = &kResidueValues[static_cast<std::size_t>(r)];
      res_[static_cast<std::size_t>(i)] = r;
    }
    suffix_[24] = 0;
    for (int i = 23; i >= 0; --i) {
      suffix_[static_cast<std::size_t>(i)] =
          suffix_[static_cast<std::size_t>(i) + 1] + kMinSquare[static_cast<std::size_t>(res_[static_cast<std::size_t>(i)])];
    }
  }

  bool run() {
    if (suffix_[0] > target_) return true;
    return rec(0, target_, 0);
  }

 private:
  bool rec(int i, int remaining, int sum) {
    const auto ui = static_cast<std::size_t>(i);
    if (i == 24) {
      if (remaining == 0 && mod(sum, 8) == want_) return visit_(x_);
      return true;
    }
    const int budget = remaining - suffix_[ui + 1];
    for (int v : *vals_[ui]) {
      const int s = v * v;
      if (s > budget) break;
      if (i == 23 && s != remaining) continue;
      x_[ui] = v;
      if (!rec(i + 1, remaining - s, sum + v)) return false;
    }
    return true;
  }

  int target_;
  int want_;
  Visit& visit_;
  std::array<const std::vector<int>*, 24> vals_{};
  std::array<int, 24> res_{};
  std::array<int, 25> suffix_{};
  LeechPoint x_{};
};

template <class Visit>
bool search_task(int target, std::size_t task, Visit& visit) {
  const auto& words = GolayCode::instance().words();
  ShellSearch<Visit> s(target, words[task / 2], static_cast<int>(task % 2), visit);
  return s.run();
}

constexpr std::size_t kTasks = 2 * 4096;

}  // namespace

bool shell_for_each(int norm, const PointVisitor& visit) {
  const int target = checked_scaled(norm);
  auto call = [&](const LeechPoint& x) { return visit(x); };
  for (std::size_t t = 0; t < kTasks; ++t) {
    if (!search_task(target, t, call)) return false;
  }
  return true;
}

bool enum_sphere(const LeechPoint& center, int norm, const PointVisitor& visit) {
  return shell_for_each(norm, [&](const LeechPoint& x) { return visit(center + x); });
}

std::vector<LeechPoint> shell_collect(int norm, const std::function<bool(const LeechPoint&)>& keep, int workers) {
  const int target = checked_scaled(norm);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  std::vector<std::vector<LeechPoint>> parts(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
  {
    auto& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
    auto call = [&](const LeechPoint& x) {
      if (keep(x)) mine.push_back(x);
      return true;
    };
#pragma omp for schedule(dynamic, 16)
    for (std::size_t t = 0; t < kTasks; ++t) search_task(target, t, call);
  }
  std::vector<LeechPoint> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t shell_count(int norm, int workers) {
  const int target = checked_scaled(norm);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads) reduction(+ : total)
  for (std::size_t t = 0; t < kTasks; ++t) {
    std::uint64_t n = 0;
    auto call = [&](const LeechPoint&) {
      ++n;
      return true;
    };
    search_task(target, t, call);
    total += n;
  }
  return total;
}

std::uint64_t shell_count_serial(int norm) {
  const int target = checked_scaled(norm);
  std::uint64_t n = 0;
  auto call = [&](const LeechPoint&) {
    ++n;
    return true;
  };
  for (std::size_t t = 0; t < kTasks; ++t) search_task(target, t, call);
  return n;
}

// ------------------------------------------------------ Conway's polyhedron

BondLabel bond(const LeechPoint& x, const LeechPoint& y) {
  const int d = scaled_distance(x, y);
  if (d < 32) throw LeechError("lattice points at squared distance " + std::to_string(d) + "/8 < 4");
  if (d == 32) return BondLabel::orthogonal();
  if (d == 48) return BondLabel::finite(3);
  if (d == 64) return BondLabel::parallel();
  return BondLabel::ultraparallel();
}

const QSpace& leech_space() {
  static const QSpace space = [] {
    std::vector<FieldScalar> diag(24, FieldScalar::rational(1, 8));
    diag.push_back(FieldScalar::rational(1, 2));
    diag.push_back(FieldScalar::rational(-1, 2));
    return QSpace(std::move(diag));
  }();
  return space;
}

QVector leech_root(const LeechPoint& x) {
  const int n = scaled_norm(x);
  if (n % 16 != 0) throw LeechError("not a lattice point: " + to_string(x));
  QVector r{std::vector<FieldScalar>(26)};
  for (std::size_t i = 0; i < 24; ++i) r[i] = FieldScalar(static_cast<long>(x[i]));
  r[24] = FieldScalar(static_cast<long>(2 - n / 16));
  r[25] = FieldScalar(static_cast<long>(n / 16));
  return r;
}

CoxDiagram leech_diagram(const std::vector<LeechPoint>& points, std::vector<std::string> names) {
  CoxDiagram d = names.empty() ? CoxDiagram(static_cast<int>(points.size())) : CoxDiagram(std::move(names));
  if (d.size() != static_cast<int>(points.size())) throw LeechError("name count does not match point count");
  for (int i = 0; i < d.size(); ++i) {
    for (int j = i + 1; j < d.size(); ++j) {
      d.set_label(i, j, bond(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]));
    }
  }
  return d;
}

namespace {

// D6 edges in kD6Names order: tail-n2-n3-branch, branch-earII, branch-earIII.
bool d6_joined(int i, int j) {
  static const std::set<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}};
  return edges.contains({std::min(i, j), std::max(i, j)});
}

bool find_d6_rec(std::array<LeechPoint, 6>& out, const std::array<int, 6>& order, std::size_t level) {
  if (level == order.size()) return true;
  const int node = order[level];
  const int to_branch = d6_joined(node, 3) ? 6 : 4;
  bool found = false;
  enum_sphere(out[3], to_branch, [&](const LeechPoint& p) {
    for (std::size_t k = 1; k < level; ++k) {
      const int other = order[k];
      const int want = d6_joined(node, other) ? 48 : 32;
      if (scaled_distance(p, out[static_cast<std::size_t>(other)]) != want) return true;
    }
    out[static_cast<std::size_t>(node)] = p;
    found = find_d6_rec(out, order, level + 1);
    return !found;
  });
  return found;
}

}  // namespace

std::array<LeechPoint, 6> find_d6() {
  std::array<LeechPoint, 6> out{};
  const std::array<int, 6> order = {3, 2, 4, 5, 1, 0};
  if (!find_d6_rec(out, order, 1)) throw LeechError("no D6 found");
  return out;
}

std::vector<LeechPoint> extensions(const std::vector<LeechPoint>& sigma, int workers) {
  if (sigma.empty()) throw LeechError("extensions of the empty diagram are the whole lattice");
  if (!classify(leech_diagram(sigma)).spherical()) throw LeechError("sigma is not spherical");
  const LeechPoint& anchor = sigma.front();
  auto keep = [&](const LeechPoint& offset) {
    const LeechPoint p = anchor + offset;
    for (std::size_t k = 1; k < sigma.size(); ++k) {
      const int d = scaled_distance(p, sigma[k]);
      if (d != 32 && d != 48) return false;
    }
    return true;
  };
  std::vector<LeechPoint> candidates;
  for (int norm : {4, 6}) {
    for (const auto& off : shell_collect(norm, keep, workers)) candidates.push_back(anchor + off);
  }
  std::vector<LeechPoint> out;
  std::vector<LeechPoint> all = sigma;
  all.emplace_back();
  for (const auto& c : candidates) {
    all.back() = c;
    if (classify(leech_diagram(all)).spherical()) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(NodeRole role) {
  switch (role) {
    case NodeRole::D6: return "D6";
    case NodeRole::PlainDuad: return "duad";
    case NodeRole::InfinityDuad: return "infinity-duad";
    case NodeRole::Syntheme: return "syntheme";
    case NodeRole::Dryad: return "dryad";
  }
  return "?";
}

ExtensionRole extension_role(const CoxDiagram& diagram, const std::vector<int>& sigma, int ext) {
  ExtensionRole role;
  const DiagramType type = classify(diagram.induced(sigma));
  std::vector<int> nodes = sigma;
  nodes.push_back(ext);
  role.enlarged = classify(diagram.induced(nodes)).to_string();
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    if (!diagram.label(ext, sigma[k]).joined()) continue;
    if (role.node >= 0) return role;  // joined to several nodes
    role.node = sigma[k];
    for (std::size_t c = 0; c < type.components.size(); ++c) {
      const auto& cn = type.components[c].nodes;
      if (std::find(cn.begin(), cn.end(), static_cast<int>(k)) != cn.end()) role.component = static_cast<int>(c);
    }
  }
  if (role.node < 0) {
    role.kind = ExtensionRole::Kind::A1Extension;
    return role;
  }
  const ComponentType& comp = type.components[static_cast<std::size_t>(role.component)];
  if (comp.family != Family::D && comp.family != Family::E) return role;
  std::vector<int> comp_nodes;
  for (int k : comp.nodes) comp_nodes.push_back(sigma[static_cast<std::size_t>(k)]);
  const EarsTails et = ears_tails(diagram, comp_nodes);
  if (std::find(et.ears.begin(), et.ears.end(), role.node) != et.ears.end()) {
    role.kind = ExtensionRole::Kind::EarExtension;
  } else if (std::find(et.tails.begin(), et.tails.end(), role.node) != et.tails.end()) {
    role.kind = ExtensionRole::Kind::TailExtension;
  }
  return role;
}

// ---------------------------------------------------------------- naming

namespace {

constexpr int kInf = 5;

struct Parsed {
  NodeRole role = NodeRole::D6;
  std::array<int, 2> duad{};                    // sorted, kInf last
  std::array<std::array<int, 2>, 3> syntheme{};  // sorted duads
  std::array<int, 5> dryad{};                   // a b | c d e
  std::string d6;
};

std::string symbol(int x) { return x == kInf ? "∞" : std::to_string(x); }

std::string duad_text(std::array<int, 2> d) {
  if (d[1] == kInf) return "∞" + std::to_string(d[0]);
  return symbol(d[0]) + symbol(d[1]);
}

std::array<int, 2> make_duad(int a, int b) { return a < b ? std::array<int, 2>{a, b} : std::array<int, 2>{b, a}; }

// Plain duads in increasing order, then the infinity-duad.
void sort_syntheme(std::array<std::array<int, 2>, 3>& parts) {
  std::sort(parts.begin(), parts.end(), [](const auto& u, const auto& v) {
    return std::pair(u[1] == kInf, u) < std::pair(v[1] == kInf, v);
  });
}

std::string dryad_text(const std::array<int, 5>& p) {
  std::string s;
  for (int i = 0; i < 5; ++i) {
    if (i == 2) s += "|";
    s += std::to_string(p[static_cast<std::size_t>(i)]);
  }
  return s;
}

std::string canonical_dryad(const std::array<int, 5>& p) {
  const int a = p[0], b = p[1], c = p[2], d = p[3], e = p[4];
  const std::array<std::array<int, 5>, 6> forms = {{
      {a, b, c, d, e}, {a, b, e, c, d}, {a, b, d, e, c},
      {b, a, e, d, c}, {b, a, d, c, e}, {b, a, c, e, d},
  }};
  std::string best;
  for (const auto& f : forms) {
    std::string t = dryad_text(f);
    if (best.empty() || t < best) best = t;
  }
  return best;
}

std::string text(const Parsed& p) {
  switch (p.role) {
    case NodeRole::D6: return p.d6;
    case NodeRole::PlainDuad:
    case NodeRole::InfinityDuad: return duad_text(p.duad);
    case NodeRole::Syntheme:
      return duad_text(p.syntheme[0]) + "." + duad_text(p.syntheme[1]) + "." + duad_text(p.syntheme[2]);
    case NodeRole::Dryad: return canonical_dryad(p.dryad);
  }
  return {};
}

std::vector<int> parse_symbols(const std::string& s, const std::string& whole) {
  std::vector<int> out;
  for (std::size_t i = 0; i < s.size();) {
    if (s.compare(i, 3, "∞") == 0) {
      out.push_back(kInf);
      i += 3;
    } else if (s[i] == 'i' || s[i] == 'I') {
      out.push_back(kInf);
      ++i;
    } else if (s[i] >= '0' && s[i] <= '4') {
      out.push_back(s[i] - '0');
      ++i;
    } else {
      throw LeechError("bad node name: " + whole);
    }
  }
  return out;
}

Parsed parse_name(const std::string& name) {
  Parsed p;
  for (const auto& d6 : kD6Names) {
    if (name == d6) {
      p.d6 = name;
      return p;
    }
  }
  if (const auto bar = name.find('|'); bar != std::string::npos) {
    const auto left = parse_symbols(name.substr(0, bar), name);
    const auto right = parse_symbols(name.substr(bar + 1), name);
    if (left.size() != 2 || right.size() != 3) throw LeechError("bad dryad name: " + name);
    std::array<int, 5> perm{left[0], left[1], right[0], right[1], right[2]};
    std::array<int, 5> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 5>{0, 1, 2, 3, 4}) throw LeechError("bad dryad name: " + name);
    p.role = NodeRole::Dryad;
    p.dryad = perm;
    return p;
  }
  if (name.find('.') != std::string::npos) {
    std::vector<std::array<int, 2>> parts;
    std::stringstream ss(name);
    std::string part;
    while (std::getline(ss, part, '.')) {
      const auto sym = parse_symbols(part, name);
      if (sym.size() != 2 || sym[0] == sym[1]) throw LeechError("bad syntheme name: " + name);
      parts.push_back(make_duad(sym[0], sym[1]));
    }
    if (parts.size() != 3) throw LeechError("bad syntheme name: " + name);
    std::set<int> seen;
    for (const auto& d : parts) seen.insert(d.begin(), d.end());
    if (seen.size() != 6) throw LeechError("bad syntheme name: " + name);
    p.role = NodeRole::Syntheme;
    std::copy(parts.begin(), parts.end(), p.syntheme.begin());
    sort_syntheme(p.syntheme);
    return p;
  }
  const auto sym = parse_symbols(name, name);
  if (sym.size() != 2 || sym[0] == sym[1]) throw LeechError("bad node name: " + name);
  p.duad = make_duad(sym[0], sym[1]);
  p.role = p.duad[1] == kInf ? NodeRole::InfinityDuad : NodeRole::PlainDuad;
  return p;
}

bool contains_duad(const Parsed& s, std::array<int, 2> d) {
  return std::find(s.syntheme.begin(), s.syntheme.end(), d) != s.syntheme.end();
}

Parsed syntheme_of(std::array<int, 2> x, std::array<int, 2> y, std::array<int, 2> z) {
  std::array<std::array<int, 2>, 3> parts = {x, y, z};
  sort_syntheme(parts);
  Parsed p;
  p.role = NodeRole::Syntheme;
  p.syntheme = parts;
  return p;
}

// The joins among the 56 named nodes.
bool rule_joined(const Parsed& x, const Parsed& y) {
  if (x.role > y.role) return rule_joined(y, x);
  using R = NodeRole;
  if (x.role == R::D6 && y.role == R::D6) {
    auto idx = [](const std::string& s) {
      return static_cast<int>(std::find(kD6Names.begin(), kD6Names.end(), s) - kD6Names.begin());
    };
    return d6_joined(idx(x.d6), idx(y.d6));
  }
  if (x.role == R::D6) {
    if (y.role == R::InfinityDuad) return x.d6 == "tail";
    if (y.role == R::Dryad) return x.d6 == (dryad_is_even(text(y)) ? "earIII" : "earII");
    return false;
  }
  if ((x.role == R::PlainDuad || x.role == R::InfinityDuad) && y.role == R::Syntheme) {
    return contains_duad(y, x.duad);
  }
  if (y.role != R::Dryad) return false;
  const auto& p = y.dryad;
  const int a = p[0], b = p[1], c = p[2], d = p[3], e = p[4];
  if (x.role == R::PlainDuad || x.role == R::InfinityDuad) {
    return x.duad == make_duad(a, b) || x.duad == make_duad(a, kInf) || x.duad == make_duad(b, kInf);
  }
  if (x.role == R::Syntheme) {
    const std::string t = text(x);
    return t == text(syntheme_of(make_duad(c, kInf), make_duad(a, d), make_duad(b, e))) ||
           t == text(syntheme_of(make_duad(e, kInf), make_duad(a, c), make_duad(b, d))) ||
           t == text(syntheme_of(make_duad(d, kInf), make_duad(a, e), make_duad(b, c)));
  }
  const std::string t = text(x);
  return t == canonical_dryad({d, c, a, b, e}) || t == canonical_dryad({c, e, a, b, d}) ||
         t == canonical_dryad({e, d, a, b, c});
}

}  // namespace

std::string canonical_name(const std::string& name) { return text(parse_name(name)); }

bool dryad_is_even(const std::string& name) {
  const Parsed p = parse_name(name);
  if (p.role != NodeRole::Dryad) throw LeechError("not a dryad: " + name);
  int inversions = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) inversions += p.dryad[static_cast<std::size_t>(i)] > p.dryad[static_cast<std::size_t>(j)];
  }
  return inversions % 2 == 0;
}

int LabeledD6::index(const std::string& name) const {
  const std::string c = canonical_name(name);
  const auto it = std::find(names.begin(), names.end(), c);
  if (it == names.end()) throw LeechError("no node named " + name);
  return static_cast<int>(it - names.begin());
}

std::vector<int> LabeledD6::indices(const std::vector<std::string>& list) const {
  std::vector<int> out;
  for (const auto& n : list) out.push_back(index(n));
  return out;
}

Polyhedron LabeledD6::universe() const {
  std::vector<QVector> roots;
  for (const auto& p : points) roots.push_back(leech_root(p));
  return Polyhedron::build(leech_space(), std::move(roots), names);
}

LabeledD6 label_extensions_d6(const std::array<LeechPoint, 6>& d6, const std::vector<LeechPoint>& ext) {
  if (ext.size() != 50) throw LeechError("expected 50 extensions of D6, got " + std::to_string(ext.size()));
  std::vector<LeechPoint> points(d6.begin(), d6.end());
  points.insert(points.end(), ext.begin(), ext.end());
  const CoxDiagram g = leech_diagram(points);
  const int n = g.size();
  auto fail = [](const std::string& what) { throw LeechError("D6 extension structure: " + what); };

  std::vector<NodeRole> roles(static_cast<std::size_t>(n), NodeRole::D6);
  std::vector<int> inf_label(static_cast<std::size_t>(n), -1);
  std::vector<int> infinity;
  for (int e = 6; e < n; ++e) {
    std::vector<int> att;
    for (int k = 0; k < 6; ++k) {
      if (g.label(e, k).joined()) att.push_back(k);
    }
    auto& r = roles[static_cast<std::size_t>(e)];
    if (att.size() > 1) fail("extension attached to two D6 nodes");
    if (att.empty()) {
      r = NodeRole::PlainDuad;
    } else if (att[0] == 0) {
      r = NodeRole::InfinityDuad;
      inf_label[static_cast<std::size_t>(e)] = static_cast<int>(infinity.size());
      infinity.push_back(e);
    } else if (att[0] == 4 || att[0] == 5) {
      r = NodeRole::Dryad;
    } else {
      fail("extension attached to an inner D6 node");
    }
  }
  for (int e = 6; e < n; ++e) {
    if (roles[static_cast<std::size_t>(e)] != NodeRole::PlainDuad) continue;
    for (int f : infinity) {
      if (g.label(e, f).joined()) roles[static_cast<std::size_t>(e)] = NodeRole::Syntheme;
    }
  }
  std::map<NodeRole, int> census;
  for (int e = 6; e < n; ++e) ++census[roles[static_cast<std::size_t>(e)]];
  if (census[NodeRole::PlainDuad] != 10 || census[NodeRole::InfinityDuad] != 5 ||
      census[NodeRole::Syntheme] != 15 || census[NodeRole::Dryad] != 20) {
    fail("role census differs from 10 + 5 + 15 + 20");
  }

  auto neighbors_with = [&](int e, NodeRole role) {
    std::vector<int> out;
    for (int f = 6; f < n; ++f) {
      if (f != e && roles[static_cast<std::size_t>(f)] == role && g.label(e, f).joined()) out.push_back(f);
    }
    return out;
  };

  std::vector<Parsed> parsed(static_cast<std::size_t>(n));
  for (int k = 0; k < 6; ++k) parsed[static_cast<std::size_t>(k)].d6 = kD6Names[static_cast<std::size_t>(k)];
  // Syntheme -> label of its infinity-duad.
  std::vector<int> syn_inf(static_cast<std::size_t>(n), -1);
  for (int e = 6; e < n; ++e) {
    const auto ue = static_cast<std::size_t>(e);
    if (roles[ue] == NodeRole::InfinityDuad) {
      parsed[ue].role = NodeRole::InfinityDuad;
      parsed[ue].duad = {inf_label[ue], kInf};
    } else if (roles[ue] == NodeRole::Syntheme) {
      const auto inf = neighbors_with(e, NodeRole::InfinityDuad);
      if (inf.size() != 1) fail("syntheme joined to " + std::to_string(inf.size()) + " infinity-duads");
      syn_inf[ue] = inf_label[static_cast<std::size_t>(inf[0])];
    }
  }
  for (int e = 6; e < n; ++e) {
    const auto ue = static_cast<std::size_t>(e);
    if (roles[ue] != NodeRole::PlainDuad) continue;
    const auto syn = neighbors_with(e, NodeRole::Syntheme);
    if (syn.size() != 3) fail("plain duad joined to " + std::to_string(syn.size()) + " synthemes");
    std::set<int> rest = {0, 1, 2, 3, 4};
    for (int s : syn) rest.erase(syn_inf[static_cast<std::size_t>(s)]);
    if (rest.size() != 2) fail("plain duad synthemes share an infinity-duad");
    parsed[ue].role = NodeRole::PlainDuad;
    parsed[ue].duad = {*rest.begin(), *rest.rbegin()};
  }
  for (int e = 6; e < n; ++e) {
    const auto ue = static_cast<std::size_t>(e);
    if (roles[ue] != NodeRole::Syntheme) continue;
    const auto duads = neighbors_with(e, NodeRole::PlainDuad);
    if (duads.size() != 2) fail("syntheme joined to " + std::to_string(duads.size()) + " plain duads");
    parsed[ue] = syntheme_of(parsed[static_cast<std::size_t>(duads[0])].duad,
                             parsed[static_cast<std::size_t>(duads[1])].duad, {syn_inf[ue], kInf});
    std::set<int> seen;
    for (const auto& d : parsed[ue].syntheme) seen.insert(d.begin(), d.end());
    if (seen.size() != 6) fail("syntheme duads overlap");
  }
  for (int e = 6; e < n; ++e) {
    const auto ue = static_cast<std::size_t>(e);
    if (roles[ue] != NodeRole::Dryad) continue;
    const auto duads = neighbors_with(e, NodeRole::PlainDuad);
    if (duads.size() != 1) fail("dryad joined to " + std::to_string(duads.size()) + " plain duads");
    const auto ab = parsed[static_cast<std::size_t>(duads[0])].duad;
    std::vector<int> rest;
    for (int x = 0; x < 5; ++x) {
      if (x != ab[0] && x != ab[1]) rest.push_back(x);
    }
    const int c = rest[0];
    std::optional<int> d;
    for (int s : neighbors_with(e, NodeRole::Syntheme)) {
      const Parsed& sp = parsed[static_cast<std::size_t>(s)];
      if (!contains_duad(sp, {c, kInf})) continue;
      for (const auto& du : sp.syntheme) {
        if (du[0] == ab[0] && du[1] != kInf) d = du[1];
        if (du[1] == ab[0]) d = du[0];
      }
    }
    if (!d) fail("dryad has no syntheme through its first complement point");
    int ee = -1;
    for (int x : rest) {
      if (x != c && x != *d) ee = x;
    }
    parsed[ue].role = NodeRole::Dryad;
    parsed[ue].dryad = {ab[0], ab[1], c, *d, ee};
  }

  LabeledD6 out;
  out.points = points;
  out.roles = roles;
  for (const auto& p : parsed) out.names.push_back(text(p));
  // Name the ears so that 01|234 hangs on earIII.
  const int ref = out.index("01|234");
  if (g.label(ref, 4).joined()) std::swap(out.points[4], out.points[5]);

  const CoxDiagram final_g = leech_diagram(out.points);
  std::set<std::string> unique(out.names.begin(), out.names.end());
  if (unique.size() != out.names.size()) fail("duplicate names");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool want = rule_joined(parsed[static_cast<std::size_t>(i)], parsed[static_cast<std::size_t>(j)]);
      if (final_g.label(i, j).joined() != want) {
        fail("join between " + out.names[static_cast<std::size_t>(i)] + " and " +
             out.names[static_cast<std::size_t>(j)] + " disagrees with the rules");
      }
    }
  }
  return out;
}

std::string permute_name(const std::string& name, const std::array<int, 5>& perm) {
  Parsed p = parse_name(name);
  auto img = [&](int x) { return x == kInf ? kInf : perm[static_cast<std::size_t>(x)]; };
  auto img_duad = [&](std::array<int, 2> d) { return make_duad(img(d[0]), img(d[1])); };
  switch (p.role) {
    case NodeRole::D6:
      if (!is_even(perm) && p.d6 == "earII") return "earIII";
      if (!is_even(perm) && p.d6 == "earIII") return "earII";
      return p.d6;
    case NodeRole::PlainDuad:
    case NodeRole::InfinityDuad: p.duad = img_duad(p.duad); break;
    case NodeRole::Syntheme:
      p = syntheme_of(img_duad(p.syntheme[0]), img_duad(p.syntheme[1]), img_duad(p.syntheme[2]));
      break;
    case NodeRole::Dryad:
      for (auto& x : p.dryad) x = img(x);
      break;
  }
  return text(p);
}

std::vector<std::array<int, 5>> s5_elements() {
  std::vector<std::array<int, 5>> out;
  std::array<int, 5> p = {0, 1, 2, 3, 4};
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_even(const std::array<int, 5>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) inv += perm[i] > perm[j];
  }
  return inv % 2 == 0;
}

std::vector<int> node_action(const LabeledD6& d6, const std::array<int, 5>& perm) {
  std::vector<int> out;
  for (const auto& n : d6.names) out.push_back(d6.index(permute_name(n, perm)));
  return out;
}

int induced_face_symmetries(const LabeledD6& d6, const std::vector<int>& sigma) {
  const std::set<int> s(sigma.begin(), sigma.end());
  const Face face = make_face(d6.universe().diagram(), sigma);
  std::set<std::vector<int>> induced;
  for (const auto& g : s5_elements()) {
    const auto act = node_action(d6, g);
    std::set<int> image;
    for (int x : sigma) image.insert(act[static_cast<std::size_t>(x)]);
    if (image != s) continue;
    std::vector<int> walls;
    for (int e : face.extensions) {
      const auto it = std::find(face.extensions.begin(), face.extensions.end(), act[static_cast<std::size_t>(e)]);
      walls.push_back(static_cast<int>(it - face.extensions.begin()));
    }
    induced.insert(walls);
  }
  return static_cast<int>(induced.size());
}

// ---------------------------------------------------------------- caching

namespace {

using nlohmann::json;

std::string hex(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex << x;
  return os.str();
}

std::filesystem::path cache_file(const CacheOptions& options, const std::string& what) {
  return std::filesystem::path(cache_directory(options)) /
         ("leech-" + hex(GolayCode::instance().checksum()) + "-" + what + ".json");
}

std::optional<std::vector<LeechPoint>> cache_load(const CacheOptions& options, const std::string& what) {
  if (!options.enabled) return std::nullopt;
  std::ifstream in(cache_file(options, what));
  if (!in) return std::nullopt;
  try {
    const json j = json::parse(in);
    if (j.at("checksum").get<std::string>() != hex(GolayCode::instance().checksum())) return std::nullopt;
    auto pts = j.at("points").get<std::vector<LeechPoint>>();
    for (const auto& p : pts) {
      if (!leech_contains(p)) return std::nullopt;
    }
    return pts;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void cache_store(const CacheOptions& options, const std::string& what, const std::vector<LeechPoint>& pts) {
  if (!options.enabled) return;
  std::error_code ec;
  const auto path = cache_file(options, what);
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) return;
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << json{{"checksum", hex(GolayCode::instance().checksum())}, {"points", pts}}.dump() << "\n";
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

std::string cache_directory(const CacheOptions& options) {
  if (!options.dir.empty()) return options.dir;
  if (const char* env = std::getenv("HYPCOX_CACHE_DIR"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home) return std::string(home) + "/.cache/hypcox";
  return ".hypcox-cache";
}

LabeledD6 labeled_d6(const CacheOptions& options, int workers) {
  std::vector<LeechPoint> pts;
  if (auto cached = cache_load(options, "d6"); cached && cached->size() == 56) {
    pts = std::move(*cached);
  } else {
    const auto d6 = find_d6();
    pts.assign(d6.begin(), d6.end());
    const auto ext = extensions(pts, workers);
    pts.insert(pts.end(), ext.begin(), ext.end());
    cache_store(options, "d6", pts);
  }
  std::array<LeechPoint, 6> d6;
  std::copy(pts.begin(), pts.begin() + 6, d6.begin());
  return label_extensions_d6(d6, std::vector<LeechPoint>(pts.begin() + 6, pts.end()));
}

// ---------------------------------------------------------------- chain

std::vector<ChainStage> build_chain() {
  const std::vector<std::string> d6(kD6Names.begin(), kD6Names.end());
  auto plus = [](std::vector<std::string> base, std::initializer_list<const char*> more) {
    for (const char* m : more) base.emplace_back(m);
    return base;
  };
  std::vector<ChainStage> out;
  out.push_back({"D6", d6});
  out.push_back({"D7", plus(d6, {"∞2"})});
  out.push_back({"E7", plus(d6, {"01|234"})});
  const auto d6d4 = plus(d6, {"23", "23.01.4∞", "23.04.1∞", "23.14.0∞"});
  out.push_back({"D6D4", d6d4});
  out.push_back({"D7D4", plus(d6d4, {"∞2"})});
  const auto d6d6 = plus(d6d4, {"01", "01.24.3∞"});
  out.push_back({"D6D6", d6d6});
  auto d7 = plus(d6d6, {"∞2"});
  out.push_back({"D7D6", d7});
  const char* steps[] = {"24", "30.24.1∞", "30", "12.30.4∞", "12", "12.34.0∞", "34", "02.34.1∞", "02", "02.13.4∞"};
  int rank = 6;
  for (const char* s : steps) {
    d7.emplace_back(s);
    out.push_back({"D7D" + std::to_string(++rank), d7});
  }
  out.push_back({"D6D6D4", plus(d6d6, {"13", "13.02.4∞", "13.04.2∞", "13.24.0∞"})});
  return out;
}

const ChainStage& chain_stage(const std::string& name) {
  static const std::vector<ChainStage> chain = build_chain();
  for (const auto& s : chain) {
    if (s.name == name) return s;
  }
  throw LeechError("unknown chain stage: " + name);
}

FaceProjection conway_face(const LabeledD6& d6, const std::vector<int>& sigma) {
  return face_projection(d6.universe(), sigma);
}

Polyhedron conway_face_polyhedron(const LabeledD6& d6, const std::vector<int>& sigma) {
  return conway_face(d6, sigma).polyhedron();
}

E6Face conway_face_e6(const LabeledD6& d6, const CacheOptions& options, int workers) {
  E6Face out;
  for (const char* name : {"n2", "n3", "branch", "earII", "earIII", "01|234"}) {
    out.sigma.push_back(d6.points[static_cast<std::size_t>(d6.index(name))]);
  }
  if (auto cached = cache_load(options, "e6"); cached && !cached->empty()) {
    out.ext = std::move(*cached);
  } else {
    out.ext = extensions(out.sigma, workers);
    cache_store(options, "e6", out.ext);
  }
  std::vector<LeechPoint> all = out.sigma;
  all.insert(all.end(), out.ext.begin(), out.ext.end());
  std::vector<std::string> names = {"n2", "n3", "branch", "earII", "earIII", "01|234"};
  std::vector<QVector> roots;
  for (const auto& p : all) roots.push_back(leech_root(p));
  for (std::size_t i = 0; i < out.ext.size(); ++i) names.push_back("x" + std::to_string(i + 1));
  const Polyhedron local = Polyhedron::build(leech_space(), std::move(roots), std::move(names));
  out.face = face_projection(local, {0, 1, 2, 3, 4, 5});
  return out;
}

Polyhedron conway_face_by_name(const std::string& name, const CacheOptions& options, int workers) {
  const LabeledD6 d6 = labeled_d6(options, workers);
  if (name == "E6") return conway_face_e6(d6, options, workers).face.polyhedron();
  return conway_face_polyhedron(d6, d6.indices(chain_stage(name).nodes));
}

}  // namespace hypcox
