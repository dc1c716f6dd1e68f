#include "hypcox/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace hypcox {

namespace {

QSpace diagonal_form(std::size_t n, FieldScalar head) {
  std::vector<FieldScalar> diag(n + 1, FieldScalar(1));
  diag[0] = std::move(head);
  return QSpace(std::move(diag));
}

}  // namespace

QSpace form_bugaenko(std::size_t n) { return diagonal_form(n, -FieldScalar(mpz_class(1), mpz_class(1), mpz_class(1), 2)); }
QSpace form_I_n_1(std::size_t n) { return diagonal_form(n, FieldScalar(-1)); }
QSpace form_2_n(std::size_t n) { return diagonal_form(n, FieldScalar(-2)); }

const std::vector<std::vector<long>>& bugaenko_h6_table() {
  static const std::vector<std::vector<long>> table = {
    { 0,  0, -1,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  0,  0, -1,  0,  1,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  0,  0,  0,  0, -1,  0,  1,  0,  0,  0,  0,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  1,  0,  0,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  1,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0},
    { 1,  0,  1,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0},
    { 1,  1,  1,  1,  1,  1,  1,  1,  0,  0,  0,  0,  0,  0},
    { 2,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  0},
    { 2,  1,  2,  1,  1,  1,  1,  1,  1,  1,  1,  0,  0,  0},
    { 3,  2,  3,  2,  3,  2,  1,  1,  1,  1,  1,  1,  0,  0},
    { 2,  2,  2,  2,  2,  1,  1,  1,  1,  1,  1,  1,  1,  1},
    { 4,  2,  3,  2,  3,  2,  2,  2,  2,  1,  1,  1,  1,  1},
    { 7,  5,  7,  5,  6,  4,  4,  3,  3,  2,  3,  2,  2,  1},
    { 4,  3,  4,  3,  3,  2,  3,  2,  2,  1,  2,  1,  1,  1},
    { 4,  3,  4,  3,  4,  3,  2,  1,  1,  1,  1,  1,  1,  1},
    { 6,  4,  5,  4,  5,  4,  3,  2,  3,  2,  2,  2,  2,  1},
    { 6,  4,  6,  4,  5,  4,  3,  2,  2,  2,  2,  1,  2,  1},
    { 8,  5,  7,  5,  7,  5,  3,  3,  3,  2,  3,  2,  3,  2},
    { 8,  5,  8,  5,  7,  5,  3,  2,  3,  2,  3,  2,  2,  2},
    { 8,  6,  8,  5,  7,  5,  5,  3,  4,  3,  4,  3,  2,  1},
    { 6,  4,  6,  4,  5,  3,  3,  2,  3,  2,  3,  2,  1,  1},
    { 6,  4,  6,  4,  5,  4,  3,  2,  3,  2,  1,  1,  1,  1},
    { 6,  5,  6,  4,  6,  4,  4,  3,  3,  2,  3,  2,  1,  1},
    {10,  7,  9,  7,  9,  6,  5,  4,  5,  4,  3,  2,  3,  2},
    {10,  8, 10,  7, 10,  7,  6,  4,  5,  4,  3,  2,  2,  2},
    { 8,  6,  8,  6,  7,  5,  5,  3,  3,  2,  3,  2,  3,  2},
    {12,  9, 12,  8, 11,  8,  7,  5,  5,  3,  5,  3,  4,  3},
    {10,  7, 10,  7,  8,  6,  6,  4,  5,  3,  3,  2,  3,  2},
    {10,  7, 10,  7,  9,  6,  5,  3,  4,  3,  4,  3,  3,  2},
    {14, 10, 14, 10, 12,  8,  8,  5,  7,  5,  5,  3,  4,  3},
    {10,  8, 10,  7, 10,  7,  6,  4,  4,  3,  4,  3,  3,  2},
    {12,  8, 12,  8, 10,  7,  6,  4,  6,  4,  4,  3,  3,  2},
    {12,  9, 12,  8, 11,  8,  7,  5,  6,  4,  4,  3,  3,  2},
  };
  return table;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t bugaenko_h6_checksum() {
  std::ostringstream os;
  for (const auto& row : bugaenko_h6_table()) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << '\n';
  }
  return fnv1a(os.str());
}

Polyhedron bugaenko_h6() {
  if (bugaenko_h6_checksum() != kBugaenkoH6Checksum) throw std::logic_error("Bugaenko root table is corrupted");
  std::vector<QVector> roots;
  for (const auto& row : bugaenko_h6_table()) {
    QVector v{std::vector<FieldScalar>(7)};
    for (std::size_t i = 0; i < 7; ++i) {
      v[i] = FieldScalar(mpz_class(row[2 * i]), mpz_class(row[2 * i + 1]), mpz_class(1), 2);
    }
    roots.push_back(std::move(v));
  }
  return Polyhedron::build(form_bugaenko(6), std::move(roots));
}

CatalogEntry catalog_get(const std::string& name, std::size_t n) {
  if (name == "bugaenko_h6") {
    Polyhedron p = bugaenko_h6();
    return {name, p.space(), std::move(p), "compact polyhedron in H^6 over Z[sqrt 2], 34 walls"};
  }
  const auto need_n = [&] {
    if (n == 0) throw std::invalid_argument("catalog entry '" + name + "' needs a dimension n >= 1");
  };
  if (name == "form_I_n_1") {
    need_n();
    return {name, form_I_n_1(n), std::nullopt, "-x0^2 + x1^2 + ... + xn^2"};
  }
  if (name == "form_2_n") {
    need_n();
    return {name, form_2_n(n), std::nullopt, "-2 x0^2 + x1^2 + ... + xn^2"};
  }
  if (name == "form_bugaenko_n") {
    need_n();
    return {name, form_bugaenko(n), std::nullopt, "-(1+sqrt 2) x0^2 + x1^2 + ... + xn^2"};
  }
  throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

std::vector<std::string> catalog_names() { return {"bugaenko_h6", "form_I_n_1", "form_2_n", "form_bugaenko_n"}; }

}  // namespace hypcox
