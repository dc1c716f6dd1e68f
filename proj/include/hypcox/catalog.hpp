// Built-in polyhedra and quadratic forms.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypcox/polyhedron.hpp"

namespace hypcox {

/// -(1+sqrt 2) x0^2 + x1^2 + ... + xn^2 over Q(sqrt 2).
QSpace form_bugaenko(std::size_t n);
/// -x0^2 + x1^2 + ... + xn^2.
QSpace form_I_n_1(std::size_t n);
/// -2 x0^2 + x1^2 + ... + xn^2.
QSpace form_2_n(std::size_t n);

/// The 34 simple roots of Bugaenko's compact polyhedron in H^6. Each entry is
/// (a0, b0, ..., a6, b6) for coordinates a_i + b_i sqrt 2.
const std::vector<std::vector<long>>& bugaenko_h6_table();
/// FNV-1a of the table rendered one row per line, entries separated by spaces.
std::uint64_t bugaenko_h6_checksum();
inline constexpr std::uint64_t kBugaenkoH6Checksum = 0xb0f5e5b7811c13a2ULL;

/// Validates the checksum, then builds the polyhedron.
Polyhedron bugaenko_h6();

std::uint64_t fnv1a(const std::string& text);

struct CatalogEntry {
  std::string name;
  QSpace space;
  std::optional<Polyhedron> polyhedron;  // absent for form-only entries
  std::string note;
};

/// "bugaenko_h6", or one of the forms "form_I_n_1", "form_2_n",
/// "form_bugaenko_n" with dimension parameter n. Throws std::invalid_argument.
CatalogEntry catalog_get(const std::string& name, std::size_t n = 0);
std::vector<std::string> catalog_names();

}  // namespace hypcox
