// The ten end-to-end checks behind `verify-paper` and the acceptance binary.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hypcox/leech.hpp"

namespace hypcox {

struct AcceptanceOptions {
  CacheOptions cache;
  int workers = 8;
  /// Directory holding bugaenko_h6_labels.txt.
  std::string fixture_dir;
  std::uint64_t seed = 20240615;
  /// Empty runs all; otherwise only the listed criteria.
  std::vector<int> only;
};

struct CriterionResult {
  int id = 0;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// One line: "criterion N: PASS|FAIL <detail> [t s]".
std::string format_line(const CriterionResult& r);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// Classes of trees on k unlabeled vertices with maximum degree 3, from all
/// Pruefer sequences and exhaustive relabeling. Slow; k <= 8.
std::uint64_t brute_force_skeleton_classes(int k);

}  // namespace hypcox
