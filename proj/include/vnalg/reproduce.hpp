#pragma once

#include <string>
#include <vector>

namespace vnalg {

struct ReproRow {
  std::string id;
  std::string check;
  std::string expected;
  std::string observed;
  bool pass = false;
};

/// Recomputes every reference count and fixture check.
std::vector<ReproRow> reproduce_paper(int jobs = 1);

/// Fixed-width table followed by a "passed X of Y" line. Contains no
/// timings, so it is byte-identical across runs and worker counts.
std::string format_rows(const std::vector<ReproRow>& rows);

}  // namespace vnalg
