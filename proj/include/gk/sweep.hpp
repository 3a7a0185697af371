#pragma once

#include <string>
#include <vector>

#include "gk/groupspec.hpp"

namespace gk::sweep {

struct Options {
  unsigned n_max = 0;      // 0 = table default
  Integer q_max = 0;       // 0 = table default
  unsigned jobs = 1;
};

struct RowResult {
  std::string group;
  std::string row_id;
  bool ok = false;
  std::string detail;
};

// All specs covered by one table at the given bounds.
std::vector<GroupSpec> specs_for_table(int table, unsigned n_max, const Integer& q_max);

// Run refdata::verify over a table sweep (tables 1-4).
std::vector<RowResult> run_table(int table, const Options& opt);

// Alternating suite: closed form vs enumeration for 5 <= n <= n_max.
std::vector<RowResult> run_alt(unsigned n_max);

// Criterion graph vs torus oracle on all odd non-characteristic vertex
// representatives of one spec.
RowResult oracle_check(const GroupSpec& spec);

}  // namespace gk::sweep
