#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qforms/rational.hpp"

namespace qf {

struct VerifyRow {
  std::string target;
  long checked = 0;
  bool ok = true;
  /// First failing n (or exponent), with both sides; -1 when ok.
  long n = -1;
  std::string lhs, rhs;
  std::string note;
};

struct VerifyReport {
  std::string suite;
  long upto = 0;
  std::vector<VerifyRow> rows;

  bool ok() const;
  long failures() const;
};

/// Suites: ramanujan, thm1, thm2, w11, thm3, samples, tables, all.
std::vector<std::string> verify_suites();
VerifyReport verify(const std::string& suite, long upto);

/// Runs f(0..count-1) on a small thread pool; results keep index order.
void parallel_for(long count, const std::function<void(long)>& f);

}  // namespace qf
