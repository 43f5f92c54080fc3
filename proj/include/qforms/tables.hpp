#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qforms/rational.hpp"

namespace qf {

using Quadruple = std::array<int, 4>;

std::string quad_key(const Quadruple& q);
Quadruple parse_quad_key(const std::string& key);

/// Type I rows (j + l even) live in M4(Gamma0(32)), Type II rows in M4(Gamma0(32), chi8).
inline bool is_type2(const Quadruple& q) { return (q[1] + q[3]) % 2 == 1; }

struct CoefficientRow {
  enum class Source { Printed, Derived };
  Quadruple quad{};
  std::array<Rat, 16> c;
  Source source = Source::Printed;

  bool type2() const { return is_type2(quad); }
};

struct Erratum {
  Quadruple quad{};
  int column = 0;  // 1-based
  Rat printed, corrected;
};

const std::vector<CoefficientRow>& table3();
/// Printed Type II rows as embedded.
const std::vector<CoefficientRow>& table4();
/// Type II rows absent from the printed table, obtained by exact solve.
const std::vector<CoefficientRow>& table4_derived();
const std::vector<Erratum>& table4_errata();

/// Printed row, if the quadruple appears in either embedded table.
std::optional<CoefficientRow> printed_row(const Quadruple& q);
/// Row used by the evaluators: printed with errata applied, or derived. Throws UnsupportedForm.
CoefficientRow effective_row(const Quadruple& q);

/// All 84 quadruples with i, l > 0, Type I first.
std::vector<Quadruple> table2_quadruples();

}  // namespace qf
