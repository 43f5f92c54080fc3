#include "qforms/tables.hpp"

#include <algorithm>
#include <sstream>
#include <string_view>

#include "qforms/errors.hpp"

namespace qf {

namespace detail {
extern const std::string_view kTable3Csv;
extern const std::string_view kTable4Csv;
extern const std::string_view kTable4DerivedCsv;
extern const std::string_view kTable4ErrataCsv;
}  // namespace detail

std::string quad_key(const Quadruple& q) {
  std::string s;
  for (int x : q) s += std::to_string(x);
  return s;
}

Quadruple parse_quad_key(const std::string& key) {
  if (key.size() != 4 || !std::all_of(key.begin(), key.end(), ::isdigit))
    throw DomainError("quadruple key must be four digits, got '" + key + "'");
  return {key[0] - '0', key[1] - '0', key[2] - '0', key[3] - '0'};
}

namespace {

std::vector<std::vector<std::string>> csv_rows(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    out.push_back(std::move(cells));
  }
  return out;
}

std::vector<CoefficientRow> parse_table(std::string_view text, CoefficientRow::Source src) {
  std::vector<CoefficientRow> out;
  for (const auto& cells : csv_rows(text)) {
    if (cells.size() != 17) throw DomainError("table row needs 17 cells");
    CoefficientRow r;
    r.quad = parse_quad_key(cells[0]);
    for (int a = 0; a < 16; ++a) r.c[a] = parse_rat(cells[a + 1]);
    r.source = src;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

const std::vector<CoefficientRow>& table3() {
  static const auto t = parse_table(detail::kTable3Csv, CoefficientRow::Source::Printed);
  return t;
}

const std::vector<CoefficientRow>& table4() {
  static const auto t = parse_table(detail::kTable4Csv, CoefficientRow::Source::Printed);
  return t;
}

const std::vector<CoefficientRow>& table4_derived() {
  static const auto t = parse_table(detail::kTable4DerivedCsv, CoefficientRow::Source::Derived);
  return t;
}

const std::vector<Erratum>& table4_errata() {
  static const auto t = [] {
    std::vector<Erratum> out;
    for (const auto& cells : csv_rows(detail::kTable4ErrataCsv)) {
      if (cells.size() != 4) throw DomainError("errata row needs 4 cells");
      out.push_back({parse_quad_key(cells[0]), std::stoi(cells[1]), parse_rat(cells[2]), parse_rat(cells[3])});
    }
    return out;
  }();
  return t;
}

std::optional<CoefficientRow> printed_row(const Quadruple& q) {
  for (const auto* t : {&table3(), &table4()})
    for (const auto& r : *t)
      if (r.quad == q) return r;
  return std::nullopt;
}

CoefficientRow effective_row(const Quadruple& q) {
  if (auto r = printed_row(q)) {
    for (const auto& e : table4_errata())
      if (e.quad == q) r->c[e.column - 1] = e.corrected;
    return *r;
  }
  for (const auto& r : table4_derived())
    if (r.quad == q) return r;
  throw UnsupportedForm("quadruple " + quad_key(q) + " is not in the octonary tables");
}

std::vector<Quadruple> table2_quadruples() {
  std::vector<Quadruple> t1, t2;
  for (int i = 1; i <= 8; ++i)
    for (int j = 0; i + j <= 8; ++j)
      for (int k = 0; i + j + k <= 8; ++k) {
        int l = 8 - i - j - k;
        if (l == 0) continue;
        Quadruple q{i, j, k, l};
        (is_type2(q) ? t2 : t1).push_back(q);
      }
  t1.insert(t1.end(), t2.begin(), t2.end());
  return t1;
}

}  // namespace qf
