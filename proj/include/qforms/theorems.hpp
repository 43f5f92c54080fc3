#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qforms/arithmetic.hpp"
#include "qforms/linalg.hpp"
#include "qforms/tables.hpp"

namespace qf {

/// (alpha + beta n) * S(n/d), with S(x) = 0 unless x is a positive integer.
/// Symbols: "sigma1", "sigma3", "sigma3[chi,psi]" (twisted), or any form_series name.
struct Term {
  Rat alpha;
  Rat beta;
  std::string symbol;
  long d = 1;
};

struct Formula {
  std::string name;
  std::vector<Term> terms;

  Rat operator()(long n) const;
  /// Constant term under the normalizations sigma_3 <-> 1/240 + ..., sigma <-> -1/24 + ..., n*sigma <-> 0,
  /// cusp forms <-> 0.
  Rat constant_term() const;
  std::string str() const;
};

/// Library formulas use corrected coefficients where the printed ones disagree with the oracle;
/// Printed reproduces the source verbatim (non-c terms only where c-sequences occur).
enum class Variant { Library, Printed };

Rat eval_symbol(const std::string& symbol, long m);

/// The set A of supported (a, l).
std::vector<std::pair<long, long>> thm1_pairs();
Formula thm1(long a, long l, Variant v = Variant::Library);
Rat thm1_formula(long a, long l, long n);

struct Triple {
  long a, l, j;
  bool operator==(const Triple&) const = default;
};
std::vector<Triple> thm2_triples();
Formula thm2(const Triple& t, Variant v = Variant::Library);
Rat thm2_formula(long a, long l, long j, long n);
/// True for (1,2,3) and (1,4,2), whose printed formulas carry externally defined c-sequences.
bool thm2_has_c_terms(const Triple& t);
/// The printed c-term scale: residual = scale * (c_x + ratio * c_y).
struct CTerms {
  std::string first, second;
  Rat scale, ratio;
  std::string space;  // weight-4 space holding the theta product
};
CTerms thm2_c_terms(const Triple& t);

/// Oracle residual rho(n) = R(n) - printed non-c terms, for n = 1..upto, with rho(0) from constant_term().
struct CResidualReport {
  Triple triple{};
  long upto = 0;
  std::vector<Rat> combined;  // rho / scale: the derived sequence c_x + ratio * c_y
  bool exists = false;
  bool integral = false;
  bool zero_constant = false;
  bool cusp_member = false;   // rho lies in the weight-4 cusp space of the level
  bool sigma3_terms_match = false;
  bool quasimodular_terms_match = false;
  std::string detail;

  bool ok() const {
    return exists && integral && zero_constant && cusp_member && sigma3_terms_match && quasimodular_terms_match;
  }
};
CResidualReport analyze_c_residual(const Triple& t, long upto);

/// F_1..F_16 (trivial character) or G_1..G_16 (chi8) as form_series names.
const std::vector<std::string>& basis_names(bool type2);
/// C_alpha(n) or D_alpha(n), alpha 1-based.
Rat basis_coefficient(bool type2, int alpha, long n);

Rat thm3_formula(int i, int j, int k, int l, long n);
Rat thm3_with_row(const CoefficientRow& row, long n);

/// Candidate meanings of the undefined pair (chi_0, chi_2) in the sample formulas.
struct CharacterChoice {
  DirichletCharacter chi0, chi2;
  std::string str() const;
};
std::vector<CharacterChoice> sample_character_candidates();
/// The candidate that makes both Type II samples agree with the oracle for n <= 64; nullopt if none.
std::optional<CharacterChoice> resolved_sample_characters();

std::vector<std::string> sample_names();
Formula sample(const std::string& name, Variant v, const CharacterChoice& ch);
Rat sample_formula(const std::string& name, long n);
Quadruple sample_quadruple(const std::string& name);

}  // namespace qf
