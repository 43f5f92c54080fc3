#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qforms/qseries.hpp"

namespace qf {

/// max(1, floor(k * [SL2(Z) : Gamma0(N)] / 12)).
long sturm_bound(long k, long N);

struct BasisDecomposition {
  enum class Status { ExactMatch, Inconsistent };
  std::vector<std::pair<std::string, Rat>> entries;
  long verified_through = -1;
  Status status = Status::Inconsistent;
  /// First exponent where the best solution misses the target, -1 on exact match.
  long first_mismatch = -1;

  bool exact() const { return status == Status::ExactMatch; }
  Rat coefficient(const std::string& name) const;
  std::string to_json() const;
};

using NamedSeries = std::pair<std::string, QExpansion>;

/// Exact solve of target = sum c_i basis_i on exponents 0..nmax. All series must be standard
/// (offset 0) with prec > nmax. Throws DegenerateBasis if the basis columns are dependent there.
BasisDecomposition express_in_basis(const QExpansion& target, const std::vector<NamedSeries>& basis, long nmax);

/// Solves A x = b exactly; x is empty when the system is inconsistent. Throws DegenerateBasis on rank loss.
std::vector<Rat> solve_exact(RatMatrix A, RatVector b);

/// (theta - known) / scale.
QExpansion derive_cusp_residual(const QExpansion& theta, const QExpansion& known, const Rat& scale);

QExpansion derived_delta_2_33(long prec);
QExpansion derived_delta_2_38_2(long prec);

/// Catalogue lookup extended with the derived newforms ("Delta_2_33", "Delta_2_38_2") and a
/// dilation suffix: "Delta_2_11@3" is Delta_2_11(3z). Results are standard-form, cached per name.
QExpansion form_series(const std::string& name, long prec);
/// Coefficient of q^n of form_series(name, .), read from the cache without copying the series.
Rat form_coefficient(const std::string& name, long n);

struct NamedSpace {
  std::string id;
  long weight = 0;
  long level = 0;
  std::vector<std::string> basis;

  std::vector<NamedSeries> series(long prec) const;
  long check_depth() const;
};

/// "k,N" or "k,N,chi8"; see named_space_ids().
NamedSpace named_space(const std::string& id);
std::vector<std::string> named_space_ids();

}  // namespace qf
