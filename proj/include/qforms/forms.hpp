#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qforms/arithmetic.hpp"
#include "qforms/qseries.hpp"

namespace qf {

/// prod eta(d z)^r, written d1^r1 d2^r2 ...
struct EtaQuotient {
  std::vector<std::pair<long, long>> factors;  // (d, r)

  EtaQuotient() = default;
  EtaQuotient(std::initializer_list<std::pair<long, long>> f) : factors(f) {}

  long offset24() const;
  /// Twice the weight.
  long weight2() const;
  std::string str() const;
  /// Parses "1^2 11^2" or "1^-2.2^11" style lists.
  static EtaQuotient parse(const std::string& s);
};

/// Expansion of the quotient including its q^{offset24/24} prefactor; prec coefficients.
QExpansion eta_expansion(const EtaQuotient& eq, long prec);
/// Same series from explicit Euler products, multiplying and dividing factor by factor.
QExpansion eta_expansion_by_products(const EtaQuotient& eq, long prec);
/// Integer-offset quotient as a plain power series in q (offset 0), exponents 0..prec-1.
QExpansion eta_series(const EtaQuotient& eq, long prec);

/// Rebases an integer-offset series to offset 0 with exponents 0..prec-1.
QExpansion standard_form(const QExpansion& f, long prec);

QExpansion theta_expansion(long prec);
/// sum over (m,n) of q^{m^2+mn+a n^2}.
QExpansion theta_binary(long a, long prec);
/// Theta_a(z) Theta_a(l z).
QExpansion theta_quaternary(long a, long l, long prec);
/// Theta^i(z) Theta^j(2z) Theta^k(4z) Theta^l(8z).
QExpansion theta_octonary(long i, long j, long k, long l, long prec);

QExpansion eisenstein_E2(long prec);
QExpansion eisenstein_Ek(int k, long prec);
QExpansion phi_ab(long a, long b, long prec);
QExpansion eisenstein_twisted(int k, const DirichletCharacter& chi, const DirichletCharacter& psi, long prec);
/// f(dz) for an integer-offset f, exponents 0..prec-1.
QExpansion dilate_to(const QExpansion& f, long d, long prec);

/// Catalogue entry name plus integer and character arguments, e.g. "Phi_ab(1,2)", "E_twisted(4,1,chi8)".
struct FormId {
  std::string tag;
  std::vector<long> args;
  std::vector<DirichletCharacter> chars;
  EtaQuotient eta;  // for tag "eta"

  static FormId parse(const std::string& s);
  std::string str() const;
};

QExpansion catalogue(const FormId& id, long prec);
QExpansion catalogue(const std::string& id, long prec);
std::vector<std::string> catalogue_names();

}  // namespace qf
