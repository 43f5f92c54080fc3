#pragma once

#include <string>
#include <vector>

#include "qforms/rational.hpp"

namespace qf {

/// Trivial character mod m, or Kronecker symbol (D/.) for D in {-8, -4, 1, 8}.
struct DirichletCharacter {
  enum class Kind { Trivial, Kronecker };
  Kind kind = Kind::Trivial;
  long modulus = 1;
  long disc = 1;

  static DirichletCharacter trivial(long m);
  static DirichletCharacter kronecker(long d);

  long conductor() const;
  bool primitive() const { return conductor() == modulus; }
  int parity() const;  // value at -1
  std::string name() const;

  bool operator==(const DirichletCharacter&) const = default;
};

namespace chars {
DirichletCharacter one();     // trivial mod 1
DirichletCharacter chi2();    // trivial mod 2
DirichletCharacter chi4();    // trivial mod 4
DirichletCharacter chi_m4();  // (-4/.)
DirichletCharacter chi8();    // (8/.) = (2/.)
DirichletCharacter chi_m8();  // (-8/.)
}  // namespace chars

/// "1", "chi2", "chi4", "chi-4", "chi8", "chi-8".
DirichletCharacter parse_character(const std::string& s);

int character_eval(const DirichletCharacter& chi, long n);

/// sigma_r(n); zero for n <= 0.
Int sigma(unsigned r, long n);
/// sigma_r(x) for rational x, zero unless x is a positive integer.
Int sigma_at(unsigned r, const Rat& x);

std::vector<long> divisors(long n);

Rat bernoulli(unsigned k);
/// Bernoulli polynomial B_k(x).
Rat bernoulli_poly(unsigned k, const Rat& x);
/// B_{k,psi} = f^{k-1} sum_{a=1}^{f} psi(a) B_k(a/f), f the conductor.
Rat gen_bernoulli(unsigned k, const DirichletCharacter& psi);

/// sum_{d|n} psi(d) chi(n/d) d^e.
Int twisted_sigma(unsigned e, const DirichletCharacter& chi, const DirichletCharacter& psi, long n);

std::vector<long> prime_factors(long n);

}  // namespace qf
