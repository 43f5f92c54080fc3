#include "qforms/arithmetic.hpp"

#include <numeric>

#include "qforms/errors.hpp"

namespace qf {

DirichletCharacter DirichletCharacter::trivial(long m) {
  if (m < 1) throw DomainError("modulus must be positive");
  return {Kind::Trivial, m, 1};
}

DirichletCharacter DirichletCharacter::kronecker(long d) {
  if (d != -8 && d != -4 && d != 1 && d != 8) throw DomainError("unsupported discriminant " + std::to_string(d));
  if (d == 1) return trivial(1);
  return {Kind::Kronecker, std::labs(d), d};
}

long DirichletCharacter::conductor() const { return kind == Kind::Trivial ? 1 : modulus; }

int DirichletCharacter::parity() const { return kind == Kind::Trivial ? 1 : (disc < 0 ? -1 : 1); }

std::string DirichletCharacter::name() const {
  if (kind == Kind::Kronecker) return "chi" + std::to_string(disc);
  if (modulus == 1) return "1";
  return "chi" + std::to_string(modulus);
}

namespace chars {
DirichletCharacter one() { return DirichletCharacter::trivial(1); }
DirichletCharacter chi2() { return DirichletCharacter::trivial(2); }
DirichletCharacter chi4() { return DirichletCharacter::trivial(4); }
DirichletCharacter chi_m4() { return DirichletCharacter::kronecker(-4); }
DirichletCharacter chi8() { return DirichletCharacter::kronecker(8); }
DirichletCharacter chi_m8() { return DirichletCharacter::kronecker(-8); }
}  // namespace chars

DirichletCharacter parse_character(const std::string& s) {
  if (s == "1") return chars::one();
  if (s == "chi2") return chars::chi2();
  if (s == "chi4") return chars::chi4();
  if (s == "chi-4") return chars::chi_m4();
  if (s == "chi8") return chars::chi8();
  if (s == "chi-8") return chars::chi_m8();
  throw DomainError("unknown character '" + s + "'");
}

int character_eval(const DirichletCharacter& chi, long n) {
  long m = chi.modulus;
  long r = ((n % m) + m) % m;
  if (chi.kind == DirichletCharacter::Kind::Trivial) return std::gcd(r, m) == 1 ? 1 : 0;
  switch (chi.disc) {
    case -4:
      return r == 1 ? 1 : (r == 3 ? -1 : 0);
    case 8:
      return (r == 1 || r == 7) ? 1 : ((r == 3 || r == 5) ? -1 : 0);
    case -8:
      return (r == 1 || r == 3) ? 1 : ((r == 5 || r == 7) ? -1 : 0);
  }
  throw DomainError("unsupported character");
}

std::vector<long> divisors(long n) {
  std::vector<long> lo, hi;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

Int sigma(unsigned r, long n) {
  if (n <= 0) return 0;
  Int s = 0;
  for (long d : divisors(n)) s += ipow(Int(d), r);
  return s;
}

Int sigma_at(unsigned r, const Rat& x) {
  Rat y = x;
  y.canonicalize();
  if (y.get_den() != 1 || sgn(y) <= 0) return 0;
  return sigma(r, y.get_num().get_si());
}

Rat bernoulli(unsigned k) {
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, B_0 = 1; gives B_1 = -1/2.
  std::vector<Rat> b(k + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= k; ++m) {
    Rat s = 0;
    Int c = 1;  // C(m+1, j)
    for (unsigned j = 0; j < m; ++j) {
      s += c * b[j];
      c = c * (m + 1 - j) / (j + 1);
    }
    b[m] = -s / (m + 1);
  }
  return b[k];
}

Rat bernoulli_poly(unsigned k, const Rat& x) {
  Rat s = 0;
  Int c = 1;
  for (unsigned j = 0; j <= k; ++j) {
    s += c * bernoulli(j) * rpow(x, static_cast<long>(k - j));
    c = c * (k - j) / (j + 1);
  }
  return s;
}

Rat gen_bernoulli(unsigned k, const DirichletCharacter& psi) {
  if (!psi.primitive()) throw DomainError("generalized Bernoulli numbers need a primitive character");
  long f = psi.conductor();
  Rat s = 0;
  for (long a = 1; a <= f; ++a) {
    int v = character_eval(psi, a);
    if (v) s += v * bernoulli_poly(k, frac(a, f));
  }
  return s * rpow(Rat(f), static_cast<long>(k) - 1);
}

Int twisted_sigma(unsigned e, const DirichletCharacter& chi, const DirichletCharacter& psi, long n) {
  if (n <= 0) return 0;
  Int s = 0;
  for (long d : divisors(n)) {
    int v = character_eval(psi, d) * character_eval(chi, n / d);
    if (v) s += v * ipow(Int(d), e);
  }
  return s;
}

}  // namespace qf
