#pragma once

#include <array>
#include <string>
#include <vector>

#include "qforms/rational.hpp"

namespace qf {

struct QFormSpec {
  enum class Kind { Quaternary, Doubled, Octonary };
  Kind kind = Kind::Quaternary;
  long a = 1, l = 1, j = 1;
  std::array<int, 4> e{};  // octonary exponents of 1, 2, 4, 8

  static QFormSpec quaternary(long a, long l);
  static QFormSpec doubled(long a, long l, long j);
  static QFormSpec octonary(int i, int j, int k, int l);
  /// "quaternary:a=1,l=2", "doubled:a=1,l=2,j=3", "octonary:1,0,1,6".
  static QFormSpec parse(const std::string& s);
  std::string str() const;
};

/// #{(m,n) : m^2 + mn + a n^2 = N} for N < nmax + 1, by integer loops.
std::vector<long> binary_counts(long a, long nmax);
/// R_{a,l}(n) for 0 <= n <= nmax.
std::vector<long> quaternary_counts(long a, long l, long nmax);
/// R_{a,l;j}(n) = sum_{u + j v = n} R_{a,l}(u) R_{a,l}(v).
std::vector<long> doubled_counts(long a, long l, long j, long nmax);
/// N(1^i,2^j,4^k,8^l; n) by convolving one-variable counts.
std::vector<long> octonary_counts(int i, int j, int k, int l, long nmax);
/// Same count by direct nested loops over the eight coordinates; intended for small n.
long count_octonary_direct(int i, int j, int k, int l, long n);

std::vector<long> counts(const QFormSpec& f, long nmax);

long count_quaternary(long a, long l, long n);
long count_doubled(long a, long l, long j, long n);
long count_octonary(int i, int j, int k, int l, long n);

/// W_{a,b}(n) = sum_{a i + b j = n, i,j >= 1} sigma(i) sigma(j).
Int conv_sum(long a, long b, long n);

/// Closed form for W_{1,11}(n) through the level-22 cusp forms A_1..A_4.
Rat w11_formula(long n);
/// As printed, with constant 1/21 in both sigma brackets.
Rat w11_formula_printed(long n);

}  // namespace qf
