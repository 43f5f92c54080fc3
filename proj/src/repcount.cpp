#include "qforms/repcount.hpp"

#include <cmath>
#include <functional>
#include <regex>

#include "qforms/arithmetic.hpp"
#include "qforms/errors.hpp"
#include "qforms/linalg.hpp"

namespace qf {

QFormSpec QFormSpec::quaternary(long a, long l) {
  if (a < 1 || l < 1) throw DomainError("quaternary form needs a, l >= 1");
  QFormSpec f;
  f.kind = Kind::Quaternary;
  f.a = a;
  f.l = l;
  return f;
}

QFormSpec QFormSpec::doubled(long a, long l, long j) {
  QFormSpec f = quaternary(a, l);
  if (j < 1) throw DomainError("doubled form needs j >= 1");
  f.kind = Kind::Doubled;
  f.j = j;
  return f;
}

QFormSpec QFormSpec::octonary(int i, int j, int k, int l) {
  if (i < 0 || j < 0 || k < 0 || l < 0 || i + j + k + l != 8)
    throw DomainError("octonary exponents must be non-negative and sum to 8");
  QFormSpec f;
  f.kind = Kind::Octonary;
  f.e = {i, j, k, l};
  return f;
}

QFormSpec QFormSpec::parse(const std::string& s) {
  static const std::regex quat(R"(quaternary:a=(\d+),l=(\d+))");
  static const std::regex dbl(R"(doubled:a=(\d+),l=(\d+),j=(\d+))");
  static const std::regex oct(R"(octonary:(\d+),(\d+),(\d+),(\d+))");
  std::smatch m;
  if (std::regex_match(s, m, quat)) return quaternary(std::stol(m[1]), std::stol(m[2]));
  if (std::regex_match(s, m, dbl)) return doubled(std::stol(m[1]), std::stol(m[2]), std::stol(m[3]));
  if (std::regex_match(s, m, oct)) return octonary(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4]));
  throw UnsupportedForm("cannot parse form '" + s + "'");
}

std::string QFormSpec::str() const {
  switch (kind) {
    case Kind::Quaternary:
      return "quaternary:a=" + std::to_string(a) + ",l=" + std::to_string(l);
    case Kind::Doubled:
      return "doubled:a=" + std::to_string(a) + ",l=" + std::to_string(l) + ",j=" + std::to_string(j);
    case Kind::Octonary:
      return "octonary:" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "," +
             std::to_string(e[3]);
  }
  return {};
}

std::vector<long> binary_counts(long a, long nmax) {
  if (a < 1) throw DomainError("binary form needs a >= 1");
  std::vector<long> c(static_cast<size_t>(nmax + 1), 0);
  // 4(m^2 + mn + a n^2) = (2m + n)^2 + (4a - 1) n^2
  long nb = static_cast<long>(std::sqrt(4.0 * nmax / (4 * a - 1))) + 1;
  for (long n = -nb; n <= nb; ++n) {
    long rest = 4 * nmax - (4 * a - 1) * n * n;
    if (rest < 0) continue;
    long t = static_cast<long>(std::sqrt(static_cast<double>(rest))) + 1;
    for (long m = (-t - n) / 2 - 1; m <= (t - n) / 2 + 1; ++m) {
      long v = m * m + m * n + a * n * n;
      if (v <= nmax) ++c[v];
    }
  }
  return c;
}

namespace {

std::vector<long> convolve_dilated(const std::vector<long>& f, const std::vector<long>& g, long d, long nmax) {
  std::vector<long> out(static_cast<size_t>(nmax + 1), 0);
  for (long v = 0; v * d <= nmax; ++v) {
    if (g[v] == 0) continue;
    for (long u = 0; u + v * d <= nmax; ++u) out[u + v * d] += f[u] * g[v];
  }
  return out;
}

}  // namespace

std::vector<long> quaternary_counts(long a, long l, long nmax) {
  if (l < 1) throw DomainError("quaternary form needs l >= 1");
  auto r = binary_counts(a, nmax);
  return convolve_dilated(r, r, l, nmax);
}

std::vector<long> doubled_counts(long a, long l, long j, long nmax) {
  if (j < 1) throw DomainError("doubled form needs j >= 1");
  auto r = quaternary_counts(a, l, nmax);
  return convolve_dilated(r, r, j, nmax);
}

std::vector<long> octonary_counts(int i, int j, int k, int l, long nmax) {
  QFormSpec::octonary(i, j, k, l);
  std::vector<long> sq(static_cast<size_t>(nmax + 1), 0);
  long s = static_cast<long>(std::sqrt(static_cast<double>(nmax)));
  while (s * s > nmax) --s;
  while ((s + 1) * (s + 1) <= nmax) ++s;
  for (long x = -s; x <= s; ++x) ++sq[x * x];
  std::vector<long> out(static_cast<size_t>(nmax + 1), 0);
  out[0] = 1;
  const int mult[4] = {i, j, k, l};
  const long coef[4] = {1, 2, 4, 8};
  for (int t = 0; t < 4; ++t)
    for (int r = 0; r < mult[t]; ++r) out = convolve_dilated(out, sq, coef[t], nmax);
  return out;
}

long count_octonary_direct(int i, int j, int k, int l, long n) {
  QFormSpec::octonary(i, j, k, l);
  std::vector<long> c;
  for (int t = 0; t < i; ++t) c.push_back(1);
  for (int t = 0; t < j; ++t) c.push_back(2);
  for (int t = 0; t < k; ++t) c.push_back(4);
  for (int t = 0; t < l; ++t) c.push_back(8);
  long total = 0;
  std::function<void(size_t, long)> rec = [&](size_t pos, long rem) {
    if (pos == c.size()) {
      if (rem == 0) ++total;
      return;
    }
    for (long x = 0; c[pos] * x * x <= rem; ++x) {
      // x and -x contribute separately
      long before = total;
      rec(pos + 1, rem - c[pos] * x * x);
      if (x > 0) total += total - before;
    }
  };
  rec(0, n);
  return total;
}

std::vector<long> counts(const QFormSpec& f, long nmax) {
  switch (f.kind) {
    case QFormSpec::Kind::Quaternary:
      return quaternary_counts(f.a, f.l, nmax);
    case QFormSpec::Kind::Doubled:
      return doubled_counts(f.a, f.l, f.j, nmax);
    case QFormSpec::Kind::Octonary:
      return octonary_counts(f.e[0], f.e[1], f.e[2], f.e[3], nmax);
  }
  return {};
}

long count_quaternary(long a, long l, long n) { return n < 0 ? 0 : quaternary_counts(a, l, n)[n]; }
long count_doubled(long a, long l, long j, long n) { return n < 0 ? 0 : doubled_counts(a, l, j, n)[n]; }
long count_octonary(int i, int j, int k, int l, long n) { return n < 0 ? 0 : octonary_counts(i, j, k, l, n)[n]; }

Int conv_sum(long a, long b, long n) {
  if (a < 1 || b < 1) throw DomainError("conv_sum needs a, b >= 1");
  Int s = 0;
  for (long i = 1; a * i < n; ++i) {
    long rest = n - a * i;
    if (rest % b == 0) s += sigma(1, i) * sigma(1, rest / b);
  }
  return s;
}

namespace {

Rat a_coeff(int idx, long n) {
  return form_series("A_" + std::to_string(idx), std::max(n + 1, kDefaultPrec * 2))[n];
}

Rat w11_with(const Rat& c, long n) {
  if (n < 1) throw DomainError("w11_formula needs n >= 1");
  Rat v = frac(5, 1464) * sigma(3, n) + frac(605, 1464) * sigma_at(3, frac(n, 11)) + (c - frac(n, 44)) * sigma(1, n) +
          (c - frac(n, 4)) * sigma_at(1, frac(n, 11));
  v -= frac(15, 671) * a_coeff(1, n) + frac(103, 671) * a_coeff(2, n) + frac(240, 671) * a_coeff(3, n) +
       frac(240, 671) * a_coeff(4, n);
  return v;
}

}  // namespace

Rat w11_formula(long n) { return w11_with(frac(1, 24), n); }
Rat w11_formula_printed(long n) { return w11_with(frac(1, 21), n); }

}  // namespace qf
