#include "qforms/rational.hpp"

#include "qforms/errors.hpp"

namespace qf {

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_string(const Int& z) { return z.get_str(); }

Rat parse_rat(std::string_view s) {
  std::string t(s);
  while (!t.empty() && (t.back() == ' ' || t.back() == '\r' || t.back() == '\n')) t.pop_back();
  size_t b = 0;
  while (b < t.size() && t[b] == ' ') ++b;
  t = t.substr(b);
  if (t.empty()) throw DomainError("empty rational literal");
  size_t slash = t.find('/');
  auto valid_int = [](const std::string& x) {
    if (x.empty()) return false;
    size_t i = (x[0] == '-' || x[0] == '+') ? 1 : 0;
    if (i == x.size()) return false;
    for (; i < x.size(); ++i)
      if (x[i] < '0' || x[i] > '9') return false;
    return true;
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num = num.substr(1);
  if (!valid_int(num) || !valid_int(den)) throw DomainError("bad rational literal: " + t);
  Int d(den);
  if (d == 0) throw DomainError("zero denominator: " + t);
  Rat r(Int(num), d);
  r.canonicalize();
  return r;
}

Int ipow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Rat rpow(const Rat& base, long e) {
  if (e >= 0) return Rat(ipow(base.get_num(), e), ipow(base.get_den(), e));
  if (base == 0) throw DomainError("zero to a negative power");
  Rat r(ipow(base.get_den(), -e), ipow(base.get_num(), -e));
  r.canonicalize();
  return r;
}

Rat frac(long p, long q) {
  if (q == 0) throw DomainError("zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace qf
