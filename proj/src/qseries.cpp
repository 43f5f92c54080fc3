#include "qforms/qseries.hpp"

#include <algorithm>
#include <json.hpp>

#include "qforms/errors.hpp"

namespace qf {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_aligned(long a, long b) {
  if ((a - b) % 24 != 0)
    throw OffsetMismatch("offsets " + std::to_string(a) + "/24 and " + std::to_string(b) +
                         "/24 differ by a non-integer power of q");
}

Int common_denominator(const std::vector<Rat>& v) {
  Int l = 1;
  for (const auto& x : v)
    if (x.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  return l;
}

std::vector<Int> scaled_integers(const std::vector<Rat>& v, const Int& l) {
  std::vector<Int> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    out[i] = v[i].get_num() * (l / v[i].get_den());
  }
  return out;
}

}  // namespace

QExpansion::QExpansion(long offset24, std::vector<Rat> coeffs) : offset24_(offset24), c_(std::move(coeffs)) {}

QExpansion QExpansion::zero(long prec, long offset24) {
  return QExpansion(offset24, std::vector<Rat>(static_cast<size_t>(std::max(0L, prec))));
}

QExpansion QExpansion::one(long prec) {
  QExpansion f = zero(prec);
  if (prec > 0) f.c_[0] = 1;
  return f;
}

QExpansion QExpansion::from_ints(const std::vector<long>& c, long offset24) {
  std::vector<Rat> v;
  v.reserve(c.size());
  for (long x : c) v.emplace_back(x);
  return QExpansion(offset24, std::move(v));
}

long QExpansion::start_exponent() const {
  if (!integer_offset()) throw OffsetMismatch("series has a fractional exponent offset");
  return offset24_ / 24;
}

Rat QExpansion::at(long e) const {
  long idx = e - start_exponent();
  if (idx < 0) return 0;
  if (idx >= prec()) throw DomainError("coefficient of q^" + std::to_string(e) + " is beyond the series precision");
  return c_[static_cast<size_t>(idx)];
}

long QExpansion::last_exponent() const { return start_exponent() + prec() - 1; }

long QExpansion::valuation() const {
  for (long i = 0; i < prec(); ++i)
    if (sgn(c_[i]) != 0) return i;
  return prec();
}

bool QExpansion::all_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x.get_den() == 1; });
}

QExpansion QExpansion::truncated(long p) const {
  std::vector<Rat> v(c_.begin(), c_.begin() + std::min(p, prec()));
  return QExpansion(offset24_, std::move(v));
}

QExpansion QExpansion::realigned(long o) const {
  check_aligned(o, offset24_);
  long k = (offset24_ - o) / 24;
  if (k < 0) throw OffsetMismatch("realign target must not exceed the current offset");
  std::vector<Rat> v(static_cast<size_t>(prec() + k));
  for (long i = 0; i < prec(); ++i) v[i + k] = c_[i];
  return QExpansion(o, std::move(v));
}

QExpansion QExpansion::normalized() const {
  long v = valuation();
  if (v == 0 || v == prec()) return *this;
  std::vector<Rat> w(c_.begin() + v, c_.end());
  return QExpansion(offset24_ + 24 * v, std::move(w));
}

QExpansion QExpansion::operator-() const {
  QExpansion f = *this;
  for (auto& x : f.c_) x = -x;
  return f;
}

QExpansion series_add(const QExpansion& f, const QExpansion& g) {
  check_aligned(f.offset24(), g.offset24());
  long o = std::min(f.offset24(), g.offset24());
  QExpansion a = f.offset24() == o ? f : f.realigned(o);
  QExpansion b = g.offset24() == o ? g : g.realigned(o);
  long p = std::min(a.prec(), b.prec());
  std::vector<Rat> v(static_cast<size_t>(p));
  for (long i = 0; i < p; ++i) v[i] = a[i] + b[i];
  return QExpansion(o, std::move(v));
}

QExpansion series_sub(const QExpansion& f, const QExpansion& g) { return series_add(f, -g); }

QExpansion series_scale(const QExpansion& f, const Rat& s) {
  std::vector<Rat> v(f.coeffs());
  for (auto& x : v) x *= s;
  return QExpansion(f.offset24(), std::move(v));
}

QExpansion series_mul(const QExpansion& f, const QExpansion& g) {
  long p = std::min(f.prec(), g.prec());
  // Clear denominators and convolve over the integers.
  Int lf = common_denominator(f.coeffs()), lg = common_denominator(g.coeffs());
  std::vector<Int> a = scaled_integers(f.coeffs(), lf), b = scaled_integers(g.coeffs(), lg);
  std::vector<long> nzb;
  for (long j = 0; j < p; ++j)
    if (sgn(b[j]) != 0) nzb.push_back(j);
  std::vector<Int> h(static_cast<size_t>(p));
  for (long i = 0; i < p; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (long j : nzb) {
      if (i + j >= p) break;
      mpz_addmul(h[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  Int den = lf * lg;
  std::vector<Rat> v(static_cast<size_t>(p));
  for (long i = 0; i < p; ++i) {
    if (sgn(h[i]) == 0) continue;
    v[i] = Rat(h[i], den);
    if (den != 1) v[i].canonicalize();
  }
  return QExpansion(f.offset24() + g.offset24(), std::move(v));
}

QExpansion series_inverse(const QExpansion& f) {
  long v = f.valuation();
  if (v >= f.prec()) throw DivisionError("series has no nonzero coefficient within its precision");
  QExpansion h = f.normalized();
  long p = h.prec();
  std::vector<Rat> inv(static_cast<size_t>(p));
  Rat h0inv = 1 / h[0];
  inv[0] = h0inv;
  std::vector<long> nz;
  for (long k = 1; k < p; ++k)
    if (sgn(h[k]) != 0) nz.push_back(k);
  for (long n = 1; n < p; ++n) {
    Rat s = 0;
    for (long k : nz) {
      if (k > n) break;
      s += h[k] * inv[n - k];
    }
    inv[n] = -s * h0inv;
  }
  return QExpansion(-h.offset24(), std::move(inv));
}

QExpansion series_div(const QExpansion& f, const QExpansion& g) { return series_mul(f, series_inverse(g)); }

QExpansion series_pow(const QExpansion& f, long e) {
  if (e < 0) return series_pow(series_inverse(f), -e);
  QExpansion result = QExpansion::one(f.prec());
  QExpansion base = f;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      result = first ? base : series_mul(result, base);
      first = false;
    }
    e >>= 1;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

QExpansion series_dilate(const QExpansion& f, long d) {
  if (d < 1) throw DomainError("dilation factor must be positive");
  if (d == 1) return f;
  std::vector<Rat> v(static_cast<size_t>(f.prec() * d));
  for (long i = 0; i < f.prec(); ++i) v[i * d] = f[i];
  return QExpansion(f.offset24() * d, std::move(v));
}

QExpansion series_shift(const QExpansion& f, long shift24) { return QExpansion(f.offset24() + shift24, f.coeffs()); }

QExpansion project_residue(const QExpansion& f, long r, long m) {
  if (m < 1) throw DomainError("modulus must be positive");
  long s = f.start_exponent();
  QExpansion out = f;
  for (long i = 0; i < f.prec(); ++i) {
    long e = s + i;
    if (e - r - floor_div(e - r, m) * m != 0) out.coeffs()[i] = 0;
  }
  return out;
}

QExpansion series_lincomb(const std::vector<std::pair<Rat, QExpansion>>& terms) {
  if (terms.empty()) throw DomainError("empty linear combination");
  QExpansion acc = series_scale(terms[0].second, terms[0].first);
  for (size_t i = 1; i < terms.size(); ++i) acc = series_add(acc, series_scale(terms[i].second, terms[i].first));
  return acc;
}

bool agree(const QExpansion& f, const QExpansion& g) {
  QExpansion d = series_sub(f, g);
  return d.valuation() == d.prec();
}

std::string to_json(const QExpansion& f) {
  nlohmann::ordered_json j;
  j["offset24"] = f.offset24();
  j["prec"] = f.prec();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : f.coeffs()) arr.push_back(to_string(c));
  j["coeffs"] = std::move(arr);
  return j.dump();
}

QExpansion from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  long off = j.at("offset24").get<long>();
  long prec = j.at("prec").get<long>();
  std::vector<Rat> v;
  for (const auto& c : j.at("coeffs")) v.push_back(parse_rat(c.get<std::string>()));
  if (static_cast<long>(v.size()) != prec) throw DomainError("coeffs length does not match prec");
  return QExpansion(off, std::move(v));
}

}  // namespace qf
