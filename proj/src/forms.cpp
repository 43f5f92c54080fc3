#include "qforms/forms.hpp"

#include <cmath>
#include <map>
#include <regex>
#include <sstream>

#include "qforms/errors.hpp"

namespace qf {

long EtaQuotient::offset24() const {
  long s = 0;
  for (auto [d, r] : factors) s += d * r;
  return s;
}

long EtaQuotient::weight2() const {
  long s = 0;
  for (auto [d, r] : factors) s += r;
  return s;
}

std::string EtaQuotient::str() const {
  std::string out;
  for (auto [d, r] : factors) {
    if (!out.empty()) out += ' ';
    out += std::to_string(d) + "^" + std::to_string(r);
  }
  return out;
}

EtaQuotient EtaQuotient::parse(const std::string& s) {
  static const std::regex tok(R"((\d+)\^(-?\d+))");
  EtaQuotient eq;
  std::string rest = s;
  for (std::sregex_iterator it(s.begin(), s.end(), tok), end; it != end; ++it) {
    long d = std::stol((*it)[1]), r = std::stol((*it)[2]);
    if (d < 1 || r == 0) throw DomainError("bad eta factor in '" + s + "'");
    eq.factors.emplace_back(d, r);
  }
  if (eq.factors.empty()) throw DomainError("no eta factors in '" + s + "'");
  return eq;
}

QExpansion eta_expansion(const EtaQuotient& eq, long prec) {
  // q d/dq log F = -sum c(m) q^m with c(m) = sum r d sigma(m/d); then m a(m) = -sum_j c(j) a(m-j).
  std::vector<long> c(static_cast<size_t>(std::max(prec, 1L)), 0);
  for (auto [d, r] : eq.factors)
    for (long m = d; m < prec; m += d) c[m] += r * d * sigma(1, m / d).get_si();
  std::vector<Int> a(static_cast<size_t>(prec));
  if (prec > 0) a[0] = 1;
  Int acc;
  for (long m = 1; m < prec; ++m) {
    acc = 0;
    for (long j = 1; j <= m; ++j) {
      long cj = c[j];
      if (cj == 0 || sgn(a[m - j]) == 0) continue;
      if (cj > 0)
        mpz_addmul_ui(acc.get_mpz_t(), a[m - j].get_mpz_t(), static_cast<unsigned long>(cj));
      else
        mpz_submul_ui(acc.get_mpz_t(), a[m - j].get_mpz_t(), static_cast<unsigned long>(-cj));
    }
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(m));
    a[m] = -acc;
  }
  std::vector<Rat> v(a.begin(), a.end());
  return QExpansion(eq.offset24(), std::move(v));
}

QExpansion eta_expansion_by_products(const EtaQuotient& eq, long prec) {
  // prod_{n>=1} (1 - q^n) to prec, built factor by factor.
  QExpansion euler = QExpansion::one(prec);
  for (long n = 1; n < prec; ++n) {
    std::vector<Rat> f(static_cast<size_t>(prec));
    f[0] = 1;
    f[n] = -1;
    euler = series_mul(euler, QExpansion(0, std::move(f)));
  }
  QExpansion num = QExpansion::one(prec), den = QExpansion::one(prec);
  for (auto [d, r] : eq.factors) {
    QExpansion e = series_dilate(euler, d).truncated(prec);
    QExpansion p = series_pow(e, std::labs(r));
    if (r > 0)
      num = series_mul(num, p);
    else
      den = series_mul(den, p);
  }
  QExpansion out = series_div(num, den);
  return QExpansion(eq.offset24(), out.coeffs());
}

QExpansion standard_form(const QExpansion& f, long prec) {
  long s = f.start_exponent();
  if (s < 0) throw DomainError("series has negative exponents");
  QExpansion g = s == 0 ? f : f.realigned(0);
  if (g.prec() < prec) throw DomainError("series precision " + std::to_string(g.prec()) + " below requested " + std::to_string(prec));
  return g.truncated(prec);
}

QExpansion eta_series(const EtaQuotient& eq, long prec) {
  long off = eq.offset24();
  if (off % 24 != 0 || off < 0) throw DomainError("eta quotient " + eq.str() + " is not an integer-exponent series");
  long k = off / 24;
  return standard_form(eta_expansion(eq, std::max(prec - k, 0L)), prec);
}

QExpansion dilate_to(const QExpansion& f, long d, long prec) {
  long need = (prec + d - 1) / d;
  return standard_form(series_dilate(standard_form(f, std::min(need, f.prec() + f.start_exponent())), d), prec);
}

QExpansion theta_expansion(long prec) {
  std::vector<Rat> v(static_cast<size_t>(prec));
  for (long n = 0; n * n < prec; ++n) v[n * n] += n == 0 ? 1 : 2;
  return QExpansion(0, std::move(v));
}

QExpansion theta_binary(long a, long prec) {
  if (a < 1) throw DomainError("theta_binary needs a >= 1");
  // (2m+n)^2 + (4a-1) n^2 = 4N, so (4a-1) n^2 < 4 prec.
  std::vector<long> cnt(static_cast<size_t>(prec), 0);
  long nb = static_cast<long>(std::sqrt(4.0 * prec / (4 * a - 1))) + 1;
  long mb = static_cast<long>(std::sqrt(4.0 * prec)) + nb + 1;
  for (long n = -nb; n <= nb; ++n)
    for (long m = -mb; m <= mb; ++m) {
      long v = m * m + m * n + a * n * n;
      if (v < prec) ++cnt[v];
    }
  std::vector<Rat> out(cnt.begin(), cnt.end());
  return QExpansion(0, std::move(out));
}

QExpansion theta_quaternary(long a, long l, long prec) {
  QExpansion t = theta_binary(a, prec);
  return series_mul(t, dilate_to(t, l, prec));
}

QExpansion theta_octonary(long i, long j, long k, long l, long prec) {
  QExpansion th = theta_expansion(prec);
  QExpansion out = QExpansion::one(prec);
  long e[4] = {i, j, k, l};
  long d[4] = {1, 2, 4, 8};
  for (int t = 0; t < 4; ++t)
    if (e[t] > 0) out = series_mul(out, series_pow(dilate_to(th, d[t], prec), e[t]));
  return out;
}

QExpansion eisenstein_E2(long prec) {
  std::vector<Rat> v(static_cast<size_t>(prec));
  if (prec > 0) v[0] = 1;
  for (long n = 1; n < prec; ++n) v[n] = -24 * sigma(1, n);
  return QExpansion(0, std::move(v));
}

QExpansion eisenstein_Ek(int k, long prec) {
  if (k < 4 || k % 2) throw DomainError("E_k needs even k >= 4");
  Rat f = Rat(-2 * k) / bernoulli(k);
  std::vector<Rat> v(static_cast<size_t>(prec));
  if (prec > 0) v[0] = 1;
  for (long n = 1; n < prec; ++n) v[n] = f * sigma(k - 1, n);
  return QExpansion(0, std::move(v));
}

QExpansion phi_ab(long a, long b, long prec) {
  if (a < 1 || b % a != 0 || a == b) throw DomainError("Phi_{a,b} needs a | b and a != b");
  QExpansion e2 = eisenstein_E2(prec);
  return series_scale(series_sub(series_scale(dilate_to(e2, b, prec), b), series_scale(dilate_to(e2, a, prec), a)),
                      frac(1, b - a));
}

QExpansion eisenstein_twisted(int k, const DirichletCharacter& chi, const DirichletCharacter& psi, long prec) {
  int sign = (k % 2) ? -1 : 1;
  if (chi.parity() * psi.parity() != sign) throw DomainError("character parity does not match the weight");
  std::vector<Rat> v(static_cast<size_t>(prec));
  if (prec > 0 && chi.conductor() == 1) v[0] = -gen_bernoulli(k, psi) / (2 * k);
  for (long n = 1; n < prec; ++n) v[n] = twisted_sigma(k - 1, chi, psi, n);
  return QExpansion(0, std::move(v));
}

// ---------------------------------------------------------------------------
// Catalogue

FormId FormId::parse(const std::string& s) {
  FormId id;
  auto lp = s.find('(');
  if (lp == std::string::npos) {
    id.tag = s;
    return id;
  }
  if (s.back() != ')') throw UnsupportedForm("malformed form id '" + s + "'");
  id.tag = s.substr(0, lp);
  std::string inner = s.substr(lp + 1, s.size() - lp - 2);
  if (id.tag == "eta") {
    id.eta = EtaQuotient::parse(inner);
    return id;
  }
  std::stringstream ss(inner);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) throw UnsupportedForm("malformed form id '" + s + "'");
    if (part.rfind("chi", 0) == 0 || (id.tag == "E_twisted" && !id.args.empty() && part == "1"))
      id.chars.push_back(parse_character(part));
    else
      id.args.push_back(std::stol(part));
  }
  return id;
}

std::string FormId::str() const {
  if (tag == "eta") return "eta(" + eta.str() + ")";
  if (args.empty() && chars.empty()) return tag;
  std::string out = tag + "(";
  bool first = true;
  for (long a : args) {
    out += (first ? "" : ",") + std::to_string(a);
    first = false;
  }
  for (const auto& c : chars) {
    out += (first ? "" : ",") + c.name();
    first = false;
  }
  return out + ")";
}

namespace {

const std::map<std::string, EtaQuotient>& eta_catalogue() {
  static const std::map<std::string, EtaQuotient> m = {
      {"Delta_2_11", {{1, 2}, {11, 2}}},
      {"Delta_2_14", {{1, 1}, {2, 1}, {7, 1}, {14, 1}}},
      {"Delta_2_15", {{1, 1}, {3, 1}, {5, 1}, {15, 1}}},
      {"Psi_2_9", {{1, 3}, {3, -2}, {9, 3}}},
      {"A_1", {{1, 6}, {2, -2}, {11, 6}, {22, -2}}},
      {"A_2", {{1, 4}, {11, 4}}},
      {"A_3", {{1, 2}, {2, 2}, {11, 2}, {22, 2}}},
      {"A_4", {{2, 4}, {22, 4}}},
      {"A_5", {{1, -2}, {2, 6}, {11, -2}, {22, 6}}},
      {"A_6", {{1, -1}, {2, 1}, {11, 3}, {22, 5}}},
      {"A_7", {{1, -5}, {2, 9}, {11, 7}, {22, -3}}},
      {"f_4_8", {{2, 4}, {4, 4}}},
      {"f_4_16", {{2, -4}, {4, 16}, {8, -4}}},
      {"g_4_32_1", {{1, -2}, {2, 1}, {4, 8}, {8, 3}, {16, -2}}},
      {"g_4_32_2", {{1, 2}, {2, 3}, {8, 1}, {16, 2}}},
      {"g_4_32_3", {{1, -4}, {2, 6}, {4, 8}, {8, -2}}},
      {"f_4_8_chi8_1", {{1, -2}, {2, 11}, {4, -3}, {8, 2}}},
      {"f_4_8_chi8_2", {{1, 2}, {2, -3}, {4, 11}, {8, -2}}},
      {"g_4_32_chi8_1", {{1, 2}, {2, 1}, {4, 5}}},
      {"g_4_32_chi8_2", {{1, -2}, {2, 3}, {4, 3}, {8, 4}}},
      {"RamanujanPhi", {{1, -2}, {2, 5}, {4, -2}}},
      {"tau_4_6", {{1, 2}, {2, 2}, {3, 2}, {6, 2}}},
      {"tau_4_8", {{2, 4}, {4, 4}}},
      {"tau_4_9", {{3, 8}}},
  };
  return m;
}

QExpansion ramanujan_psi(long prec) {
  // q^{-1/8} eta^2(2z)/eta(z)
  QExpansion e = eta_expansion(EtaQuotient{{1, -1}, {2, 2}}, prec);
  return series_shift(e, -3);
}

QExpansion delta_2_19(long prec) {
  QExpansion phi = eta_series(eta_catalogue().at("RamanujanPhi"), prec);
  QExpansion psi = ramanujan_psi(prec);
  auto d = [&](const QExpansion& f, long k) { return dilate_to(f, k, prec); };
  QExpansion inner = series_mul(d(psi, 4), d(phi, 38));
  inner = series_sub(inner, series_shift(series_mul(psi, d(psi, 19)), 48));
  inner = series_add(inner, series_shift(series_mul(d(phi, 2), d(psi, 76)), 9 * 24));
  QExpansion sq = series_mul(inner, inner);
  return standard_form(series_shift(sq, 24), prec);
}

QExpansion delta_2_21(long prec) {
  // eta(7z)/(2 eta^2(z) eta(3z) eta(9z) eta(21z)) times a six-term sum of eta products.
  const std::vector<std::pair<long, EtaQuotient>> terms = {
      {3, {{1, 2}, {7, 2}, {9, 4}}},
      {-1, {{3, 5}, {7, 1}, {9, 1}, {21, 1}}},
      {3, {{1, 4}, {9, 2}, {63, 2}}},
      {7, {{1, 1}, {3, 2}, {9, 1}, {21, 4}}},
      {3, {{1, 3}, {7, 1}, {9, 3}, {63, 1}}},
      {-3, {{1, 1}, {3, 5}, {21, 1}, {63, 1}}},
  };
  long p = prec + 2;
  std::vector<std::pair<Rat, QExpansion>> parts;
  for (const auto& [c, eq] : terms) parts.emplace_back(Rat(c), eta_expansion(eq, p));
  QExpansion inner = series_lincomb(parts);
  QExpansion pre = eta_expansion(EtaQuotient{{7, 1}, {1, -2}, {3, -1}, {9, -1}, {21, -1}}, p);
  QExpansion out = series_scale(series_mul(pre, inner), frac(1, 2));
  return standard_form(out, prec);
}

QExpansion delta_2_30(long prec) {
  return series_sub(eta_series(EtaQuotient{{3, 1}, {5, 1}, {6, 1}, {10, 1}}, prec),
                    eta_series(EtaQuotient{{1, 1}, {2, 1}, {15, 1}, {30, 1}}, prec));
}

QExpansion tau_4_12(long prec) {
  return series_sub(series_scale(eta_series(EtaQuotient{{1, -1}, {2, 2}, {3, 3}, {4, 3}, {6, 2}, {12, -1}}, prec), 2),
                    eta_series(EtaQuotient{{1, -2}, {2, 8}, {3, -2}, {4, -2}, {6, 8}, {12, -2}}, prec));
}

}  // namespace

std::vector<std::string> catalogue_names() {
  std::vector<std::string> out = {"Theta", "Theta_a(a)", "Theta_al(a,l)", "Phi_ab(a,b)", "E2", "Ek(k)",
                                  "E_twisted(k,chi,psi)", "E4_chi4_chi4", "Delta_2_19", "Delta_2_21", "Delta_2_30",
                                  "RamanujanPsi", "f_4_32_1", "f_4_32_2", "f_4_32_3", "f_4_32_chi8_1",
                                  "f_4_32_chi8_2", "tau_4_12", "eta(d^r ...)"};
  for (const auto& [k, v] : eta_catalogue()) out.push_back(k);
  return out;
}

QExpansion catalogue(const FormId& id, long prec) {
  const auto& t = id.tag;
  auto need_args = [&](size_t n) {
    if (id.args.size() != n) throw UnsupportedForm("form '" + id.str() + "' expects " + std::to_string(n) + " arguments");
  };
  if (t == "eta") return eta_expansion(id.eta, prec);
  if (t == "Theta") return theta_expansion(prec);
  if (t == "Theta_a") return need_args(1), theta_binary(id.args[0], prec);
  if (t == "Theta_al") return need_args(2), theta_quaternary(id.args[0], id.args[1], prec);
  if (t == "Phi_ab") return need_args(2), phi_ab(id.args[0], id.args[1], prec);
  if (t == "E2") return eisenstein_E2(prec);
  if (t == "Ek") return need_args(1), eisenstein_Ek(static_cast<int>(id.args[0]), prec);
  if (t == "E_twisted") {
    need_args(1);
    if (id.chars.size() != 2) throw UnsupportedForm("E_twisted needs two characters");
    return eisenstein_twisted(static_cast<int>(id.args[0]), id.chars[0], id.chars[1], prec);
  }
  if (t == "E4_chi4_chi4") return eisenstein_twisted(4, chars::chi_m4(), chars::chi_m4(), prec);
  if (t == "Delta_2_19") return delta_2_19(prec);
  if (t == "Delta_2_21") return delta_2_21(prec);
  if (t == "Delta_2_30") return delta_2_30(prec);
  if (t == "RamanujanPsi") return ramanujan_psi(prec);
  if (t == "tau_4_12") return tau_4_12(prec);
  if (t.rfind("f_4_32_chi8_", 0) == 0) {
    // chi_4 twist: keep the odd exponents.
    return project_residue(catalogue("g_4_32_chi8_" + t.substr(12), prec), 1, 2);
  }
  if (t.rfind("f_4_32_", 0) == 0 && t.size() == 8) return project_residue(catalogue("g_4_32_" + t.substr(7), prec), 1, 2);
  auto it = eta_catalogue().find(t);
  if (it != eta_catalogue().end()) return eta_series(it->second, prec);
  throw UnsupportedForm("unknown form '" + id.str() + "'");
}

QExpansion catalogue(const std::string& id, long prec) { return catalogue(FormId::parse(id), prec); }

}  // namespace qf
