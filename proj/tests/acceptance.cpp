// Acceptance run: one PASS/FAIL line per criterion.
// Every comparison is exact rational equality; the only tolerances are the runtime limits below.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "hecke.hpp"
#include "qforms/forms.hpp"
#include "qforms/linalg.hpp"
#include "qforms/repcount.hpp"
#include "qforms/tables.hpp"
#include "qforms/theorems.hpp"
#include "qforms/verify.hpp"

using namespace qf;

namespace {

constexpr double kLimitRamanujan = 5.0;
constexpr double kLimitThm1 = 30.0;
constexpr double kLimitTables = 120.0;

// Criteria whose literal comparison against printed numbers cannot pass. The evaluators use
// corrected values; these lines still print FAIL. The run succeeds only if each outcome matches.
const std::map<int, std::string> kKnownErrata = {
    {4, "printed c-term formulas for (1,2,3) and (1,4,2) carry non-modular sigma terms"},
    {6, "printed d15 of row 5021 is 9/11 (59/11 derived); rows 5201, 6011, 7001 absent"},
    {7, "printed Theta_{2,3} decomposition has constant term 17/16"},
};

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void info(const std::string& what) { lines.push_back("     " + what); }
};

std::string first_failure(const VerifyReport& rep) {
  for (const auto& r : rep.rows)
    if (!r.ok)
      return r.target + " at n=" + std::to_string(r.n) + ": " + r.lhs + " vs " + r.rhs + (r.note.empty() ? "" : " (" + r.note + ")");
  return "";
}

std::string report_line(const VerifyReport& rep) {
  std::ostringstream os;
  os << rep.rows.size() - rep.failures() << "/" << rep.rows.size() << " targets match through n=" << rep.upto;
  if (!rep.ok()) os << "; first failure " << first_failure(rep);
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string secs(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s << " s";
  return os.str();
}

// 1 ---------------------------------------------------------------------------------------------
Outcome ramanujan() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto rep = verify("ramanujan", 500);
  double dt = seconds_since(t0);
  o.check(rep.ok(), "12 sigma(n) - 36 sigma(n/3) = R_{1,1}(n): " + report_line(rep));
  o.check(dt < kLimitRamanujan, "runtime " + secs(dt) + " < " + secs(kLimitRamanujan));
  return o;
}

// 2 ---------------------------------------------------------------------------------------------
Outcome four_variable() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto rep = verify("thm1", 500);
  double dt = seconds_since(t0);
  o.check(rep.ok() && rep.rows.size() == 12, "12 pairs: " + report_line(rep));
  for (const auto& r : rep.rows)
    if (!r.note.empty()) o.info(r.target + ": " + r.note);
  o.check(dt < kLimitThm1, "runtime " + secs(dt) + " < " + secs(kLimitThm1));
  return o;
}

// 3 ---------------------------------------------------------------------------------------------
Outcome derived_newforms() {
  Outcome o;
  auto check_list = [&](const std::string& name, const std::vector<long>& want) {
    QExpansion f = form_series(name, static_cast<long>(want.size()) + 1);
    std::string got;
    bool ok = true;
    for (size_t i = 0; i < want.size(); ++i) {
      ok = ok && f[static_cast<long>(i) + 1] == want[i];
      got += (i ? "," : "") + to_string(f[static_cast<long>(i) + 1]);
    }
    o.check(ok, name + " a(1..) = " + got);
  };
  check_list("Delta_2_33", {1, 1, -1, -1, -2, -1, 4, -3, 1, -2});
  check_list("Delta_2_38_2", {1, 1, -1, 1, -4, -1, 3, 1, -2});
  return o;
}

// 4 ---------------------------------------------------------------------------------------------
Outcome doubled_forms() {
  Outcome o;
  const long upto = 200;
  for (const auto& t : thm2_triples()) {
    if (thm2_has_c_terms(t)) continue;
    Formula f = thm2(t);
    auto oracle = doubled_counts(t.a, t.l, t.j, upto);
    long bad = 0;
    for (long n = 1; n <= upto && !bad; ++n)
      if (f(n) != oracle[n]) bad = n;
    o.check(bad == 0, f.name + " = count for n <= " + std::to_string(upto) + (bad ? ", first miss n=" + std::to_string(bad) : ""));
  }
  for (const auto& t : {Triple{1, 2, 3}, Triple{1, 4, 2}}) {
    Formula lib = thm2(t);
    auto oracle = doubled_counts(t.a, t.l, t.j, upto);
    bool lib_ok = true;
    for (long n = 1; n <= upto; ++n) lib_ok = lib_ok && lib(n) == oracle[n];
    o.info(lib.name + " corrected closed form = count for n <= " + std::to_string(upto) + ": " + (lib_ok ? "yes" : "no"));
    auto rep = analyze_c_residual(t, upto);
    CTerms ct = thm2_c_terms(t);
    std::string seq = ct.first + " + " + to_string(ct.ratio) + " " + ct.second;
    o.check(rep.exists, lib.name + ": derived sequence " + seq + " exists");
    o.check(rep.integral, lib.name + ": derived sequence integral for n <= " + std::to_string(upto));
    o.check(rep.zero_constant, lib.name + ": zero constant term");
    o.check(rep.sigma3_terms_match, lib.name + ": printed sigma_3 terms equal the exact Eisenstein part");
    o.check(rep.quasimodular_terms_match && rep.cusp_member, lib.name + ": residual is a weight-4 cusp form");
    o.info(rep.detail);
  }
  return o;
}

// 5 ---------------------------------------------------------------------------------------------
Outcome w11() {
  Outcome o;
  auto rep = verify("w11", 200);
  o.check(rep.ok(), "W_{1,11}: " + report_line(rep) + " (constant 1/24)");
  NamedSpace sp = named_space("4,22");
  long depth = sp.check_depth();
  QExpansion e2 = eisenstein_E2(depth + 1);
  QExpansion h = series_sub(e2, series_scale(dilate_to(e2, 11, depth + 1), 11));
  auto dec = express_in_basis(series_mul(h, h), sp.series(depth + 1), depth);
  const std::map<std::string, Rat> want = {{"Ek(4)", frac(50, 61)},     {"Ek(4)@11", frac(6050, 61)},
                                           {"A_1", frac(17280, 61)},    {"A_2", frac(118656, 61)},
                                           {"A_3", frac(276480, 61)},   {"A_4", frac(276480, 61)}};
  bool ok = dec.exact();
  std::string got;
  for (const auto& [name, c] : dec.entries) {
    auto it = want.find(name);
    ok = ok && c == (it == want.end() ? Rat(0) : it->second);
    if (sgn(c) != 0) got += " " + name + "=" + to_string(c);
  }
  o.check(ok, "(E2(z) - 11 E2(11z))^2 through q^" + std::to_string(depth) + ":" + got);
  return o;
}

// 6 ---------------------------------------------------------------------------------------------
Outcome tables() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  const long nmax = 40;
  auto quads = table2_quadruples();
  auto fb = named_space("4,32").series(nmax + 1);
  auto gb = named_space("4,32,chi8").series(nmax + 1);
  std::vector<std::string> issue(quads.size());
  parallel_for(static_cast<long>(quads.size()), [&](long i) {
    const auto& q = quads[i];
    auto dec = express_in_basis(theta_octonary(q[0], q[1], q[2], q[3], nmax + 1), is_type2(q) ? gb : fb, nmax);
    if (!dec.exact()) {
      issue[i] = quad_key(q) + ": theta product outside the space";
      return;
    }
    auto printed = printed_row(q);
    if (!printed) {
      issue[i] = quad_key(q) + ": no printed row";
      return;
    }
    for (int a = 0; a < 16; ++a)
      if (dec.entries[a].second != printed->c[a]) {
        issue[i] = quad_key(q) + ": column " + std::to_string(a + 1) + " printed " + to_string(printed->c[a]) +
                   ", derived " + to_string(dec.entries[a].second);
        return;
      }
  });
  long reproduced = 0;
  for (const auto& s : issue) reproduced += s.empty();
  o.check(reproduced == static_cast<long>(quads.size()),
          "(a) " + std::to_string(reproduced) + "/" + std::to_string(quads.size()) + " printed rows re-derived through q^40");
  for (const auto& s : issue)
    if (!s.empty()) o.info(s);
  auto rep = verify("thm3", 100);
  o.check(rep.ok(), "(b) thm3 with effective rows: " + report_line(rep));
  double dt = seconds_since(t0);
  o.check(dt < kLimitTables, "runtime " + secs(dt) + " < " + secs(kLimitTables));
  return o;
}

// 7 ---------------------------------------------------------------------------------------------
struct PrintedDecomposition {
  long a, l;
  std::string space;
  std::vector<std::pair<std::string, Rat>> coeffs;
};

std::vector<PrintedDecomposition> printed_decompositions() {
  auto P = [](long b) { return "Phi_ab(1," + std::to_string(b) + ")"; };
  return {
      {1, 2, "2,6", {{P(2), frac(1, 4)}, {P(3), frac(-1, 2)}, {P(6), frac(5, 4)}}},
      {1, 3, "2,9", {{P(9), 1}, {"Psi_2_9", 3}}},
      {1, 4, "2,12", {{P(2), frac(3, 8)}, {P(3), frac(1, 2)}, {P(4), frac(-3, 4)}, {P(6), frac(-15, 8)}, {P(12), frac(11, 4)}}},
      {1, 5, "2,15", {{P(3), frac(-1, 8)}, {P(5), frac(1, 4)}, {P(15), frac(7, 8)}, {"Delta_2_15", frac(9, 2)}}},
      {2, 2, "2,14", {{P(2), frac(-1, 18)}, {P(7), frac(1, 3)}, {P(14), frac(13, 18)}, {"Delta_2_14", frac(2, 3)}}},
      {2, 3, "2,21", {{P(3), frac(1, 8)}, {P(7), frac(-3, 8)}, {P(21), frac(21, 16)}, {"Delta_2_21", frac(1, 2)}}},
      {2, 4, "2,28",
       {{P(2), frac(-1, 72)}, {P(4), frac(-1, 12)}, {P(7), frac(1, 6)}, {P(14), frac(13, 72)}, {P(28), frac(3, 4)},
        {"Delta_2_14", frac(4, 3)}, {"Delta_2_14@2", frac(8, 3)}}},
      {3, 2, "2,22", {{P(2), frac(1, 12)}, {P(11), frac(-5, 6)}, {P(22), frac(7, 4)}}},
      {4, 2, "2,30",
       {{P(2), frac(-1, 48)}, {P(3), frac(-1, 24)}, {P(5), frac(1, 12)}, {P(6), frac(-5, 48)}, {P(10), frac(3, 16)},
        {P(15), frac(7, 24)}, {P(30), frac(29, 48)}, {"Delta_2_15", frac(1, 2)}, {"Delta_2_15@2", 1}, {"Delta_2_30", 1}}},
      {5, 1, "2,19", {{P(19), 1}, {"Delta_2_19", frac(8, 3)}}},
  };
}

Outcome theta_decompositions() {
  Outcome o;
  for (const auto& pd : printed_decompositions()) {
    NamedSpace sp = named_space(pd.space);
    long depth = sp.check_depth();
    auto dec = express_in_basis(theta_quaternary(pd.a, pd.l, depth + 1), sp.series(depth + 1), depth);
    std::map<std::string, Rat> want(pd.coeffs.begin(), pd.coeffs.end());
    bool ok = dec.exact();
    std::string diff;
    for (const auto& [name, c] : dec.entries) {
      Rat w = want.count(name) ? want[name] : Rat(0);
      if (c != w) ok = false, diff += " " + name + ": printed " + to_string(w) + ", exact " + to_string(c) + ";";
    }
    std::string tag = "Theta_{" + std::to_string(pd.a) + "," + std::to_string(pd.l) + "} in M2(Gamma0(" +
                      std::to_string(sp.level) + ")) through q^" + std::to_string(depth);
    o.check(ok, tag + (ok ? "" : ":" + diff));
  }
  return o;
}

// 8 ---------------------------------------------------------------------------------------------
Outcome samples() {
  Outcome o;
  auto ch = resolved_sample_characters();
  o.check(ch.has_value(), "character pair resolved by the Type II samples: " + (ch ? ch->str() : std::string("none")));
  auto rep = verify("samples", 64);
  o.check(rep.ok(), "samples = count and = table formula: " + report_line(rep));
  if (ch)
    for (const auto& name : sample_names()) {
      Quadruple q = sample_quadruple(name);
      Formula pr = sample(name, Variant::Printed, *ch);
      long bad = 0;
      for (long n = 1; n <= 64 && !bad; ++n)
        if (pr(n) != count_octonary(q[0], q[1], q[2], q[3], n)) bad = n;
      o.info(name + " as printed: " + (bad ? "differs first at n=" + std::to_string(bad) : std::string("matches")));
    }
  return o;
}

// 9 ---------------------------------------------------------------------------------------------
Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9), len(1, 16);
  auto rnd = [&](long p) {
    std::vector<Rat> v(static_cast<size_t>(p));
    for (auto& x : v) x = frac(num(rng), den(rng));
    return QExpansion(0, std::move(v));
  };
  const int cases = 1000;
  int good = 0;
  for (int i = 0; i < cases; ++i) {
    long p = len(rng);
    QExpansion a = rnd(p), b = rnd(p), c = rnd(p);
    bool ok = (a * b).coeffs() == (b * a).coeffs() && ((a * b) * c).coeffs() == (a * (b * c)).coeffs() &&
              (a * (b + c)).coeffs() == (a * b + a * c).coeffs() && agree(a + (-a), QExpansion::zero(p));
    if (sgn(a[0]) != 0) ok = ok && agree(a * series_inverse(a), QExpansion::one(p));
    good += ok;
  }
  o.check(good == cases, "ring laws: " + std::to_string(good) + "/" + std::to_string(cases) + " random cases");

  std::vector<std::string> hecke(testing::catalogue_eigenforms().size());
  auto forms = testing::catalogue_eigenforms();
  parallel_for(static_cast<long>(forms.size()), [&](long i) { hecke[i] = testing::hecke_failure(forms[i], 60); });
  long hecke_ok = 0;
  for (const auto& s : hecke) hecke_ok += s.empty();
  o.check(hecke_ok == static_cast<long>(forms.size()),
          "Hecke multiplicativity, coprime m,n <= 60: " + std::to_string(hecke_ok) + "/" + std::to_string(forms.size()) + " eigenforms");
  for (const auto& s : hecke)
    if (!s.empty()) o.info(s);

  long values = 0, bad = 0;
  auto tally = [&](const Rat& v) {
    ++values;
    if (!is_integer(v) || sgn(v) < 0) ++bad;
  };
  for (auto [a, l] : thm1_pairs())
    for (long n = 1; n <= 500; ++n) tally(thm1_formula(a, l, n));
  for (const auto& t : thm2_triples()) {
    Formula f = thm2(t);
    for (long n = 1; n <= 200; ++n) tally(f(n));
  }
  for (long n = 1; n <= 200; ++n) tally(w11_formula(n));
  for (const auto& q : table2_quadruples()) {
    CoefficientRow row = effective_row(q);
    for (long n = 1; n <= 100; ++n) tally(thm3_with_row(row, n));
  }
  for (const auto& name : sample_names())
    for (long n = 1; n <= 64; ++n) tally(sample_formula(name, n));
  o.check(bad == 0, "integral and non-negative: " + std::to_string(values - bad) + "/" + std::to_string(values) + " formula values");
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, ramanujan}, {2, four_variable}, {3, derived_newforms}, {4, doubled_forms}, {5, w11},
      {6, tables},    {7, theta_decompositions}, {8, samples},   {9, properties}};
  bool as_expected = true;
  for (const auto& [id, run] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    double dt = seconds_since(t0);
    auto known = kKnownErrata.find(id);
    bool expected_pass = known == kKnownErrata.end();
    as_expected = as_expected && o.pass == expected_pass;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  [" << secs(dt) << "]";
    if (!o.pass && !expected_pass) std::cout << "  (expected: " << known->second << ")";
    if (o.pass != expected_pass) std::cout << "  UNEXPECTED";
    std::cout << "\n";
    for (const auto& l : o.lines) std::cout << "    " << l << "\n";
  }
  std::cout << (as_expected ? "all criteria behaved as pinned" : "some criteria departed from the pinned outcome") << "\n";
  return as_expected ? 0 : 1;
}
