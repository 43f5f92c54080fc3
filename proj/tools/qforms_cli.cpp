#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <regex>

#include "qforms/errors.hpp"
#include "qforms/forms.hpp"
#include "qforms/linalg.hpp"
#include "qforms/repcount.hpp"
#include "qforms/tables.hpp"
#include "qforms/theorems.hpp"
#include "qforms/verify.hpp"

using namespace qf;
using nlohmann::ordered_json;

namespace {

struct Common {
  long prec = kDefaultPrec;
  long upto = 0;
  long n = 0;
  std::string format = "json";
};

void emit_sweep(const std::string& fmt, long from, long to, const std::function<std::string(long)>& value) {
  if (fmt == "csv") std::cout << "n,value\n";
  for (long n = from; n <= to; ++n) {
    std::string v = value(n);
    if (fmt == "csv")
      std::cout << n << "," << v << "\n";
    else
      std::cout << ordered_json{{"n", n}, {"value", v}}.dump() << "\n";
  }
}

// n range from --n (single value) or --upto (0..upto or 1..upto).
std::pair<long, long> range(const Common& c, long first) {
  if (c.n > 0) return {c.n, c.n};
  if (c.upto < first) throw DomainError("give --upto >= " + std::to_string(first) + " or --n");
  return {first, c.upto};
}

QExpansion decompose_target(const std::string& spec, long prec) {
  static const std::regex quat(R"(theta:(\d+),(\d+))");
  static const std::regex dbl(R"(theta:(\d+),(\d+),(\d+))");
  static const std::regex oct(R"(theta8:(\d),(\d),(\d),(\d))");
  std::smatch m;
  if (std::regex_match(spec, m, quat)) return theta_quaternary(std::stol(m[1]), std::stol(m[2]), prec);
  if (std::regex_match(spec, m, dbl)) {
    QExpansion t = theta_quaternary(std::stol(m[1]), std::stol(m[2]), prec);
    return series_mul(t, dilate_to(t, std::stol(m[3]), prec));
  }
  if (std::regex_match(spec, m, oct))
    return theta_octonary(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4]), prec);
  return form_series(spec, prec);
}

int run(int argc, char** argv) {
  CLI::App app{"Exact q-expansions, theta series and representation-number formulas"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* s, bool with_upto) {
    s->add_option("--prec", c.prec, "Working precision (coefficients)")->check(CLI::PositiveNumber);
    if (with_upto) {
      s->add_option("--upto", c.upto, "Largest n");
      s->add_option("--n", c.n, "Single n");
    }
    s->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* forms = app.add_subcommand("forms", "Catalogue forms");
  forms->require_subcommand(1);
  auto* emit = forms->add_subcommand("emit", "Print a form's q-expansion as JSON");
  std::string form_id;
  emit->add_option("id", form_id, "Form id, e.g. Delta_2_11, Phi_ab(1,2), eta(1^2 11^2), Delta_2_11@3")->required();
  add_common(emit, false);

  auto* count = app.add_subcommand("count", "Representation numbers by lattice enumeration");
  std::string form_spec;
  count->add_option("--form", form_spec, "quaternary:a=1,l=2 | doubled:a=1,l=2,j=3 | octonary:1,0,1,6")->required();
  add_common(count, true);

  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form formula");
  std::string thm;
  long a = 0, l = 0, j = 0;
  std::string quad, sample_name, variant = "library";
  formula->add_option("--thm", thm, "1, 2, 3 or sample")->required()->check(CLI::IsMember({"1", "2", "3", "sample"}));
  formula->add_option("--a", a);
  formula->add_option("--l", l);
  formula->add_option("--j", j);
  formula->add_option("--quad", quad, "Octonary quadruple, e.g. 1016");
  formula->add_option("--name", sample_name, "Sample formula name, e.g. N(1^1,8^7)");
  formula->add_option("--variant", variant)->check(CLI::IsMember({"library", "printed"}));
  add_common(formula, true);

  auto* decompose = app.add_subcommand("decompose", "Exact decomposition in a named basis");
  std::string target, space;
  long nmax = 0;
  decompose->add_option("--target", target, "theta:a,l | theta:a,l,j | theta8:i,j,k,l | form id")->required();
  decompose->add_option("--space", space, "k,N[,chi8]")->required();
  decompose->add_option("--nmax", nmax, "Exponents checked (default max(2*Sturm, 40))");
  add_common(decompose, false);

  auto* ver = app.add_subcommand("verify", "Check formulas against the enumeration oracles");
  std::string suite = "all";
  ver->add_option("--suite", suite)->check(CLI::IsMember(verify_suites()));
  add_common(ver, true);

  auto* tables = app.add_subcommand("tables", "Embedded coefficient tables");
  tables->require_subcommand(1);
  auto* dump = tables->add_subcommand("dump", "Print a table");
  int which = 3;
  bool effective = false;
  dump->add_option("--which", which)->required()->check(CLI::IsMember({3, 4}));
  dump->add_flag("--effective", effective, "Apply errata and append derived rows");
  add_common(dump, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (*emit) {
    QExpansion f;
    bool plain = form_id.find('@') != std::string::npos || form_id == "Delta_2_33" || form_id == "Delta_2_38_2";
    f = plain ? form_series(form_id, c.prec) : catalogue(form_id, c.prec);
    std::cout << to_json(f) << "\n";
    return 0;
  }
  if (*count) {
    QFormSpec spec = QFormSpec::parse(form_spec);
    auto [lo, hi] = range(c, 0);
    auto v = counts(spec, hi);
    emit_sweep(c.format, lo, hi, [&](long n) { return std::to_string(v[n]); });
    return 0;
  }
  if (*formula) {
    Variant var = variant == "printed" ? Variant::Printed : Variant::Library;
    std::function<Rat(long)> f;
    if (thm == "1") {
      f = thm1(a, l, var);
    } else if (thm == "2") {
      f = thm2(Triple{a, l, j}, var);
    } else if (thm == "3") {
      Quadruple q = parse_quad_key(quad);
      CoefficientRow row = var == Variant::Printed ? printed_row(q).value_or(effective_row(q)) : effective_row(q);
      f = [row](long n) { return thm3_with_row(row, n); };
    } else {
      if (var == Variant::Printed) {
        auto ch = resolved_sample_characters();
        if (!ch) throw DomainError("sample characters unresolved");
        f = sample(sample_name, var, *ch);
      } else {
        sample_quadruple(sample_name);
        f = [sample_name](long n) { return sample_formula(sample_name, n); };
      }
    }
    auto [lo, hi] = range(c, 1);
    emit_sweep(c.format, lo, hi, [&](long n) { return to_string(f(n)); });
    return 0;
  }
  if (*decompose) {
    NamedSpace sp = named_space(space);
    long depth = nmax > 0 ? nmax : sp.check_depth();
    auto dec = express_in_basis(decompose_target(target, depth + 1), sp.series(depth + 1), depth);
    std::cout << dec.to_json() << "\n";
    return dec.exact() ? 0 : 1;
  }
  if (*ver) {
    long upto = c.upto > 0 ? c.upto : 100;
    VerifyReport rep = verify(suite, upto);
    if (c.format == "csv") std::cout << "target,checked,ok,n,lhs,rhs,note\n";
    for (const auto& r : rep.rows) {
      if (c.format == "csv")
        std::cout << '"' << r.target << "\"," << r.checked << "," << (r.ok ? "true" : "false") << "," << r.n << ","
                  << r.lhs << "," << r.rhs << ",\"" << r.note << "\"\n";
      else
        std::cout << ordered_json{{"target", r.target}, {"checked", r.checked}, {"ok", r.ok}, {"n", r.n},
                                  {"lhs", r.lhs},       {"rhs", r.rhs},         {"note", r.note}}
                         .dump()
                  << "\n";
    }
    if (!rep.ok()) std::cerr << rep.failures() << " of " << rep.rows.size() << " targets failed\n";
    return rep.ok() ? 0 : 1;
  }
  if (*dump) {
    std::vector<CoefficientRow> rows = which == 3 ? table3() : table4();
    if (effective) {
      for (auto& r : rows) r = effective_row(r.quad);
      if (which == 4) rows.insert(rows.end(), table4_derived().begin(), table4_derived().end());
    }
    if (c.format == "csv") {
      std::cout << "quadruple";
      for (int k = 1; k <= 16; ++k) std::cout << "," << (which == 3 ? "c" : "d") << k;
      std::cout << "\n";
    }
    for (const auto& r : rows) {
      if (c.format == "csv") {
        std::cout << quad_key(r.quad);
        for (const auto& x : r.c) std::cout << "," << to_string(x);
        std::cout << "\n";
      } else {
        auto arr = ordered_json::array();
        for (const auto& x : r.c) arr.push_back(to_string(x));
        std::cout << ordered_json{{"quadruple", quad_key(r.quad)}, {"coeffs", arr},
                                  {"source", r.source == CoefficientRow::Source::Derived ? "derived" : "printed"}}
                         .dump()
                  << "\n";
      }
    }
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UnsupportedForm& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
