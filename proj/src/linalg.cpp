#include "qforms/linalg.hpp"

#include <json.hpp>
#include <map>
#include <mutex>

#include "qforms/arithmetic.hpp"
#include "qforms/errors.hpp"
#include "qforms/forms.hpp"

namespace qf {

long sturm_bound(long k, long N) {
  Rat index = N;
  for (long p : prime_factors(N)) index *= frac(p + 1, p);
  Rat b = k * index / 12;
  Int v = b.get_num() / b.get_den();
  return std::max(1L, v.get_si());
}

Rat BasisDecomposition::coefficient(const std::string& name) const {
  for (const auto& [n, c] : entries)
    if (n == name) return c;
  throw DomainError("no basis element '" + name + "'");
}

std::string BasisDecomposition::to_json() const {
  nlohmann::ordered_json j;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [n, c] : entries) arr.push_back({{"form", n}, {"coeff", qf::to_string(c)}});
  j["entries"] = std::move(arr);
  j["verified_through"] = verified_through;
  j["status"] = exact() ? "exact-match" : "inconsistent";
  if (!exact()) j["first_mismatch"] = first_mismatch;
  return j.dump();
}

std::vector<Rat> solve_exact(RatMatrix A, RatVector b) {
  const long rows = A.rows(), cols = A.cols();
  std::vector<long> pivot_col_row(static_cast<size_t>(cols), -1);
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    // Smallest-height nonzero pivot keeps the intermediate fractions short.
    long best = -1;
    size_t best_size = 0;
    for (long i = r; i < rows; ++i) {
      if (sgn(A(i, c)) == 0) continue;
      size_t sz = mpz_sizeinbase(A(i, c).get_num_mpz_t(), 2) + mpz_sizeinbase(A(i, c).get_den_mpz_t(), 2);
      if (best < 0 || sz < best_size) best = i, best_size = sz;
    }
    if (best < 0) throw DegenerateBasis("basis column " + std::to_string(c) + " is dependent on the earlier ones");
    A.row(r).swap(A.row(best));
    std::swap(b(r), b(best));
    Rat inv = 1 / A(r, c);
    for (long i = 0; i < rows; ++i) {
      if (i == r || sgn(A(i, c)) == 0) continue;
      Rat f = A(i, c) * inv;
      for (long k = c; k < cols; ++k)
        if (sgn(A(r, k)) != 0) A(i, k) -= f * A(r, k);
      b(i) -= f * b(r);
    }
    pivot_col_row[c] = r++;
  }
  if (r < cols) throw DegenerateBasis("basis has rank " + std::to_string(r) + " < " + std::to_string(cols));
  for (long i = r; i < rows; ++i)
    if (sgn(b(i)) != 0) return {};
  std::vector<Rat> x(static_cast<size_t>(cols));
  for (long c = 0; c < cols; ++c) x[c] = b(pivot_col_row[c]) / A(pivot_col_row[c], c);
  return x;
}

BasisDecomposition express_in_basis(const QExpansion& target, const std::vector<NamedSeries>& basis, long nmax) {
  if (basis.empty()) throw DegenerateBasis("empty basis");
  const long rows = nmax + 1, cols = static_cast<long>(basis.size());
  auto value = [&](const QExpansion& f, long e) -> Rat {
    if (f.offset24() != 0) throw OffsetMismatch("express_in_basis needs offset-0 series");
    if (e >= f.prec()) throw DomainError("series precision " + std::to_string(f.prec()) + " too short for nmax " + std::to_string(nmax));
    return f[e];
  };
  RatMatrix A(rows, cols);
  RatVector b(rows);
  for (long e = 0; e < rows; ++e) {
    for (long c = 0; c < cols; ++c) A(e, c) = value(basis[c].second, e);
    b(e) = value(target, e);
  }
  BasisDecomposition out;
  std::vector<Rat> x = solve_exact(A, b);
  if (!x.empty()) {
    out.status = BasisDecomposition::Status::ExactMatch;
    out.verified_through = nmax;
  } else {
    // Solve on the leading independent rows and locate the first exponent that disagrees.
    long take = cols;
    while (x.empty() && take <= rows) {
      try {
        x = solve_exact(A.topRows(take), b.head(take));
      } catch (const DegenerateBasis&) {
      }
      ++take;
    }
    out.status = BasisDecomposition::Status::Inconsistent;
    for (long e = 0; e < rows && out.first_mismatch < 0; ++e) {
      Rat s = 0;
      for (long c = 0; c < cols && !x.empty(); ++c) s += x[c] * A(e, c);
      if (s != b(e)) out.first_mismatch = e;
    }
    out.verified_through = out.first_mismatch - 1;
  }
  for (long c = 0; c < cols; ++c) out.entries.emplace_back(basis[c].first, x.empty() ? Rat(0) : x[c]);
  return out;
}

QExpansion derive_cusp_residual(const QExpansion& theta, const QExpansion& known, const Rat& scale) {
  if (sgn(scale) == 0) throw DomainError("residual scale must be nonzero");
  return series_scale(series_sub(theta, known), 1 / scale);
}

QExpansion derived_delta_2_33(long prec) {
  QExpansion known = series_lincomb({{frac(-1, 20), form_series("Phi_ab(1,3)", prec)},
                                     {frac(1, 4), form_series("Phi_ab(1,11)", prec)},
                                     {frac(4, 5), form_series("Phi_ab(1,33)", prec)},
                                     {frac(16, 15), form_series("Delta_2_11", prec)},
                                     {frac(16, 5), form_series("Delta_2_11@3", prec)}});
  return derive_cusp_residual(theta_quaternary(3, 3, prec), known, frac(1, 3));
}

QExpansion derived_delta_2_38_2(long prec) {
  QExpansion known = series_lincomb({{frac(1, 20), form_series("Phi_ab(1,2)", prec)},
                                     {frac(-9, 10), form_series("Phi_ab(1,19)", prec)},
                                     {frac(37, 20), form_series("Phi_ab(1,38)", prec)}});
  return derive_cusp_residual(theta_quaternary(5, 2, prec), known, frac(4, 5));
}

namespace {

QExpansion compute_form(const std::string& name, long prec) {
  auto at = name.rfind('@');
  if (at != std::string::npos && name.find(')', at) == std::string::npos) {
    long d = std::stol(name.substr(at + 1));
    if (d < 1) throw DomainError("bad dilation in '" + name + "'");
    long base = (prec + d - 1) / d;
    return standard_form(series_dilate(form_series(name.substr(0, at), base), d), prec);
  }
  if (name == "Delta_2_33") return derived_delta_2_33(prec);
  if (name == "Delta_2_38_2") return derived_delta_2_38_2(prec);
  return standard_form(catalogue(name, prec), prec);
}

std::mutex cache_mu;
std::map<std::string, QExpansion> cache;

}  // namespace

QExpansion form_series(const std::string& name, long prec) {
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(name);
    if (it != cache.end() && it->second.prec() >= prec) return it->second.truncated(prec);
  }
  QExpansion f = compute_form(name, prec);
  std::lock_guard<std::mutex> lock(cache_mu);
  auto& slot = cache[name];
  if (slot.prec() < f.prec()) slot = f;
  return f;
}

Rat form_coefficient(const std::string& name, long n) {
  if (n < 0) return 0;
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(name);
    if (it != cache.end() && it->second.prec() > n) return it->second[n];
  }
  return form_series(name, std::max(2 * (n + 1), 2 * kDefaultPrec))[n];
}

std::vector<NamedSeries> NamedSpace::series(long prec) const {
  std::vector<NamedSeries> out;
  for (const auto& b : basis) out.emplace_back(b, form_series(b, prec));
  return out;
}

long NamedSpace::check_depth() const { return std::max(2 * sturm_bound(weight, level), 40L); }

namespace {

std::vector<std::string> dilates(const std::string& f, std::initializer_list<long> ds) {
  std::vector<std::string> out;
  for (long d : ds) out.push_back(d == 1 ? f : f + "@" + std::to_string(d));
  return out;
}

std::vector<std::string> cat(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

const std::map<std::string, NamedSpace>& spaces() {
  static const std::map<std::string, NamedSpace> m = [] {
    std::map<std::string, NamedSpace> s;
    auto add = [&](const std::string& id, long k, long N, std::vector<std::string> b) {
      s[id] = NamedSpace{id, k, N, std::move(b)};
    };
    add("2,6", 2, 6, {"Phi_ab(1,2)", "Phi_ab(1,3)", "Phi_ab(1,6)"});
    add("2,9", 2, 9, {"Phi_ab(1,3)", "Phi_ab(1,9)", "Psi_2_9"});
    add("2,12", 2, 12, {"Phi_ab(1,2)", "Phi_ab(1,3)", "Phi_ab(1,4)", "Phi_ab(1,6)", "Phi_ab(1,12)"});
    add("2,15", 2, 15, {"Phi_ab(1,3)", "Phi_ab(1,5)", "Phi_ab(1,15)", "Delta_2_15"});
    add("2,14", 2, 14, {"Phi_ab(1,2)", "Phi_ab(1,7)", "Phi_ab(1,14)", "Delta_2_14"});
    add("2,21", 2, 21, {"Phi_ab(1,3)", "Phi_ab(1,7)", "Phi_ab(1,21)", "Delta_2_21"});
    add("2,28", 2, 28,
        {"Phi_ab(1,2)", "Phi_ab(1,4)", "Phi_ab(1,7)", "Phi_ab(1,14)", "Phi_ab(1,28)", "Delta_2_14", "Delta_2_14@2"});
    add("2,22", 2, 22, {"Phi_ab(1,2)", "Phi_ab(1,11)", "Phi_ab(1,22)", "Delta_2_11", "Delta_2_11@2"});
    add("2,30", 2, 30,
        {"Phi_ab(1,2)", "Phi_ab(1,3)", "Phi_ab(1,5)", "Phi_ab(1,6)", "Phi_ab(1,10)", "Phi_ab(1,15)", "Phi_ab(1,30)",
         "Delta_2_15", "Delta_2_15@2", "Delta_2_30"});
    add("2,19", 2, 19, {"Phi_ab(1,19)", "Delta_2_19"});
    add("2,33", 2, 33,
        {"Phi_ab(1,3)", "Phi_ab(1,11)", "Phi_ab(1,33)", "Delta_2_11", "Delta_2_11@3", "Delta_2_33"});
    // Only the constructible part of M2(Gamma0(38)); the other level-38 newform has no closed form here.
    add("2,38", 2, 38,
        {"Phi_ab(1,2)", "Phi_ab(1,19)", "Phi_ab(1,38)", "Delta_2_19", "Delta_2_19@2", "Delta_2_38_2"});
    add("4,22", 4, 22, cat({dilates("Ek(4)", {1, 2, 11, 22}), {"A_1", "A_2", "A_3", "A_4", "A_5", "A_6", "A_7"}}));
    add("4,18", 4, 18,
        cat({dilates("Ek(4)", {1, 2, 3, 6, 9, 18}),
             {"eta(1^-4 2^8 3^4)", "eta(1^-3 2^6 3^3 6^1 9^2 18^-1)", "eta(1^-2 2^1 3^8 9^2 18^-1)",
              "eta(1^-2 2^4 3^2 6^2 9^4 18^-2)", "eta(1^-1 2^-1 3^6 6^6 9^-1 18^-1)"}}));
    add("4,24", 4, 24,
        cat({dilates("Ek(4)", {1, 2, 3, 4, 6, 8, 12, 24}),
             {"eta(1^-3 2^3 3^5 4^4 6^1 8^-2 12^-2 24^2)", "eta(1^-3 2^3 3^5 4^5 6^-3 8^-1 12^3 24^-1)",
              "eta(1^-3 2^4 3^5 4^2 6^-2 8^1 24^1)", "eta(1^-3 2^5 3^1 4^2 6^5 12^-2)",
              "eta(1^-3 2^5 3^1 4^5 6^1 8^-3 12^1 24^1)", "eta(1^-3 2^5 3^1 4^6 6^-3 8^-2 12^6 24^-2)",
              "eta(1^-3 2^5 3^5 4^-2 6^-1 8^2 12^4 24^-2)", "eta(1^-2 3^6 4^2 6^4 12^-2)"}}));
    add("4,32", 4, 32,
        cat({dilates("Ek(4)", {1, 2, 4, 8, 16, 32}), dilates("E4_chi4_chi4", {1, 2}), dilates("f_4_8", {1, 2, 4}),
             dilates("f_4_16", {1, 2}), {"f_4_32_1", "f_4_32_2", "f_4_32_3"}}));
    add("4,32,chi8", 4, 32,
        cat({dilates("E_twisted(4,1,chi8)", {1, 2, 4}), dilates("E_twisted(4,chi8,1)", {1, 2, 4}),
             {"E_twisted(4,chi-4,chi-8)", "E_twisted(4,chi-8,chi-4)"}, dilates("f_4_8_chi8_1", {1, 2, 4}),
             dilates("f_4_8_chi8_2", {1, 2, 4}), {"f_4_32_chi8_1", "f_4_32_chi8_2"}}));
    return s;
  }();
  return m;
}

}  // namespace

NamedSpace named_space(const std::string& id) {
  auto it = spaces().find(id);
  if (it == spaces().end()) throw UnsupportedForm("unknown space '" + id + "'");
  return it->second;
}

std::vector<std::string> named_space_ids() {
  std::vector<std::string> out;
  for (const auto& [k, v] : spaces()) out.push_back(k);
  return out;
}

}  // namespace qf
