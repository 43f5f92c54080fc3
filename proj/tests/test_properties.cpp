#include <doctest.h>

#include <random>

#include "hecke.hpp"
#include "qforms/forms.hpp"
#include "qforms/qseries.hpp"
#include "qforms/repcount.hpp"
#include "qforms/theorems.hpp"

using namespace qf;

namespace {

struct Gen {
  std::mt19937_64 rng{20240607};

  Rat rat() {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    return frac(num(rng), den(rng));
  }
  QExpansion series(long prec, bool unit = false) {
    std::vector<Rat> v(static_cast<size_t>(prec));
    std::uniform_int_distribution<int> sparse(0, 3);
    for (auto& x : v)
      if (sparse(rng)) x = rat();
    if (unit && sgn(v[0]) == 0) v[0] = 1;
    return QExpansion(0, std::move(v));
  }
  long prec() { return std::uniform_int_distribution<long>(1, 14)(rng); }
};

bool same(const QExpansion& f, const QExpansion& g) {
  return f.offset24() == g.offset24() && f.prec() == g.prec() && f.coeffs() == g.coeffs();
}

}  // namespace

TEST_CASE("ring laws on random truncated series") {
  Gen g;
  const int cases = 1200;
  int checked = 0;
  for (int i = 0; i < cases; ++i) {
    long p = g.prec();
    QExpansion a = g.series(p), b = g.series(p), c = g.series(p);
    Rat s = g.rat();
    CHECK(same(a * b, b * a));
    CHECK(same((a * b) * c, a * (b * c)));
    CHECK(same(a * (b + c), a * b + a * c));
    CHECK(same(a + b, b + a));
    CHECK(same(s * (a + b), s * a + s * b));
    CHECK(same(a * QExpansion::one(p), a));
    CHECK(agree(a - a, QExpansion::zero(p)));
    QExpansion u = g.series(p, true);
    CHECK(agree(series_mul(u, series_inverse(u)), QExpansion::one(p)));
    CHECK(agree(series_div(a * u, u), a));
    ++checked;
  }
  CHECK(checked == cases);
}

TEST_CASE("dilation is a ring homomorphism") {
  Gen g;
  for (int i = 0; i < 200; ++i) {
    long p = g.prec(), d = 1 + i % 5;
    QExpansion a = g.series(p), b = g.series(p);
    CHECK(same(series_dilate(a * b, d), series_dilate(a, d) * series_dilate(b, d)));
    CHECK(same(series_dilate(a + b, d), series_dilate(a, d) + series_dilate(b, d)));
  }
}

TEST_CASE("residue projections sum to the series") {
  Gen g;
  for (int i = 0; i < 200; ++i) {
    long p = g.prec(), m = 1 + i % 6;
    QExpansion a = series_shift(g.series(p), 24 * (i % 3));
    QExpansion sum = project_residue(a, 0, m);
    for (long r = 1; r < m; ++r) sum = sum + project_residue(a, r, m);
    CHECK(same(sum, a));
  }
}

TEST_CASE("eta quotients: recurrence and products agree on random exponents") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(-4, 6);
  for (int i = 0; i < 40; ++i) {
    EtaQuotient q{{1, e(rng)}, {2, e(rng)}, {4, e(rng)}, {8, e(rng)}};
    QExpansion a = eta_expansion(q, 40), b = eta_expansion_by_products(q, 40);
    CHECK(a.coeffs() == b.coeffs());
  }
}

TEST_CASE("Hecke multiplicativity of catalogue eigenforms") {
  for (const auto& f : testing::catalogue_eigenforms()) {
    CAPTURE(f.name);
    CHECK(testing::hecke_failure(f, 24).empty());
  }
}

TEST_CASE("a non-eigenform is caught by the Hecke check") {
  QExpansion g = form_series("f_4_8_chi8_1", 10);
  CHECK(g[6] != g[2] * g[3]);
}

TEST_CASE("formula values are non-negative integers") {
  for (auto [a, l] : thm1_pairs()) {
    Formula f = thm1(a, l);
    for (long n = 1; n <= 60; ++n) {
      Rat v = f(n);
      CHECK(is_integer(v));
      CHECK(sgn(v) >= 0);
    }
  }
}
