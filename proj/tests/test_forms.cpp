#include <doctest.h>

#include "qforms/errors.hpp"
#include "qforms/forms.hpp"
#include "qforms/linalg.hpp"

using namespace qf;

namespace {

long count_binary(long a, long n) {
  long c = 0;
  for (long m = -2 * n - 2; m <= 2 * n + 2; ++m)
    for (long k = -2 * n - 2; k <= 2 * n + 2; ++k)
      if (m * m + m * k + a * k * k == n) ++c;
  return c;
}

void check_ints(const QExpansion& f, std::initializer_list<long> want) {
  long i = 0;
  for (long w : want) {
    CAPTURE(i);
    CHECK(f[i] == w);
    ++i;
  }
}

}  // namespace

TEST_CASE("eta recurrence agrees with Euler products") {
  std::vector<EtaQuotient> qs = {
      {{1, 24}},
      {{1, 2}, {11, 2}},
      {{1, 3}, {3, -2}, {9, 3}},
      {{1, -5}, {2, 9}, {11, 7}, {22, -3}},
      {{1, -2}, {2, 11}, {4, -3}, {8, 2}},
      {{2, -4}, {4, 16}, {8, -4}},
      {{1, 7}, {5, -1}, {6, -3}},
  };
  for (const auto& q : qs) {
    CAPTURE(q.str());
    QExpansion a = eta_expansion(q, 80), b = eta_expansion_by_products(q, 80);
    CHECK(a.offset24() == b.offset24());
    CHECK(a.coeffs() == b.coeffs());
  }
}

TEST_CASE("eta quotient metadata") {
  EtaQuotient q = EtaQuotient::parse("1^-4 2^8 3^4");
  CHECK(q.factors.size() == 3);
  CHECK(q.offset24() == -4 + 16 + 12);
  CHECK(q.weight2() == 8);
  CHECK(EtaQuotient::parse(q.str()).factors == q.factors);
  CHECK_THROWS(EtaQuotient::parse("junk"));
}

TEST_CASE("discriminant function") {
  QExpansion d = eta_series(EtaQuotient{{1, 24}}, 8);
  check_ints(d, {0, 1, -24, 252, -1472, 4830, -6048, -16744});
}

TEST_CASE("weight 2 newforms") {
  check_ints(catalogue("Delta_2_11", 14), {0, 1, -2, -1, 2, 1, 2, -2, 0, -2, -2, 1, -2, 4});
  check_ints(catalogue("Psi_2_9", 11), {0, 1, -3, 0, 7, -6, 0, 8, -15, 0, 18});
  check_ints(catalogue("tau_4_8", 10), {0, 1, 0, -4, 0, -2, 0, 24, 0, -11});
}

TEST_CASE("fractional offsets cannot be put in standard form") {
  QExpansion e = eta_expansion(EtaQuotient{{1, 1}}, 10);
  CHECK_THROWS_AS(standard_form(e, 10), OffsetMismatch);
  QExpansion d = eta_expansion(EtaQuotient{{1, 24}}, 5);
  CHECK_THROWS(standard_form(d, 10));
  CHECK(standard_form(d, 6)[1] == 1);
}

TEST_CASE("binary theta series count lattice points") {
  for (long a : {1, 2, 3, 4, 5}) {
    QExpansion t = theta_binary(a, 40);
    for (long n = 0; n < 40; ++n) CHECK(t[n] == count_binary(a, n));
  }
  CHECK(theta_quaternary(1, 1, 5)[1] == 12);
}

TEST_CASE("Eisenstein series") {
  QExpansion e4 = eisenstein_Ek(4, 40), e6 = eisenstein_Ek(6, 5), e8 = eisenstein_Ek(8, 40);
  check_ints(e4, {1, 240, 2160, 6720});
  check_ints(e6, {1, -504, -16632});
  CHECK(series_mul(e4, e4).coeffs() == e8.coeffs());
  check_ints(eisenstein_E2(4), {1, -24, -72, -96});
  CHECK_THROWS_AS(eisenstein_Ek(3, 4), DomainError);
}

TEST_CASE("Phi_ab has constant term 1") {
  QExpansion p = phi_ab(1, 2, 6);
  // 2 E2(2z) - E2(z)
  check_ints(p, {1, 24, 24, 96, 24, 144});
  CHECK_THROWS_AS(phi_ab(2, 3, 5), DomainError);
  CHECK_THROWS_AS(phi_ab(2, 2, 5), DomainError);
}

TEST_CASE("twisted Eisenstein series") {
  using namespace chars;
  QExpansion g = eisenstein_twisted(4, one(), chi8(), 6);
  CHECK(g[0] == -gen_bernoulli(4, chi8()) / 8);
  for (long n = 1; n < 6; ++n) CHECK(g[n] == twisted_sigma(3, one(), chi8(), n));
  QExpansion h = eisenstein_twisted(4, chi8(), one(), 6);
  CHECK(h[0] == 0);
  CHECK_THROWS_AS(eisenstein_twisted(4, one(), chi_m4(), 6), DomainError);
}

TEST_CASE("form ids") {
  FormId id = FormId::parse("E_twisted(4,1,chi8)");
  CHECK(id.tag == "E_twisted");
  CHECK(id.args == std::vector<long>{4});
  CHECK(id.chars.size() == 2);
  CHECK(FormId::parse(id.str()).str() == id.str());
  CHECK(FormId::parse("Phi_ab(1,12)").args == std::vector<long>{1, 12});
  CHECK_THROWS_AS(catalogue("NoSuchForm", 10), UnsupportedForm);
  CHECK_THROWS_AS(catalogue("Phi_ab(1)", 10), UnsupportedForm);
}

TEST_CASE("dilated and derived catalogue names") {
  QExpansion d = form_series("Delta_2_11@3", 20);
  QExpansion base = form_series("Delta_2_11", 20);
  for (long n = 0; n < 20; ++n) CHECK(d[n] == (n % 3 ? Rat(0) : base[n / 3]));
  CHECK(form_coefficient("Delta_2_11", 500) == form_series("Delta_2_11", 501)[500]);
  CHECK(form_series("Delta_2_33", 12)[1] == 1);
}
