#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gliderrep/cyclotomic.hpp"
#include "gliderrep/error.hpp"

using glrep::CycNumber;
using glrep::Rat;

namespace {

// Plain dense product over Q[x], used as an oracle for Phi_n identities.
std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

CycNumber random_cyc(std::mt19937& rng, long conductor) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  CycNumber acc = CycNumber::zero(conductor);
  for (long k = 0; k < conductor; ++k) {
    long c = coef(rng);
    if (c == 0) continue;
    acc += CycNumber(Rat(c, den(rng)), conductor) * CycNumber::zeta(conductor, k);
  }
  return acc;
}

}  // namespace

TEST_CASE("euler phi") {
  long expected[][2] = {{1, 1}, {2, 1},  {3, 2},  {4, 2},  {6, 2},
                        {8, 4}, {9, 6},  {12, 4}, {16, 8}, {30, 8},
                        {105, 48}};
  for (auto [n, phi] : expected) CHECK(glrep::euler_phi(n) == phi);
}

TEST_CASE("cyclotomic polynomials match known values") {
  auto coeffs = [](std::initializer_list<long> v) {
    std::vector<Rat> out;
    for (long c : v) out.emplace_back(c);
    return out;
  };
  CHECK(glrep::cyclotomic_poly(1) == coeffs({-1, 1}));
  CHECK(glrep::cyclotomic_poly(2) == coeffs({1, 1}));
  CHECK(glrep::cyclotomic_poly(3) == coeffs({1, 1, 1}));
  CHECK(glrep::cyclotomic_poly(4) == coeffs({1, 0, 1}));
  CHECK(glrep::cyclotomic_poly(6) == coeffs({1, -1, 1}));
  CHECK(glrep::cyclotomic_poly(8) == coeffs({1, 0, 0, 0, 1}));
  CHECK(glrep::cyclotomic_poly(9) == coeffs({1, 0, 0, 1, 0, 0, 1}));
  CHECK(glrep::cyclotomic_poly(12) == coeffs({1, 0, -1, 0, 1}));
  // First n whose cyclotomic polynomial has a coefficient outside {-1,0,1}.
  CHECK(glrep::cyclotomic_poly(105)[7] == Rat(-2));
  CHECK(glrep::cyclotomic_poly(105)[41] == Rat(-2));
}

TEST_CASE("product of Phi_d over divisors is x^n - 1") {
  for (long n : {12L, 30L}) {
    std::vector<Rat> prod{Rat(1)};
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) prod = mul(prod, glrep::cyclotomic_poly(d));
    REQUIRE(prod.size() == size_t(n + 1));
    CHECK(prod[0] == Rat(-1));
    CHECK(prod[n] == Rat(1));
    for (long i = 1; i < n; ++i) CHECK(prod[i] == Rat(0));
  }
}

TEST_CASE("roots of unity satisfy defining identities") {
  for (long n : {2L, 3L, 4L, 5L, 6L, 8L, 9L, 12L}) {
    CycNumber z = CycNumber::zeta(n);
    CycNumber pow = CycNumber::one(n);
    CycNumber sum = CycNumber::zero(n);
    for (long k = 0; k < n; ++k) {
      CHECK(pow == CycNumber::zeta(n, k));
      sum += pow;
      pow *= z;
    }
    CHECK(pow == CycNumber::one(n));   // z^n = 1
    CHECK(sum == CycNumber::zero(n));  // geometric sum vanishes for n > 1
  }
}

TEST_CASE("classic values") {
  CycNumber z8 = CycNumber::zeta(8);
  CycNumber sqrt2 = z8 + CycNumber::zeta(8, 7);
  CHECK(sqrt2 * sqrt2 == CycNumber(2, 8));
  CHECK(sqrt2.root_of_unity_order() == 0);

  CycNumber z3 = CycNumber::zeta(3);
  CHECK(z3 + z3 * z3 == CycNumber(-1, 3));

  CycNumber i = CycNumber::zeta(4);
  CHECK(i * i == CycNumber(-1, 4));
  // (1+i)^-1 = (1-i)/2
  CycNumber one = CycNumber::one(4);
  CHECK((one + i).inverse() == (one - i) / CycNumber(2, 4));
}

TEST_CASE("conjugation and galois maps") {
  CycNumber z5 = CycNumber::zeta(5);
  CHECK(z5.conj() == CycNumber::zeta(5, 4));
  CHECK((z5 * z5).conj() == CycNumber::zeta(5, 3));
  CHECK(z5 * z5.conj() == CycNumber::one(5));

  CycNumber z7 = CycNumber::zeta(7);
  CHECK(z7.galois(3).galois(3).galois(3) == CycNumber::zeta(7, 27 % 7));

  // Conjugation fixes real values.
  CycNumber sqrt2 = CycNumber::zeta(8) + CycNumber::zeta(8, 7);
  CHECK(sqrt2.conj() == sqrt2);

  CHECK_THROWS_AS(z5.galois(5), glrep::Error);
}

TEST_CASE("conductor embedding and reduction") {
  CycNumber z3 = CycNumber::zeta(3);
  CycNumber lifted = z3.to_conductor(12);
  CHECK(lifted.conductor() == 12);
  CHECK(lifted == z3);  // cmp coerces to a common conductor
  CycNumber back = lifted.reduced();
  CHECK(back.conductor() == 3);
  CHECK(back.coeffs() == z3.coeffs());

  CHECK(CycNumber(-1, 8).reduced().conductor() == 1);
  CHECK(CycNumber::zeta(4).to_conductor(8).reduced().conductor() == 4);
  // sqrt(2) genuinely needs conductor 8
  CycNumber sqrt2 = CycNumber::zeta(8) + CycNumber::zeta(8, 7);
  CHECK(sqrt2.reduced().conductor() == 8);

  CHECK_THROWS_AS(z3.to_conductor(8), glrep::Error);
}

TEST_CASE("field axioms on seeded random values") {
  std::mt19937 rng(0);
  for (int trial = 0; trial < 60; ++trial) {
    long na = std::vector<long>{4, 6, 8, 12}[trial % 4];
    long nb = std::vector<long>{6, 8, 12, 5}[trial % 4];
    CycNumber a = random_cyc(rng, na);
    CycNumber b = random_cyc(rng, nb);
    CycNumber c = random_cyc(rng, na);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == CycNumber::zero(na));
    if (!b.is_zero()) {
      CHECK(a * b / b == a);
      CHECK(b * b.inverse() == CycNumber::one(nb));
    }
  }
}

TEST_CASE("total order is consistent") {
  std::mt19937 rng(1);
  std::vector<CycNumber> vals;
  for (int i = 0; i < 12; ++i) vals.push_back(random_cyc(rng, 12));
  vals.push_back(CycNumber::zeta(3).to_conductor(12));
  vals.push_back(CycNumber::zeta(3));  // same value, smaller conductor
  for (const auto& a : vals)
    for (const auto& b : vals) {
      CHECK(a.cmp(b) == -b.cmp(a));
      CHECK((a.cmp(b) == 0) == (a == b));
      for (const auto& c : vals)
        if (a.cmp(b) <= 0 && b.cmp(c) <= 0) CHECK(a.cmp(c) <= 0);
    }
}

TEST_CASE("root of unity detection") {
  CHECK(CycNumber::one(1).root_of_unity_order() == 1);
  CHECK(CycNumber(-1, 4).root_of_unity_order() == 2);
  CHECK(CycNumber::zeta(8).root_of_unity_order() == 8);
  CHECK(CycNumber::zeta(8, 2).root_of_unity_order() == 4);
  CHECK((-CycNumber::zeta(3)).root_of_unity_order() == 6);
  CHECK(CycNumber(2, 4).root_of_unity_order() == 0);
  CHECK((CycNumber::zeta(5) + CycNumber::one(5)).root_of_unity_order() == 0);
  CHECK(CycNumber::zero(6).root_of_unity_order() == 0);
}

TEST_CASE("printing") {
  CHECK(CycNumber::zero(4).str() == "0 (N=4)");
  CHECK(CycNumber(3, 1).str() == "3 (N=1)");
  CHECK(CycNumber(Rat(-3, 2), 1).str() == "-3/2 (N=1)");
  CHECK((-CycNumber::zeta(4)).str() == "-z (N=4)");
  CycNumber v = CycNumber(Rat(1, 2), 8) * CycNumber::zeta(8, 3) - CycNumber::zeta(8);
  CHECK(v.str() == "1/2*z^3 - z (N=8)");
}

TEST_CASE("parse inverts printing") {
  CHECK(CycNumber::parse("1/2*z^3 - z (N=8)").str() == "1/2*z^3 - z (N=8)");
  CHECK(CycNumber::parse("0 (N=4)") == CycNumber::zero(4));
  CHECK(CycNumber::parse("-z (N=4)") == -CycNumber::zeta(4));
  CHECK(CycNumber::parse("z^2 + z + 1 (N=5)") ==
        CycNumber::zeta(5, 2) + CycNumber::zeta(5) + CycNumber::one(5));
  std::mt19937 rng(2);
  for (int i = 0; i < 40; ++i) {
    CycNumber a = random_cyc(rng, std::vector<long>{1, 4, 6, 8, 9, 12}[i % 6]);
    CycNumber b = CycNumber::parse(a.str());
    CHECK(b == a);
    CHECK(b.conductor() == a.conductor());
  }
}

TEST_CASE("errors carry the right kind") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const glrep::Error& e) {
      return e.kind();
    }
    return glrep::ErrorKind::Domain;  // unreachable when fn throws
  };
  CHECK(kind_of([] { CycNumber::one(4) / CycNumber::zero(4); }) ==
        glrep::ErrorKind::Domain);
  CHECK(kind_of([] { CycNumber::zero(6).inverse(); }) == glrep::ErrorKind::Domain);
  CHECK(kind_of([] { CycNumber::zeta(6).rational_part(); }) ==
        glrep::ErrorKind::Domain);
  CHECK(kind_of([] { CycNumber::parse("z"); }) == glrep::ErrorKind::Usage);
  CHECK(kind_of([] { CycNumber::parse("q (N=4)"); }) == glrep::ErrorKind::Usage);
  CHECK(kind_of([] { glrep::rat_parse("x"); }) == glrep::ErrorKind::Usage);
  CHECK_THROWS_AS(CycNumber::zero(0), glrep::Error);
}
