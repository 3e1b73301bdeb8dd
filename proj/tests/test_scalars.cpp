#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "daha/cyclotomic.hpp"
#include "daha/qseries.hpp"
#include "daha/ratfunc.hpp"

using namespace daha;

TEST_CASE("ratfunc basics and canonical form") {
  RatFunc q4 = RatFunc::u();           // q^{1/4}
  RatFunc t = RatFunc::t();
  RatFunc th = RatFunc::v();           // t^{1/2}

  CHECK(q4 / q4 == RatFunc(1));
  // (t - 1) / (t^{1/2} - 1) = t^{1/2} + 1
  RatFunc lhs = (t - RatFunc(1)) / (th - RatFunc(1));
  CHECK(lhs == th + RatFunc(1));
  // (t^{1/2} - t^{-1/2}) * t^{1/2} = t - 1
  CHECK((th - th.inv()) * th == t - RatFunc(1));
  CHECK_THROWS_AS(RatFunc(1) / RatFunc(0), MathError);
}

TEST_CASE("ratfunc field laws on random triples") {
  std::mt19937 rng(0);
  auto rnd = [&]() {
    RatFunc r(0);
    for (int i = 0; i < 3; ++i) {
      int eu = static_cast<int>(rng() % 5) - 2;
      int ev = static_cast<int>(rng() % 5) - 2;
      long c = static_cast<long>(rng() % 7) - 3;
      r += RatFunc::monomial(Rat(c, 1 + rng() % 3), eu, ev);
    }
    return r;
  };
  int n = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    RatFunc a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) {
      CHECK(a * a.inv() == RatFunc(1));
      ++n;
    }
  }
  CHECK(n > 900);
}

TEST_CASE("ratfunc substitutions and limits") {
  RatFunc q = RatFunc::q(), t = RatFunc::t();
  RatFunc f = (RatFunc(1) - t * q) / (RatFunc(1) - q);
  CHECK(f.sub_u_inv().sub_u_inv() == f);
  CHECK(f.sub_v_inv().sub_v_inv() == f);
  // fdeltas-style limit: t^{-1/2}(q^{-1}-1)/(t^{-1}q^{-1}-1) -> t^{-1/2}
  RatFunc th = RatFunc::v();
  RatFunc g = th.inv() * (q.inv() - RatFunc(1)) / (t.inv() * q.inv() - RatFunc(1));
  CHECK(g.limit_u_inf() == th.inv());
  CHECK((RatFunc(1) / (RatFunc(1) + q)).limit_u_inf() == RatFunc(0));
  CHECK_THROWS_AS(q.limit_u_inf(), MathError);
}

TEST_CASE("ratfunc numeric specialization") {
  // (1 - q t)/(1 - q^{1/2}) at q = 1/4, t = 1/2 -> (1 - 1/8)/(1 - 1/2) = 7/4
  RatFunc f = (RatFunc(1) - RatFunc::q() * RatFunc::t()) /
              (RatFunc(1) - RatFunc::u(2));
  std::complex<double> qq4 = std::sqrt(std::sqrt(0.25));
  std::complex<double> tt2 = std::sqrt(0.5);
  CHECK(std::abs(f.eval(qq4, tt2) - 1.75) < 1e-12);
  // pole: (1-t)/(1-q) at q -> 1
  RatFunc g = (RatFunc(1) - RatFunc::t()) / (RatFunc(1) - RatFunc::q());
  CHECK_THROWS_AS(g.eval(1.0, 0.7), MathError);
}

TEST_CASE("cyclotomic arithmetic") {
  CHECK(Cyclotomic::one(4).inv() == Cyclotomic::one(4));
  // zeta of order 4: zeta^2 = -1, inverse is -zeta
  Cyclotomic i4 = Cyclotomic::zeta(4);
  CHECK(i4.inv() == -i4);
  // 1 + zeta of order 3: (1+z)(-z) = 1
  Cyclotomic z3 = Cyclotomic::zeta(3);
  Cyclotomic a = Cyclotomic::one(3) + z3;
  CHECK(a.inv() == -z3);
  CHECK_THROWS_AS(Cyclotomic::zero(5).inv(), MathError);
  // specialization example: t^{1/2} at (q,t) = (zeta^4, zeta^{4k}), zeta of
  // order 4N -> value zeta^{2k}
  int N = 5, k = 2;
  RatFunc th = RatFunc::v();
  Cyclotomic zeta = Cyclotomic::zeta(4 * N);
  Cyclotomic got = th.eval_field(zeta, zeta.pow(2 * k));
  CHECK(got == zeta.pow(2 * k));
}

TEST_CASE("cyclotomic vs complex embedding on random expressions") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int M = 3 + static_cast<int>(rng() % 10);
    Cyclotomic x = Cyclotomic::zeta(M, 1 + rng() % M);
    Cyclotomic y = Cyclotomic::zeta(M, 1 + rng() % M) + Cyclotomic(Rat(1, 2), M);
    Cyclotomic expr = x;
    std::complex<double> ref = x.embed();
    for (int d = 0; d < 6; ++d) {
      switch (rng() % 3) {
        case 0: expr = expr * y; ref *= y.embed(); break;
        case 1: expr = expr + y; ref += y.embed(); break;
        default:
          if (!expr.is_zero()) { expr = expr.inv(); ref = 1.0 / ref; }
      }
    }
    CHECK(std::abs(expr.embed() - ref) <= 1e-12 * (1.0 + std::abs(ref)));
  }
}

TEST_CASE("cyclotomic galois and order promotion") {
  Cyclotomic z = Cyclotomic::zeta(12);
  CHECK(z.conj() * z == Cyclotomic::one(12));
  CHECK(z.to_order(24) == Cyclotomic::zeta(24, 2));
  CHECK(z.galois(5).galois(5) == z.galois(25 % 12));
}

TEST_CASE("qseries ring and truncation consistency") {
  SeriesCtx ctx{24, 30, 0};
  QSeries one = QSeries::one(ctx);
  QSeries a = one + QSeries::term(ctx, Int(2), 1, 0, 1) - QSeries::term(ctx, Int(1), 3, 0, -2);
  QSeries b = one + QSeries::term(ctx, Int(5), 2, 0, 0);
  QSeries c = one - QSeries::term(ctx, Int(3), 1, 0, 2);
  CHECK(QSeries::agree(a * b, b * a, 20));
  CHECK(QSeries::agree((a * b) * c, a * (b * c), 18));
  // serial and parallel kernels coincide
  QSeries big = one;
  for (int j = 1; j <= 8; ++j) big = big.mul_binomial(Int(j), j, 0, (j % 3) - 1);
  QSeries p1 = QSeries::mul_serial(big, big);
  QSeries p2 = QSeries::mul_parallel(big, big);
  CHECK(QSeries::agree(p1, p2, 25));
}

TEST_CASE("qseries binomial division") {
  SeriesCtx ctx{16, 40, 0};
  QSeries one = QSeries::one(ctx);
  // 1/(1-t) * (1-t) = 1
  QSeries inv = one.div_binomial(Int(1), 0, 0, 2);
  CHECK(QSeries::agree(inv.mul_binomial(Int(1), 0, 0, 2), one, 35));
  // 1/(1-q) has all coefficients 1
  QSeries invq = one.div_binomial(Int(1), 4, 0, 0);
  CHECK(invq.coeff(8, 0, 0) == 2 - 1);
  CHECK(invq.coeff(12, 0, 0) == 1);
  CHECK_THROWS_AS(one.div_binomial(Int(1), 0, 0, 0), MathError);
}
