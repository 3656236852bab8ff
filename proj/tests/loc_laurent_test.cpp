#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qk/loc_laurent.hpp"
#include "test_util.hpp"

namespace qk {
namespace {

const LocLaurent kT = LocLaurent::t();
const LocLaurent kS = LocLaurent::one_minus_t();

Dyadic frac(long num, long exp) { return Dyadic::scaled(mpz_class(num), -exp); }

bool canonical(const LocLaurent& x) {
  if (x.is_zero()) return x.a() == 0 && x.b() == 0;
  mpz_class at_one = 0;
  for (const auto& c : x.poly()) at_one += c;
  return x.poly().front() != 0 && at_one != 0 && x.poly().back() != 0;
}

TEST(LocLaurent, Examples) {
  EXPECT_EQ(kT + kS, LocLaurent(1));
  EXPECT_EQ(kT * kT.inverse(), LocLaurent(1));
  auto lhs = kS.inverse() + (-kT * kS.inverse());
  EXPECT_EQ(lhs, LocLaurent(1));
  EXPECT_TRUE(oracle::equal_by_cross_multiplication(lhs, LocLaurent(1)));
}

TEST(LocLaurent, Inverse) {
  EXPECT_EQ(kT.inverse(), LocLaurent(Poly{1}, 1, 0));
  auto x = -(kT * kT * kS.inverse());  // -t^2 (1-t)^-1
  auto inv = x.inverse();
  EXPECT_EQ(inv, -(kT.inverse() * kT.inverse() * kS));
  EXPECT_EQ(inv * x, LocLaurent(1));
  QK_EXPECT_ERROR(LocLaurent(Poly{1, 1}, 0, 0).inverse(), ErrorKind::kNotAUnit);
  QK_EXPECT_ERROR(LocLaurent(0).inverse(), ErrorKind::kNotAUnit);
  QK_EXPECT_ERROR(LocLaurent(2).inverse(), ErrorKind::kNotAUnit);
  EXPECT_FALSE(LocLaurent(Poly{1, 1}, 0, 0).is_unit());
}

TEST(LocLaurent, UnitInverses) {
  for (long a = -8; a <= 8; ++a)
    for (long b = -8; b <= 8; ++b)
      for (long sign : {1L, -1L}) {
        LocLaurent u(Poly{sign}, a, b);
        ASSERT_TRUE(u.is_unit());
        EXPECT_EQ(u.inverse() * u, LocLaurent(1));
        EXPECT_EQ(u.inverse(), LocLaurent(Poly{sign}, -a, -b));
      }
}

TEST(LocLaurent, SpecializeHalf) {
  EXPECT_EQ(kT.specialize_half(), frac(1, 1));
  EXPECT_EQ(kS.inverse().specialize_half(), Dyadic(2));
  EXPECT_EQ(LocLaurent(Poly{1, 1}, 2, 0).specialize_half(), Dyadic(6));
  EXPECT_EQ(LocLaurent(0).specialize_half(), Dyadic(0));
}

TEST(LocLaurent, Normalization) {
  // t^2 (1-t)^3 (1 + t) / (t^5) collapses the t and (1-t) factors
  Poly p{1, 1};
  LocLaurent x = LocLaurent(p, 0, 0) * kT * kT * kS * kS * kS * LocLaurent(Poly{1}, 5, 0);
  EXPECT_EQ(x.poly(), p);
  EXPECT_EQ(x.a(), 3);
  EXPECT_EQ(x.b(), -3);
  // content is kept
  LocLaurent y(Poly{0, 2, -2}, 0, 0);  // 2t(1-t)
  EXPECT_EQ(y.poly(), Poly{2});
  EXPECT_EQ(y.a(), -1);
  EXPECT_EQ(y.b(), -1);
  LocLaurent z(Poly{0, 0}, 4, -2);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.a(), 0);
  EXPECT_EQ(z.b(), 0);
}

TEST(LocLaurent, ToString) {
  EXPECT_EQ(poly_to_string(Poly{1, -2, 1}), "1 - 2t + t^2");
  EXPECT_EQ(LocLaurent(1).to_string(), "(1)");
  EXPECT_EQ(kT.to_string(), "(1) * t^(1)");
  EXPECT_EQ(LocLaurent(Poly{1, 1}, 2, -1).to_string(), "(1 + t) * t^(-2) * (1-t)^(1)");
  EXPECT_EQ(LocLaurent(0).to_string(), "0");
}

TEST(LocLaurent, CanonicalFormIsUnique) {
  std::mt19937 rng(7);
  for (int i = 0; i < 400; ++i) {
    auto x = oracle::random_loc(rng), y = oracle::random_loc(rng);
    EXPECT_TRUE(canonical(x));
    EXPECT_EQ(x == y, oracle::equal_by_cross_multiplication(x, y));
    // Same value written differently.
    auto x2 = (x * kT * kS + y) - y;
    x2 = x2 * LocLaurent(Poly{1}, 1, 1);
    EXPECT_EQ(x2, x);
    EXPECT_TRUE(oracle::equal_by_cross_multiplication(x2, x));
  }
}

TEST(LocLaurent, RingAxiomsOnRandomTriples) {
  std::mt19937 rng(9);
  for (int i = 0; i < 300; ++i) {
    auto a = oracle::random_loc(rng), b = oracle::random_loc(rng), c = oracle::random_loc(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, LocLaurent(0));
    EXPECT_EQ(a * LocLaurent(1), a);
    auto s = a * b + c;
    EXPECT_TRUE(canonical(s));
    mpq_class t0(5, 3);
    EXPECT_EQ(oracle::evaluate_at(s, t0),
              oracle::evaluate_at(a, t0) * oracle::evaluate_at(b, t0) + oracle::evaluate_at(c, t0));
  }
}

TEST(LocLaurent, SpecializeHalfIsRingHomomorphism) {
  std::mt19937 rng(13);
  EXPECT_EQ(LocLaurent(1).specialize_half(), Dyadic(1));
  for (int i = 0; i < 300; ++i) {
    auto a = oracle::random_loc(rng), b = oracle::random_loc(rng);
    EXPECT_EQ((a + b).specialize_half(), a.specialize_half() + b.specialize_half());
    EXPECT_EQ((a * b).specialize_half(), a.specialize_half() * b.specialize_half());
    EXPECT_EQ((-a).specialize_half(), -a.specialize_half());
    // against the rational value at 1/2
    auto d = a.specialize_half();
    mpq_class q(d.num(), mpz_class(1) << d.exp());
    q.canonicalize();
    EXPECT_EQ(q, oracle::evaluate_at(a, mpq_class(1, 2)));
  }
}

}  // namespace
}  // namespace qk
