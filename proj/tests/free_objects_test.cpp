#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qk/abelian.hpp"
#include "qk/free_objects.hpp"
#include "qk/term.hpp"
#include "test_util.hpp"

namespace qk {
namespace {

const GeneratorList kAB = GeneratorList::parse("a,b");
const GeneratorList kABCD = GeneratorList::parse("a,b,c,d");

Dyadic frac(long num, long exp) { return Dyadic::scaled(mpz_class(num), -exp); }

AffinePointL fml(std::string_view text, const GeneratorList& gens = kAB, std::size_t base = 0) {
  return eval_fml(parse_term(text, gens), FreeFrame(gens, base));
}
AffinePointD fmc(std::string_view text, const GeneratorList& gens = kAB, std::size_t base = 0) {
  return eval_fmc(parse_term(text, gens), FreeFrame(gens, base));
}

TEST(GeneratorList, Validation) {
  EXPECT_EQ(kABCD.size(), 4u);
  EXPECT_EQ(kABCD.index_of("c"), 2u);
  EXPECT_EQ(GeneratorList::parse("x_1,Y2").name(1), "Y2");
  QK_EXPECT_ERROR(GeneratorList::parse("a,a"), ErrorKind::kInvalidArgument);
  QK_EXPECT_ERROR(GeneratorList::parse("a,1b"), ErrorKind::kInvalidArgument);
  QK_EXPECT_ERROR(GeneratorList::parse(""), ErrorKind::kInvalidArgument);
  QK_EXPECT_ERROR(kAB.index_of("z"), ErrorKind::kInvalidArgument);
}

TEST(ParseTerm, Examples) {
  auto t = parse_term("(* a b)", kAB);
  EXPECT_EQ(t.kind(), Term::Kind::kMul);
  EXPECT_EQ(t.left().generator_index(), 0u);
  EXPECT_EQ(t.right().generator_index(), 1u);
  auto u = parse_term("(\\ a (* a b))", kAB);
  EXPECT_EQ(u.kind(), Term::Kind::kLeftDiv);
  EXPECT_EQ(u.right().kind(), Term::Kind::kMul);
  EXPECT_EQ(u.depth(), 2u);
  EXPECT_EQ(parse_term("  ( /  b\n a )", kAB).kind(), Term::Kind::kRightDiv);
  EXPECT_EQ(u.to_string(kAB), "(\\ a (* a b))");
  EXPECT_EQ(parse_term(u.to_string(kAB), kAB).to_string(kAB), u.to_string(kAB));
}

TEST(ParseTerm, Errors) {
  for (auto bad : {"(* a", "", "(a b)", "(* a b c)", "(+ a b)", "* a b", "(* a b))", "()", "a b"}) {
    auto err = testing::capture_error([&] { parse_term(bad, kAB); });
    ASSERT_TRUE(err) << bad;
    EXPECT_EQ(err->kind(), ErrorKind::kParse) << bad;
    EXPECT_NE(std::string(err->what()).find("position"), std::string::npos) << err->what();
  }
  QK_EXPECT_ERROR(parse_term("(* a z)", kAB), ErrorKind::kInvalidArgument);
}

TEST(ParseTerm, RoundTripRandom) {
  std::mt19937 rng(31);
  for (int i = 0; i < 200; ++i) {
    auto t = oracle::random_term(rng, 5, 4);
    EXPECT_EQ(parse_term(t.to_string(kABCD), kABCD).to_string(kABCD), t.to_string(kABCD));
  }
}

TEST(EvalFml, Examples) {
  const auto s = LocLaurent::one_minus_t();
  EXPECT_EQ(fml("(* a b)"), AffinePointL{s});
  EXPECT_EQ(fml("(* b a)"), AffinePointL{LocLaurent::t()});
  EXPECT_NE(fml("(* a b)"), fml("(* b a)"));
  EXPECT_EQ(fml("(\\ a (* a b))"), AffinePointL{LocLaurent(1)});
  EXPECT_EQ(fml("(* (* a b) b)"), AffinePointL{LocLaurent(1) - LocLaurent::t() * LocLaurent::t()});
  EXPECT_EQ(fml("a"), AffinePointL{LocLaurent(0)});
  EXPECT_EQ(to_string(fml("(* a b)")), "[(1) * (1-t)^(1)]");
}

TEST(EvalFmc, Examples) {
  EXPECT_EQ(fmc("(* a b)"), AffinePointD{frac(1, 1)});
  EXPECT_EQ(fmc("(* (* a b) b)"), AffinePointD{frac(3, 2)});
  EXPECT_EQ(fmc("(* a b)"), fmc("(* b a)"));
  EXPECT_EQ(fmc("(\\ a b)"), AffinePointD{Dyadic(2)});
  EXPECT_EQ(fmc("(/ b a)"), AffinePointD{Dyadic(2)});
  EXPECT_EQ(to_string(fmc("(* (* a b) b)")), "[3/2^2]");
}

TEST(FreeFrame, Slots) {
  FreeFrame f(kABCD, "c");
  EXPECT_EQ(f.basepoint(), 2u);
  EXPECT_EQ(f.dimension(), 3u);
  EXPECT_EQ(f.slot(0), 0);
  EXPECT_EQ(f.slot(1), 1);
  EXPECT_EQ(f.slot(2), -1);
  EXPECT_EQ(f.slot(3), 2);
  QK_EXPECT_ERROR(FreeFrame(kAB, 2), ErrorKind::kInvalidArgument);
  QK_EXPECT_ERROR(FreeFrame(kAB, "q"), ErrorKind::kInvalidArgument);
}

TEST(SpecializePoint, Examples) {
  EXPECT_EQ(specialize_point({LocLaurent::one_minus_t()}), AffinePointD{frac(1, 1)});
  EXPECT_EQ(specialize_point({LocLaurent::t().inverse()}), AffinePointD{Dyadic(2)});
  EXPECT_EQ(specialize_point(fml("(* (* a b) b)")), fmc("(* (* a b) b)"));
}

TEST(WordsEqual, Examples) {
  FreeFrame f4(kABCD, 0), f2(kAB, 0);
  auto lhs = parse_term("(* (* a b) (* c d))", kABCD);
  auto rhs = parse_term("(* (* a c) (* b d))", kABCD);
  EXPECT_TRUE(words_equal(lhs, rhs, Variety::kMLQnd, f4));
  auto ab = parse_term("(* a b)", kAB), ba = parse_term("(* b a)", kAB);
  EXPECT_FALSE(words_equal(ab, ba, Variety::kMLQnd, f2));
  EXPECT_TRUE(words_equal(ab, ba, Variety::kMCQnd, f2));
  EXPECT_TRUE(words_equal(ab, ab, Variety::kMLQnd, f2));
}

class RandomTerms : public ::testing::Test {
 protected:
  std::mt19937 rng{101};
  Term draw(std::size_t depth = 4) { return oracle::random_term(rng, depth, 4); }
};

TEST_F(RandomTerms, QuandleAndMedialAxioms) {
  FreeFrame f(kABCD, 0);
  for (int i = 0; i < 150; ++i) {
    auto x = draw(), y = draw(), z = draw(), w = draw();
    auto ev = [&](const Term& t) { return eval_fml(t, f); };
    EXPECT_EQ(ev(Term::mul(x, x)), ev(x));
    EXPECT_EQ(ev(Term::mul(Term::mul(x, y), z)),
              ev(Term::mul(Term::mul(x, z), Term::mul(y, z))));
    EXPECT_EQ(ev(Term::mul(Term::mul(x, y), Term::mul(z, w))),
              ev(Term::mul(Term::mul(x, z), Term::mul(y, w))));
    EXPECT_EQ(ev(Term::rdiv(Term::mul(x, y), y)), ev(x));
    EXPECT_EQ(ev(Term::ldiv(x, Term::mul(x, y))), ev(y));
    EXPECT_EQ(ev(Term::mul(x, Term::ldiv(x, y))), ev(y));
    EXPECT_EQ(ev(Term::mul(Term::rdiv(x, y), y)), ev(x));
  }
}

TEST_F(RandomTerms, Naturality) {
  for (std::size_t base = 0; base < 4; ++base) {
    FreeFrame f(kABCD, base);
    for (int i = 0; i < 100; ++i) {
      auto t = draw(5);
      EXPECT_EQ(specialize_point(eval_fml(t, f)), eval_fmc(t, f));
    }
  }
}

TEST_F(RandomTerms, BasepointIndependence) {
  for (int i = 0; i < 120; ++i) {
    auto x = draw(3), y = i % 3 == 0 ? draw(3) : Term::mul(Term::mul(draw(2), draw(2)), draw(2));
    if (i % 4 == 1) y = Term::ldiv(x, Term::mul(x, x));  // equals x
    for (auto variety : {Variety::kMLQnd, Variety::kMCQnd}) {
      bool first = words_equal(x, y, variety, FreeFrame(kABCD, 0));
      for (std::size_t base = 1; base < 4; ++base)
        EXPECT_EQ(words_equal(x, y, variety, FreeFrame(kABCD, base)), first);
    }
  }
}

TEST_F(RandomTerms, BasepointChangeIsAffine) {
  // A point is an affine combination of a,b,c,d. Base a stores the b,c,d
  // weights, base b stores the a,c,d weights, and all four sum to 1.
  FreeFrame fa(kABCD, 0), fb(kABCD, 1);
  for (int i = 0; i < 60; ++i) {
    auto t = draw(4);
    auto pa = eval_fml(t, fa), pb = eval_fml(t, fb);
    LocLaurent sum = pa[0] + pa[1] + pa[2];
    EXPECT_EQ(pb[0], LocLaurent(1) - sum);
    EXPECT_EQ(pb[1], pa[1]);
    EXPECT_EQ(pb[2], pa[2]);
  }
}

TEST_F(RandomTerms, FiniteModelSoundness) {
  std::vector<CayleyTable> models;
  FinAbGroup z3({3}), z5({5}), v({3, 3});
  models.push_back(alexander(z3, make_auto(z3, {{2}})));
  models.push_back(alexander(z5, make_auto(z5, {{3}})));
  models.push_back(alexander(z5, make_auto(z5, {{2}})));
  models.push_back(alexander(v, make_auto(v, {{0, 1}, {1, 1}})));
  const GeneratorList abc = GeneratorList::parse("a,b,c");
  FreeFrame f(abc, 0);
  int equal_pairs = 0;
  for (int i = 0; i < 80; ++i) {
    auto x = oracle::random_term(rng, 3, 3);
    // y is x rewritten by an axiom, or an unrelated word
    Term y = i % 2 ? Term::mul(x, x) : oracle::random_term(rng, 3, 3);
    if (i % 5 == 0) y = Term::rdiv(Term::mul(x, Term::generator(1)), Term::generator(1));
    bool eq = words_equal(x, y, Variety::kMLQnd, f);
    equal_pairs += eq;
    for (const auto& m : models) {
      const auto n = static_cast<Element>(m.order());
      bool all_equal = true;
      std::vector<Element> as(3);
      for (as[0] = 0; as[0] < n; ++as[0])
        for (as[1] = 0; as[1] < n; ++as[1])
          for (as[2] = 0; as[2] < n; ++as[2])
            all_equal = all_equal && evaluate_in(x, m, as) == evaluate_in(y, m, as);
      if (eq) EXPECT_TRUE(all_equal) << x.to_string(abc) << " vs " << y.to_string(abc);
    }
  }
  EXPECT_GT(equal_pairs, 20);
}

TEST(EvaluateIn, DivisionsInFiniteModels) {
  auto c5 = alexander(FinAbGroup({5}), make_auto(FinAbGroup({5}), {{3}}));
  std::vector<Element> as{1, 4};
  EXPECT_EQ(evaluate_in(parse_term("(* a b)", kAB), c5, as), c5(1, 4));
  Element w = evaluate_in(parse_term("(\\ a b)", kAB), c5, as);
  EXPECT_EQ(c5(1, w), 4u);
  Element r = evaluate_in(parse_term("(/ a b)", kAB), c5, as);
  EXPECT_EQ(c5(r, 4), 1u);
  CayleyTable right_proj(2, {0, 0, 1, 1});  // x*y = x
  QK_EXPECT_ERROR(evaluate_in(parse_term("(\\ a b)", kAB), right_proj, std::vector<Element>{0, 1}),
                  ErrorKind::kNotLatin);
  CayleyTable left_proj(2, {0, 1, 0, 1});  // x*y = y
  QK_EXPECT_ERROR(evaluate_in(parse_term("(/ a b)", kAB), left_proj, std::vector<Element>{0, 1}),
                  ErrorKind::kNotARack);
}

}  // namespace
}  // namespace qk
