#include <gtest/gtest.h>

#include "gentle/generate.hpp"
#include "gentle/oracle.hpp"
#include "gentle/resolve.hpp"
#include "gentle/words.hpp"
#include "test_support.hpp"

using namespace gentle;
using gentle::testing::load;

namespace {

const char* const kIntro = "x^3 y^-3 x^2 y^-1 x^2 y^-3 x^4 (y^-1)^inf";
const char* const kBand = "inf(a^-1 b^-1 a^-1 b a b^-1 a^-1 b^-1 a b^-1 a b)inf@0";

Letter direct(const Presentation& pres, const char* name) { return Letter{*pres.find_arrow(name), false}; }
Letter inverse(const Presentation& pres, const char* name) { return Letter{*pres.find_arrow(name), true}; }

// All words sampled for property tests: random string words plus enumerated cycles.
std::vector<Word> sample(const Presentation& pres, const Signs& signs, int count, unsigned seed) {
  Rng rng(seed);
  std::vector<Word> out;
  for (int k = 0; k < count; ++k) out.push_back(random_string_word(pres, signs, rng, 7));
  for (const Word& c : enumerate_cyclic_words(pres, 6)) out.push_back(c);
  return out;
}

}  // namespace

TEST(Signs, Pres1Example) {
  Presentation pres = load("pres1.gp");
  Signs s = assign_signs(pres);
  EXPECT_EQ(s.of(direct(pres, "x")), 1);
  EXPECT_EQ(s.of(inverse(pres, "y")), 1);
  EXPECT_EQ(s.of(inverse(pres, "x")), -1);
  EXPECT_EQ(s.of(direct(pres, "y")), -1);
  EXPECT_TRUE(signs_valid(pres, s));
}

TEST(Signs, Pres2Example) {
  Presentation pres = load("pres2.gp");
  Signs s = assign_signs(pres);
  EXPECT_EQ(s.of(direct(pres, "a")), 1);
  EXPECT_EQ(s.of(inverse(pres, "a")), 1);
  EXPECT_EQ(s.of(direct(pres, "b")), -1);
  EXPECT_EQ(s.of(inverse(pres, "b")), -1);
}

TEST(Signs, A3HeadTwoLettersDiffer) {
  Presentation pres = load("a3.gp");
  Signs s = assign_signs(pres);
  EXPECT_NE(s.of(direct(pres, "a")), s.of(inverse(pres, "b")));
  EXPECT_TRUE(signs_valid(pres, s));
  EXPECT_EQ(render_signs(pres, s), render_signs(pres, assign_signs(pres)));
}

TEST(Signs, FlipNegatesEverySign) {
  for (const char* name : {"pres1.gp", "pres2.gp", "bandalg.gp", "cycle4.gp"}) {
    Presentation pres = load(name);
    Signs s = assign_signs(pres), f = assign_signs(pres, true);
    ASSERT_EQ(s.values().size(), f.values().size());
    for (std::size_t k = 0; k < s.values().size(); ++k) EXPECT_EQ(s.values()[k], -f.values()[k]);
    EXPECT_TRUE(signs_valid(pres, f));
  }
}

TEST(CheckWord, IntroWordIsRightInfinite) {
  Presentation pres = load("pres1.gp");
  Word c = parse_word(pres, kIntro);
  EXPECT_EQ(c.shape, Shape::Right);
  EXPECT_EQ(render_word(pres, c), kIntro);
}

TEST(CheckWord, Errors) {
  Presentation pres = load("pres1.gp");
  EXPECT_GENTLE_ERROR(parse_word(pres, "x y"), ErrorKind::RelationCrossed);
  EXPECT_GENTLE_ERROR(parse_word(pres, "x x^-1"), ErrorKind::InverseCancellation);
  EXPECT_GENTLE_ERROR(parse_word(pres, "q"), ErrorKind::Parse);
  Presentation a3 = load("a3.gp");
  EXPECT_GENTLE_ERROR(parse_word(a3, "a b"), ErrorKind::HeadTailMismatch);
  EXPECT_GENTLE_ERROR(parse_word(pres, "x (x y^-1)^inf"), ErrorKind::TailNotPeriodicizable);
}

TEST(CheckWord, BandWordIsPeriodic) {
  Presentation pres = load("pres2.gp");
  Word c = parse_word(pres, kBand);
  EXPECT_EQ(c.shape, Shape::Periodic);
  EXPECT_EQ(c.period(), 12);
  EXPECT_EQ(render_word(pres, c), kBand);
}

TEST(CheckWord, RenderParseRoundtrip) {
  for (const char* name : {"pres1.gp", "pres2.gp", "bandalg.gp", "cycle4.gp"}) {
    Presentation pres = load(name);
    Signs signs = assign_signs(pres);
    for (const Word& w : sample(pres, signs, 100, 3)) EXPECT_EQ(parse_word(pres, render_word(pres, w)), w) << name;
  }
}

TEST(InvertShift, IntroInverse) {
  Presentation pres = load("pres1.gp");
  Word e = invert(parse_word(pres, kIntro));
  EXPECT_EQ(e.shape, Shape::Left);
  EXPECT_EQ(render_word(pres, e), "inf(y) x^-4 y^3 x^-2 y x^-2 y^3 x^-3");
}

TEST(InvertShift, BandShiftByOne) {
  Presentation pres = load("pres2.gp");
  Word c = parse_word(pres, kBand);
  Word c1 = shift(c, 1);
  EXPECT_EQ(c1.letter(0), inverse(pres, "a"));
  EXPECT_EQ(c1.letter(1), inverse(pres, "b"));
  EXPECT_EQ(c1.letter(2), inverse(pres, "a"));
  EXPECT_EQ(c1.letter(3), direct(pres, "b"));
  EXPECT_EQ(c1.letter(4), direct(pres, "a"));
  EXPECT_EQ(c1.letter(5), inverse(pres, "b"));
  EXPECT_EQ(shift(c, 12), c);
}

TEST(InvertShift, FiniteShiftIsIdentity) {
  Presentation pres = load("pres1.gp");
  Word w = parse_word(pres, "x^3 y^-2");
  EXPECT_EQ(shift(w, 7), w);
}

TEST(InvertShift, InvolutionAndAdditivity) {
  for (const char* name : {"pres1.gp", "pres2.gp", "bandalg.gp", "kronecker.gp"}) {
    Presentation pres = load(name);
    Signs signs = assign_signs(pres);
    for (const Word& w : sample(pres, signs, 150, 11)) {
      EXPECT_EQ(invert(invert(w)), w);
      EXPECT_EQ(shift(shift(w, 2), -5), shift(w, -3));
      if (!w.is_z()) EXPECT_EQ(shift(w, 4), w);
    }
  }
}

TEST(Composable, Pres1Examples) {
  Presentation pres = load("pres1.gp");
  Signs s = assign_signs(pres);
  EXPECT_TRUE(composable(pres, s, parse_word(pres, "x"), parse_word(pres, "y^-1")));
  EXPECT_TRUE(composable(pres, s, parse_word(pres, "x^3"), parse_word(pres, "y^-3 x^2 y^-1 x^2 y^-3 x^4")));
  EXPECT_FALSE(composable(pres, s, parse_word(pres, "x"), parse_word(pres, "x^-1")));
}

TEST(Composable, AgreesWithConcatenationValidity) {
  Rng rng(17);
  for (const char* name : {"pres1.gp", "pres2.gp", "bandalg.gp", "cycle4.gp"}) {
    Presentation pres = load(name);
    Signs signs = assign_signs(pres);
    auto words = enumerate_finite_words(pres, 3);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    long yes = 0, no = 0;
    for (int k = 0; k < 1000; ++k) {
      const Word& c = words[pick(rng)];
      const Word& d = words[pick(rng)];
      if (c.trivial() || d.trivial()) continue;
      std::vector<Letter> joined = c.core;
      joined.insert(joined.end(), d.core.begin(), d.core.end());
      const bool valid = !word_defect(pres, make_finite(joined)).has_value();
      EXPECT_EQ(composable(pres, signs, c, d), valid) << name << " " << render_word(pres, c) << " | " << render_word(pres, d);
      (valid ? yes : no) += 1;
    }
    EXPECT_GT(yes, 0) << name;
    EXPECT_GT(no, 0) << name;
  }
}

TEST(Peaks, Examples) {
  Presentation pres1 = load("pres1.gp");
  auto r = peaks(parse_word(pres1, kIntro));
  EXPECT_EQ(r.kind, PeakReport::Kind::Finite);
  EXPECT_EQ(r.peaks, (std::vector<long>{3, 8, 11, 18}));
  Presentation pres2 = load("pres2.gp");
  auto b = peaks(parse_word(pres2, kBand));
  EXPECT_EQ(b.kind, PeakReport::Kind::Periodic);
  EXPECT_EQ(b.period, 12);
  EXPECT_FALSE(b.peaks.empty());
  auto t = peaks(make_trivial<Letter>(0, 1));
  EXPECT_EQ(t.peaks, (std::vector<long>{0}));
}

TEST(Classify, IntroStringWord) {
  Presentation pres = load("pres1.gp");
  Signs s = assign_signs(pres);
  Classification cl = classify_word(pres, s, parse_word(pres, kIntro));
  EXPECT_EQ(cl.kind, Classification::Kind::StringWord);
  EXPECT_EQ(cl.shift, 0);
  EXPECT_EQ(render_word(pres, cl.decomposition.B), "x^-3");
  EXPECT_EQ(render_word(pres, cl.decomposition.A), "y^-3 x^2 y^-1 x^2 y^-3 x^4");
  EXPECT_EQ(render_word(pres, cl.decomposition.D), "(y^-1)^inf");
}

TEST(Classify, BandWordShiftedBackByFive) {
  Presentation pres = load("pres2.gp");
  Signs s = assign_signs(pres);
  Word c = parse_word(pres, kBand);
  Classification cl = classify_word(pres, s, shift(c, -5));
  EXPECT_EQ(cl.kind, Classification::Kind::BandWord);
  EXPECT_EQ(cl.shift, 5);
  EXPECT_EQ(cl.normalized.period(), 12);
  EXPECT_EQ(cl.normalized, c);
}

TEST(Classify, PrimitivePeriodic) {
  Presentation pres = load("pres2.gp");
  Signs s = assign_signs(pres);
  EXPECT_EQ(classify_word(pres, s, parse_word(pres, "inf(a b)inf@0")).kind, Classification::Kind::PrimitivePeriodic);
}

TEST(Classify, BandShiftsMatchExhaustiveSearch) {
  for (const char* name : {"pres1.gp", "pres2.gp", "bandalg.gp"}) {
    Presentation pres = load(name);
    Signs signs = assign_signs(pres);
    for (const Word& c : enumerate_cyclic_words(pres, 8)) {
      Classification cl = classify_word(pres, signs, c);
      if (cl.kind != Classification::Kind::BandWord) continue;
      std::vector<long> brute;
      for (long n = 0; n < c.period(); ++n)
        if (is_band_word_at_zero(shift(c, n))) brute.push_back(n);
      EXPECT_EQ(cl.band_shifts, brute);
      EXPECT_TRUE(is_band_word_at_zero(cl.normalized));
      EXPECT_EQ(shift(c, cl.shift), cl.normalized);
    }
  }
}

TEST(Classify, StringDecompositionRecomposes) {
  for (const char* name : {"pres1.gp", "pres2.gp", "bandalg.gp", "cycle4.gp", "a3rel.gp"}) {
    Presentation pres = load(name);
    Signs signs = assign_signs(pres);
    Rng rng(5);
    for (int k = 0; k < 150; ++k) {
      Word c = random_string_word(pres, signs, rng, 7);
      Classification cl = classify_word(pres, signs, c);
      ASSERT_EQ(cl.kind, Classification::Kind::StringWord);
      const auto& d = cl.decomposition;
      EXPECT_TRUE(d.B.trivial() || is_inverse_word(d.B));
      EXPECT_TRUE(d.D.trivial() || is_inverse_word(d.D));
      EXPECT_TRUE(d.A.trivial() || alternating_pairs(pres, d.A.core).has_value());
      Word recomposed = concat(invert(d.B), concat(d.A, d.D));
      EXPECT_TRUE(shift_between(recomposed, cl.normalized).has_value())
          << name << " " << render_word(pres, c) << " vs " << render_word(pres, recomposed);
      // Shifting the input does not change the normalized word; inverting swaps B and D.
      EXPECT_EQ(classify_word(pres, signs, shift(c, 3)).normalized, cl.normalized);
      Classification inv = classify_word(pres, signs, invert(c));
      ASSERT_EQ(inv.kind, Classification::Kind::StringWord);
      EXPECT_EQ(inv.decomposition.B, d.D);
      EXPECT_EQ(inv.decomposition.D, d.B);
      EXPECT_EQ(inv.decomposition.A, invert(d.A));
    }
  }
}

TEST(Equivalence, Examples) {
  Presentation pres1 = load("pres1.gp");
  Word c = parse_word(pres1, kIntro);
  auto w = words_equivalent(c, invert(c));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->shift, 0);
  EXPECT_TRUE(w->inverted);
  Presentation pres2 = load("pres2.gp");
  Word e = parse_word(pres2, kBand);
  auto b = words_equivalent(e, shift(e, 9));
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->shift, 9);
  EXPECT_FALSE(b->inverted);
  EXPECT_FALSE(words_equivalent(parse_word(pres1, "inf(x)inf@0"), parse_word(pres1, "inf(y)inf@0")).has_value());
  Presentation kr = load("kronecker.gp");
  EXPECT_FALSE(words_equivalent(parse_word(kr, "a"), parse_word(kr, "b")).has_value());
}

TEST(Equivalence, IsAnEquivalenceRelation) {
  Presentation pres = load("pres2.gp");
  Signs signs = assign_signs(pres);
  std::vector<Word> base = sample(pres, signs, 20, 23);
  std::vector<Word> closed;
  for (const Word& w : base)
    for (const Word& v : {w, invert(w), shift(w, 1), shift(invert(w), -2)}) closed.push_back(v);
  for (const Word& a : closed) {
    EXPECT_TRUE(words_equivalent(a, a).has_value());
    for (const Word& b : closed) {
      const bool ab = words_equivalent(a, b).has_value();
      EXPECT_EQ(ab, words_equivalent(b, a).has_value());
      EXPECT_EQ(ab, brute_force_equivalence(a, b, 30));
      if (!ab) continue;
      for (const Word& c : closed)
        if (words_equivalent(b, c)) EXPECT_TRUE(words_equivalent(a, c).has_value());
    }
  }
}
