#include <gtest/gtest.h>

#include <set>

#include "gentle/complexes.hpp"
#include "gentle/generate.hpp"
#include "gentle/oracle.hpp"
#include "gentle/resolve.hpp"
#include "test_support.hpp"

using namespace gentle;
using gentle::testing::data_path;
using gentle::testing::load;

namespace {

const char* const kC = "inf(<x>^-1<y>^-1)<x^4>^-1<y^3><x^2>^-1<y><x^2>^-1<y^3><x^4>^-1";
const char* const kBandA = "<a*b*a><b*a>^-1<b*a*b><a>^-1<b><a*b>^-1";

std::string entry_text(const Presentation& pres, const PathSum& s) {
  std::string out;
  for (const PathTerm& t : s) out += (out.empty() ? "" : " + ") + std::to_string(t.coeff) + "*" + render_path(pres, t.path);
  return out;
}

std::size_t slot_of(const PathMatrixComplex& cx, long n, long index) {
  const auto& comp = cx.component(n);
  for (std::size_t k = 0; k < comp.size(); ++k)
    if (comp[k].index == index) return k;
  ADD_FAILURE() << "position " << index << " missing from degree " << n;
  return 0;
}

GenWord band_cycle(const Presentation& pres) { return check_genword(pres, make_periodic(parse_genword(pres, kBandA).core)); }

std::vector<GenWord> finite_resolutions(const Presentation& pres, const Signs& signs, int count, unsigned seed) {
  Rng rng(seed);
  std::vector<GenWord> out;
  for (int k = 0; k < count; ++k) {
    GenWord g = resolution_of_string(pres, signs, random_string_word(pres, signs, rng, 7)).word;
    if (g.shape == Shape::Finite) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(StringComplex, ExampleBlock) {
  Presentation pres = load("pres1.gp");
  PathMatrixComplex cx = string_complex(pres, parse_genword(pres, kC), DegreeWindow{-1, 0});
  ASSERT_EQ(cx.component(-1).size(), 4u);
  ASSERT_EQ(cx.component(0).size(), 4u);
  const std::vector<std::vector<std::string>> expected{{"1*x^4", "1*y^3", "", ""},
                                                       {"", "1*x^2", "1*y", ""},
                                                       {"", "", "1*x^2", "1*y^3"},
                                                       {"", "", "", "1*x^4"}};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(entry_text(pres, cx.entry(-1, r, c)), expected[r][c]) << r << "," << c;
}

TEST(StringComplex, TrivialWord) {
  Presentation pres = load("pres1.gp");
  PathMatrixComplex cx = string_complex(pres, make_trivial<GenLetter>(0, 1));
  EXPECT_EQ(cx.component(0).size(), 1u);
  for (const auto& [n, d] : cx.differentials) EXPECT_TRUE(d.empty()) << n;
  EXPECT_TRUE(cx.component(1).empty());
  EXPECT_TRUE(cx.component(-1).empty());
}

TEST(StringComplex, InfiniteShapesNeedAWindow) {
  Presentation pres = load("pres1.gp");
  EXPECT_GENTLE_ERROR(string_complex(pres, parse_genword(pres, kC)), ErrorKind::WindowRequired);
  Presentation pres2 = load("pres2.gp");
  EXPECT_GENTLE_ERROR(string_complex(pres2, band_cycle(pres2)), ErrorKind::PeriodicInput);
}

TEST(StringComplex, InverseIsShiftedRelabeling) {
  for (const char* name : {"pres1.gp", "pres2.gp", "bandalg.gp", "cycle4.gp"}) {
    Presentation pres = load(name);
    Signs signs = assign_signs(pres);
    for (const GenWord& g : finite_resolutions(pres, signs, 80, 3)) {
      const long m = g.length(), k = hdeg(g, m);
      PathMatrixComplex a = string_complex(pres, g), b = string_complex(pres, invert(g));
      for (const auto& [n, comp] : b.components) {
        ASSERT_EQ(comp.size(), a.component(n + k).size()) << name << " degree " << n;
        for (std::size_t col = 0; col < comp.size(); ++col) {
          const std::size_t acol = slot_of(a, n + k, m - comp[col].index);
          for (std::size_t row = 0; row < b.component(n + 1).size(); ++row) {
            const std::size_t arow = slot_of(a, n + k + 1, m - b.component(n + 1)[row].index);
            EXPECT_EQ(entry_text(pres, b.entry(n, row, col)), entry_text(pres, a.entry(n + k, arow, acol)))
                << name << " " << render_genword(pres, g);
          }
        }
      }
    }
  }
}

TEST(BandComplex, ExampleRankOne) {
  Presentation pres = load("pres2.gp");
  PathMatrixComplex cx = band_complex(pres, band_cycle(pres), identity_tmodule(2, 1));
  EXPECT_EQ(cx.component(-1).size(), 3u);
  EXPECT_EQ(cx.component(0).size(), 3u);
  std::multiset<std::string> labels;
  std::size_t wraps = 0;
  for (const auto& [key, sum] : cx.differentials.at(-1)) {
    for (const PathTerm& t : sum) labels.insert(render_path(pres, t.path, PathStyle::Joined));
    if (key.second > key.first) ++wraps;
  }
  EXPECT_EQ(labels, (std::multiset<std::string>{"a*b*a", "b*a", "b*a*b", "a", "b", "a*b"}));
  EXPECT_EQ(wraps, 1u);
  EXPECT_TRUE(composes_to_zero(pres, cx));
}

TEST(BandComplex, RankTwoIdentityDoubles) {
  Presentation pres = load("pres2.gp");
  PathMatrixComplex one = band_complex(pres, band_cycle(pres), identity_tmodule(2, 1));
  PathMatrixComplex two = band_complex(pres, band_cycle(pres), identity_tmodule(2, 2));
  EXPECT_EQ(two.component(-1).size(), 6u);
  EXPECT_EQ(two.component(0).size(), 6u);
  EXPECT_EQ(two.differentials.at(-1).size(), 2 * one.differentials.at(-1).size());
  for (const auto& [key, sum] : two.differentials.at(-1))
    EXPECT_EQ(two.component(0)[key.first].omega, two.component(-1)[key.second].omega);
}

TEST(BandComplex, CompanionMatrixOverF2) {
  Presentation pres = load("bandalg.gp");
  Signs signs = assign_signs(pres);
  ExpandedAlgebra alg = expand_algebra(pres, 2);
  TModule comp = load_tmodule(data_path("v_comp_f2.mat"));
  long tested = 0;
  for (const Word& c : enumerate_cyclic_words(pres, 8)) {
    if (classify_word(pres, signs, c).kind != Classification::Kind::BandWord) continue;
    PathMatrixComplex cx = band_complex(pres, resolution_of_band(pres, signs, c), comp);
    EXPECT_TRUE(composes_to_zero(pres, cx));
    std::set<int> omegas;
    for (const auto& [key, sum] : cx.differentials.at(-1))
      if (cx.component(0)[key.first].omega != cx.component(-1)[key.second].omega) omegas.insert(1);
    EXPECT_FALSE(omegas.empty()) << "wrap column mixes the two blocks";
    ExpandedComplex e = expand_complex(pres, alg, cx);
    EXPECT_EQ(fp::rank(e.matrix(-1), 2), e.dim(-1));
    ++tested;
  }
  EXPECT_GT(tested, 0);
}

TEST(Complexes, DSquaredZeroEverywhere) {
  for (const char* name : {"pres1.gp", "pres2.gp", "bandalg.gp", "cycle4.gp", "kronecker.gp"}) {
    Presentation pres = load(name);
    Signs signs = assign_signs(pres);
    Rng rng(29);
    for (int k = 0; k < 100; ++k) {
      GenWord g = resolution_of_string(pres, signs, random_string_word(pres, signs, rng, 7)).word;
      std::optional<DegreeWindow> window;
      if (g.shape != Shape::Finite) window = DegreeWindow{-4, 2};
      std::string where;
      EXPECT_TRUE(composes_to_zero(pres, string_complex(pres, g, window), &where)) << name << " " << where;
    }
    for (const Word& c : enumerate_cyclic_words(pres, 6)) {
      if (classify_word(pres, signs, c).kind != Classification::Kind::BandWord) continue;
      for (int r = 1; r <= 2; ++r)
        EXPECT_TRUE(composes_to_zero(pres, band_complex(pres, resolution_of_band(pres, signs, c), identity_tmodule(3, r))));
    }
  }
}

TEST(Complexes, BandComplexesHaveTwoAdjacentDegrees) {
  for (const char* name : {"pres2.gp", "bandalg.gp", "kronecker.gp", "evenband.gp"}) {
    Presentation pres = load(name);
    Signs signs = assign_signs(pres);
    for (const Word& c : enumerate_cyclic_words(pres, 8)) {
      if (classify_word(pres, signs, c).kind != Classification::Kind::BandWord) continue;
      PathMatrixComplex cx = band_complex(pres, resolution_of_band(pres, signs, c), identity_tmodule(2, 1));
      std::vector<long> degrees;
      for (const auto& [n, comp] : cx.components)
        if (!comp.empty()) degrees.push_back(n);
      EXPECT_EQ(degrees, (std::vector<long>{-1, 0})) << name;
    }
  }
}

TEST(Kernel, ExampleValues) {
  Presentation pres = load("pres1.gp");
  GenWord g = parse_genword(pres, kC);
  for (long i : {0L, -2L, -4L, -6L}) EXPECT_EQ(kernel_at(pres, g, i).kind, KernelEntry::Kind::Trivial) << i;
  for (long i : {-1L, -3L, -5L}) EXPECT_EQ(kernel_at(pres, g, i).kind, KernelEntry::Kind::Zero) << i;
  for (long i = -7; i >= -15; --i) {
    KernelEntry k = kernel_at(pres, g, i);
    ASSERT_EQ(k.kind, KernelEntry::Kind::Arrow) << i;
    EXPECT_EQ(pres.arrow_name(k.arrow), (i % 2 != 0) ? "y" : "x") << i;
  }
  std::vector<long> zero_block;
  for (const KernelEntry& k : kernel_generators(pres, g, 0)) zero_block.push_back(k.index);
  EXPECT_EQ(zero_block, (std::vector<long>{-6, -4, -2, 0}));
}

TEST(Kernel, AgreesWithExactKernel) {
  long compared = 0;
  for (const char* name : {"a3rel.gp", "a3.gp", "cycle4.gp", "bandalg.gp", "kronecker.gp"}) {
    Presentation pres = load(name);
    Signs signs = assign_signs(pres);
    ExpandedAlgebra alg = expand_algebra(pres, 3);
    for (const GenWord& g : finite_resolutions(pres, signs, 60, 31)) {
      PathMatrixComplex cx = string_complex(pres, g);
      ExpandedComplex e = expand_complex(pres, alg, cx);
      for (const auto& [n, comp] : cx.components) {
        if (comp.empty()) continue;
        const auto& basis = e.bases.at(n);
        fp::Mat kernel = fp::nullspace(e.matrix(n), basis.size(), 3);
        fp::Mat spanned;
        for (const KernelEntry& k : kernel_generators(pres, g, n)) {
          if (k.kind == KernelEntry::Kind::Zero) continue;
          const std::size_t slot = slot_of(cx, n, k.index);
          Path kappa = k.kind == KernelEntry::Kind::Trivial ? trivial_path(k.vertex) : arrow_path(pres, k.arrow);
          for (const Path& lambda : alg.basis) {
            if (path_tail(pres, lambda) != path_head(pres, kappa)) continue;
            auto prod = compose(pres, lambda, kappa);
            if (!prod) continue;
            std::vector<int> row(basis.size(), 0);
            const std::size_t b = alg.find(*prod);
            for (std::size_t q = 0; q < basis.size(); ++q)
              if (basis[q].first == slot && basis[q].second == b) row[q] = 1;
            spanned.push_back(row);
          }
        }
        if (kernel.empty() || spanned.empty()) {
          EXPECT_EQ(kernel.empty(), spanned.empty()) << name << " " << render_genword(pres, g) << " degree " << n;
          continue;
        }
        EXPECT_TRUE(fp::same_row_space(kernel, spanned, 3)) << name << " " << render_genword(pres, g) << " degree " << n;
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 100);
}

TEST(Recognize, Examples) {
  Presentation pres1 = load("pres1.gp");
  Signs s1 = assign_signs(pres1);
  ResolutionVerdict v = recognize_resolution(pres1, s1, parse_genword(pres1, kC));
  EXPECT_EQ(v.kind, ResolutionVerdict::Kind::StringResolutionAt);
  EXPECT_EQ(v.shift, 0);
  EXPECT_EQ(v.degree, 0);
  EXPECT_EQ(render_verdict(v), "StringResolutionAt(0, 0)");
  Presentation pres2 = load("pres2.gp");
  ResolutionVerdict b = recognize_resolution(pres2, assign_signs(pres2), band_cycle(pres2));
  EXPECT_EQ(b.kind, ResolutionVerdict::Kind::BandResolutionAt);
  EXPECT_EQ(b.shift, 0);
  EXPECT_EQ(b.degree, 0);
  ResolutionVerdict n = recognize_resolution(pres1, s1, parse_genword(pres1, "<y><x^2>"));
  EXPECT_EQ(n.kind, ResolutionVerdict::Kind::NotAResolution);
  EXPECT_FALSE(n.reason.empty());
}

TEST(Recognize, EveryResolutionIsRecognized) {
  for (const char* name : {"pres1.gp", "pres2.gp", "bandalg.gp", "cycle4.gp"}) {
    Presentation pres = load(name);
    Signs signs = assign_signs(pres);
    Rng rng(37);
    for (int k = 0; k < 100; ++k) {
      StringResolution r = resolution_of_string(pres, signs, random_string_word(pres, signs, rng, 7));
      EXPECT_EQ(recognize_resolution(pres, signs, r.word).kind, ResolutionVerdict::Kind::StringResolutionAt) << name;
    }
  }
}
