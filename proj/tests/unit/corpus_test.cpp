#include <doxa/belief.hpp>
#include <doxa/corpus.hpp>
#include <doxa/error.hpp>
#include <doxa/principles.hpp>
#include <doxa/properties.hpp>

#include <gtest/gtest.h>

using namespace doxa;
using namespace doxa::corpus;

TEST(Corpus, NamesRoundTrip) {
  EXPECT_EQ(all_ids().size(), 10u);
  for (auto id : all_ids()) EXPECT_EQ(parse_corpus_id(to_string(id)), id);
  EXPECT_FALSE(parse_corpus_id("flipping-for-tails").has_value());
}

TEST(Corpus, PriorsSumToOne) {
  for (auto id : all_ids()) {
    const auto m = make(id);
    EXPECT_EQ(m.prior(m.universe()), 1) << to_string(id);
    EXPECT_EQ(m.total_weight(), 1) << to_string(id);
  }
}

TEST(Flipping, SevenFlipWindowForEverySuffix) {
  const auto m = make_flipping();
  for (std::size_t i = 0; i + 9 < 30; ++i) {
    const auto e = Proposition::range(30, i, 30);
    ASSERT_TRUE(m.is_evidence(e));
    EXPECT_EQ(belief_set(m, e).states, Proposition::range(30, i, i + 7)) << "i=" << i;
  }
}

TEST(Flipping, TruncationTransparency) {
  const auto a = make_flipping(30);
  const auto b = make_flipping(40);
  for (std::size_t i = 0; i + 9 < 30; ++i) {
    const auto ba = belief_set(a, Proposition::range(30, i, 30)).states.members();
    const auto bb = belief_set(b, Proposition::range(40, i, 40)).states.members();
    EXPECT_EQ(ba, bb) << "i=" << i;
  }
}

TEST(Flipping, TailLumpAndErrors) {
  const auto m = make_flipping(20);
  EXPECT_EQ(m.weights()[18], m.weights()[19]);
  EXPECT_EQ(m.weights()[0], Rational(1, 2));
  try {
    make_flipping(15);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfeasibleConfig);
  }
}

TEST(Flipping, Walkaway) {
  const auto m = make_flipping(30, Rational(99, 100), true);
  const auto e = Proposition::range(30, 0, 7);
  ASSERT_TRUE(m.is_evidence(e));
  EXPECT_EQ(belief_set(m, e).states, Proposition::range(30, 0, 6));
}

TEST(DrawingCard, Evidence) {
  const auto m = make_drawing_card();
  EXPECT_EQ(m.evidence().size(), 53u);
  EXPECT_TRUE(m.is_evidence(m.universe()));
  EXPECT_TRUE(m.is_evidence(make_proposition(m, {"F52", "T"})));
  EXPECT_TRUE(m.is_evidence(make_proposition(m, {"F1"})));
  EXPECT_FALSE(m.is_evidence(make_proposition(m, {"F52"})));
}

TEST(DrawingCardV2, FairDeckProbability) {
  const auto m = make_drawing_card_v2();
  Proposition fair(m.state_count());
  for (int j = 1; j <= 52; ++j) fair.insert(*m.find_state("fair_" + std::to_string(j)));
  EXPECT_EQ(m.prior(fair), Rational(1, 5));
  EXPECT_EQ(m.question().size(), 53u);
  EXPECT_EQ(m.evidence().size(), 53u);
  EXPECT_EQ(make_drawing_card_v2(Rational(2, 5)).threshold(), Rational(2, 5));
}

TEST(HundredFlips, CountQuestionBelief) {
  const auto m = make_hundred_flips();
  const auto b = belief_set(m, m.universe()).states;
  for (auto s : b.members()) {
    const auto k = std::stoi(m.state_name(s).substr(2));
    EXPECT_LE(k, 90);
  }
  EXPECT_FALSE(b.empty());
  EXPECT_EQ(m.question().size(), 101u);
}

TEST(HundredFlips, ExactBinomialWeights) {
  const auto m = make_hundred_flips(4);
  // Pr(first = H, k = 2) = C(3,1)/16; Pr(first = T, k = 2) = C(3,2)/16.
  EXPECT_EQ(m.weights()[*m.find_state("H_2")], Rational(3, 16));
  EXPECT_EQ(m.weights()[*m.find_state("T_2")], Rational(3, 16));
  EXPECT_EQ(m.weights()[*m.find_state("T_0")], Rational(1, 16));
  EXPECT_FALSE(m.find_state("H_0").has_value());
  EXPECT_FALSE(m.find_state("T_4").has_value());
}

TEST(HundredFlips, PolarQuestion) {
  const auto m = make_hundred_flips(100, FlipsQuestion::Polar);
  EXPECT_EQ(m.question().size(), 2u);
  EXPECT_EQ(answer_of(m, "H_90"), answer_of(m, "T_0"));
  EXPECT_NE(answer_of(m, "H_91"), answer_of(m, "T_0"));
  const auto b = belief_set(m, m.universe()).states;
  EXPECT_FALSE(b.contains(*m.find_state("H_95")));
  EXPECT_TRUE(b.contains(*m.find_state("H_50")));
}

TEST(HundredFlips, SequenceQuestionBelievesEverything) {
  const auto m = make_hundred_flips(10, FlipsQuestion::Sequence);
  EXPECT_EQ(m.state_count(), 1024u);
  EXPECT_EQ(belief_set(m, m.universe()).states, m.universe());
  EXPECT_THROW(make_hundred_flips(13, FlipsQuestion::Sequence), Error);
  EXPECT_THROW(make_hundred_flips(101, FlipsQuestion::Count), Error);
}

TEST(SmallModels, StabilityDiamondMinusConditionals) {
  const auto m = make(CorpusId::StabilityDiamondMinus);
  const auto e = m.evidence()[1];
  const auto& cells = m.question().cells();
  EXPECT_EQ(m.prior(cells[0]), Rational(1, 2));
  EXPECT_EQ(m.prior(cells[1]), Rational(3, 10));
  EXPECT_EQ(m.prior(cells[2]), Rational(1, 5));
  for (const auto& c : cells) EXPECT_EQ(conditional_probability(m, c, e), Rational(1, 3));
  EXPECT_EQ(belief_set(m, e).states, e);
  EXPECT_EQ(belief_set(m, m.universe()).states, cells[0] | cells[1]);
}

TEST(SmallModels, RejectsNonAppendixIds) { EXPECT_THROW(make_appendix(CorpusId::DrawingCard), Error); }
