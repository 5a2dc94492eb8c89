#include <doxa/belief.hpp>
#include <doxa/corpus.hpp>
#include <doxa/error.hpp>

#include <gtest/gtest.h>

#include "../support/oracle.hpp"

using namespace doxa;
using corpus::CardQuestion;

namespace {

Proposition states(const ProbabilityStructure& m, std::vector<std::string> names) {
  return make_proposition(m, names);
}

Proposition fair_states(const ProbabilityStructure& m, const std::string& prefix, std::size_t n) {
  Proposition p(m.state_count());
  for (std::size_t i = 1; i <= n; ++i) p.insert(*m.find_state(prefix + std::to_string(i)));
  return p;
}

ProbabilityStructure uniform(std::size_t n, Rational t) {
  StructureSpec spec;
  for (std::size_t i = 0; i < n; ++i) {
    spec.states.push_back("s" + std::to_string(i + 1));
    spec.weights.push_back(1);
    spec.cells.push_back({i});
  }
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  spec.evidence = {all};
  spec.threshold = t;
  return validate_structure(spec);
}

}  // namespace

TEST(BeliefSet, FlippingBelievesHeadsWithinSeven) {
  const auto m = corpus::make_flipping();
  const auto b = belief_set(m, m.universe());
  EXPECT_EQ(b.states, Proposition::range(30, 0, 7));
  EXPECT_EQ(b.mass_given_evidence, 1 - Rational(1, 128));
  EXPECT_EQ(b.op, BeliefOperator::Hpd);
  EXPECT_EQ(b.evidence, m.universe());
}

TEST(BeliefSet, DrawingCard) {
  const auto m = corpus::make_drawing_card();
  EXPECT_EQ(belief_set(m, m.universe()).states, fair_states(m, "F", 52));
  EXPECT_EQ(belief_set(m, m.universe()).mass_given_evidence, Rational(9, 10));
  const auto b = belief_set(m, states(m, {"F52", "T"}));
  EXPECT_EQ(b.states, states(m, {"T"}));
  EXPECT_EQ(b.mass_given_evidence, Rational(52, 61));
}

TEST(BeliefSet, DrawingCardOtherQuestions) {
  const auto q1 = corpus::make_drawing_card(CardQuestion::QPrime);
  EXPECT_EQ(belief_set(q1, q1.universe()).states, fair_states(q1, "F", 51));
  const auto q2 = corpus::make_drawing_card(CardQuestion::QDoublePrime);
  EXPECT_EQ(belief_set(q2, q2.universe()).states, q2.universe());
}

TEST(BeliefSet, PiMinusModel) {
  const auto m = corpus::make(corpus::CorpusId::PiMinusCounter);
  EXPECT_EQ(belief_set(m, m.universe()).states, states(m, {"s1", "s2", "s3", "s4"}));
}

TEST(BeliefSet, TiesEnterTogether) {
  const auto m = uniform(4, Rational(1, 100));
  EXPECT_EQ(belief_set(m, m.universe()).states, m.universe());
  EXPECT_EQ(belief_set(with_threshold(m, 1), m.universe()).states, m.universe());
}

TEST(BeliefSet, ZeroThresholdIsEmptyForHpdAndEverythingForLk) {
  const auto m = with_threshold(corpus::make_drawing_card(), 0);
  for (const auto& e : m.evidence()) {
    EXPECT_TRUE(belief_set(m, e).states.empty());
    EXPECT_EQ(lk_belief_set(m, e).states, e);
  }
}

TEST(BeliefSet, ZeroWeightCellsDropOut) {
  StructureSpec spec;
  spec.states = {"a", "b", "c"};
  spec.weights = {Rational(1), Rational(0), Rational(1)};
  spec.cells = {{0}, {1}, {2}};
  spec.evidence = {{0, 1, 2}};
  spec.threshold = 1;
  const auto m = validate_structure(spec);
  // b's cell is outranked by mass 1 = t, so it is excluded even at t = 1.
  EXPECT_EQ(belief_set(m, m.universe()).states, Proposition::of(3, {0, 2}));
  EXPECT_EQ(lk_belief_set(m, m.universe()).states, Proposition::of(3, {0, 2}));
}

TEST(BeliefSet, ConditionOnNull) {
  StructureSpec spec;
  spec.states = {"a", "b"};
  spec.weights = {Rational(1), Rational(0)};
  spec.cells = {{0, 1}};
  spec.evidence = {{0, 1}};
  spec.threshold = Rational(1, 2);
  const auto m = validate_structure(spec);
  try {
    belief_set(m, Proposition::of(2, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConditionOnNull);
  }
  EXPECT_THROW(lk_belief_set(m, Proposition::of(2, {1})), Error);
}

TEST(LkBeliefSet, DrawingCardFinestQuestionLowThreshold) {
  const auto m = with_threshold(corpus::make_drawing_card(CardQuestion::QDoublePrime), Rational(1, 5));
  const auto b = lk_belief_set(m, m.universe());
  EXPECT_EQ(b.states, states(m, {"T"}));
  EXPECT_EQ(b.mass_given_evidence, Rational(1, 10));
  EXPECT_LT(b.mass_given_evidence, m.threshold());
}

TEST(LkBeliefSet, DrawingCardV2) {
  const auto m = corpus::make_drawing_card_v2();
  EXPECT_EQ(lk_belief_set(m, m.universe()).states, fair_states(m, "fair_", 52));
  for (std::size_t j = 1; j <= 52; ++j) {
    const auto e = states(m, {"fair_" + std::to_string(j), "trick_" + std::to_string(j)});
    ASSERT_TRUE(m.is_evidence(e));
    EXPECT_EQ(lk_belief_set(m, e).states, states(m, {"trick_" + std::to_string(j)}));
  }
}

TEST(LkBeliefSet, UniformAtThresholdOneKeepsEverything) {
  const auto m = uniform(5, 1);
  EXPECT_EQ(lk_belief_set(m, m.universe()).states, m.universe());
}

TEST(Believes, Basics) {
  const auto m = corpus::make_drawing_card();
  EXPECT_TRUE(believes(m, m.universe(), fair_states(m, "F", 52)));
  for (const auto& e : m.evidence()) {
    EXPECT_TRUE(believes(m, e, e));
    EXPECT_TRUE(believes(m, e, e, BeliefOperator::Lk));
    EXPECT_FALSE(believes(m, e, m.empty_set()));
  }
}

TEST(HpdOracle, AgreesOnDrawingCardQuestions) {
  for (auto q : {CardQuestion::Q, CardQuestion::QPrime, CardQuestion::QDoublePrime}) {
    const auto m = corpus::make_drawing_card(q);
    for (const auto& e : m.evidence()) EXPECT_EQ(hpd_oracle(m, e), belief_set(m, e));
  }
}

TEST(HpdOracle, AgreesOnCorpus) {
  for (auto id : corpus::all_ids()) {
    const auto m = corpus::make(id);
    for (const auto& e : m.evidence()) EXPECT_EQ(hpd_oracle(m, e), belief_set(m, e)) << corpus::to_string(id);
  }
}

TEST(BeliefSet, MatchesDefinitionOnCorpus) {
  for (auto id : corpus::all_ids()) {
    const auto m = corpus::make(id);
    if (m.state_count() > 120) continue;
    for (const auto& e : m.evidence()) {
      EXPECT_EQ(belief_set(m, e).states, oracle::hpd(m, e)) << corpus::to_string(id);
      EXPECT_EQ(lk_belief_set(m, e).states, oracle::lk(m, e)) << corpus::to_string(id);
    }
  }
}

TEST(NmConsequence, Flipping) {
  const auto m = corpus::make_flipping();
  const auto tail = Proposition::range(30, 1, 30);
  EXPECT_TRUE(nm_consequence(m, tail, Proposition::range(30, 1, 8)));
  EXPECT_FALSE(nm_consequence(m, tail, Proposition::range(30, 1, 7)));
  EXPECT_FALSE(nm_consequence(m, m.universe(), Proposition::of(30, {0})));
  for (const auto& e : m.evidence()) EXPECT_TRUE(nm_consequence(m, e, e));
  try {
    nm_consequence(m, Proposition::of(30, {0, 1}), m.universe());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotEvidence);
  }
}

TEST(BeliefOperator, Names) {
  EXPECT_EQ(to_string(BeliefOperator::Hpd), "hpd");
  EXPECT_EQ(parse_operator("lk"), BeliefOperator::Lk);
  EXPECT_FALSE(parse_operator("LK?").has_value());
}
