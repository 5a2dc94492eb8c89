#include <doxa/belief.hpp>
#include <doxa/corpus.hpp>
#include <doxa/principles.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "../support/oracle.hpp"

using namespace doxa;

namespace {

Proposition names(const ProbabilityStructure& m, std::vector<std::string> n) { return make_proposition(m, n); }

Verdict check(const ProbabilityStructure& m, Principle p, BeliefOperator op = BeliefOperator::Hpd) {
  return check_principle(m, p, op);
}

}  // namespace

TEST(Principle, NamesAndAliases) {
  EXPECT_EQ(klm_alias(Principle::DiamondMinus), "rational monotony");
  EXPECT_EQ(klm_alias(Principle::BoxPlus), "cut");
  EXPECT_EQ(klm_alias(Principle::BoxMinus), "cautious monotony");
  for (auto p : {Principle::DiamondR, Principle::BoxR, Principle::PiMinus, Principle::PiR}) {
    EXPECT_FALSE(klm_alias(p).has_value());
  }
  EXPECT_EQ(parse_principle("cut"), Principle::BoxPlus);
  EXPECT_EQ(parse_principle("rational-monotony"), Principle::DiamondMinus);
  EXPECT_EQ(parse_principle("cautious-monotony"), Principle::BoxMinus);
  for (auto p : kAllPrinciples) EXPECT_EQ(parse_principle(to_string(p)), p);
  EXPECT_FALSE(parse_principle("box").has_value());
}

TEST(EnumerateDiscoveries, SingleEvidenceIsEmpty) {
  StructureSpec spec;
  spec.states = {"a", "b"};
  spec.weights = {1, 1};
  spec.cells = {{0}, {1}};
  spec.evidence = {{0, 1}};
  spec.threshold = Rational(1, 2);
  EXPECT_TRUE(enumerate_discoveries(validate_structure(spec)).empty());
}

TEST(EnumerateDiscoveries, PiMinusModel) {
  const auto m = corpus::make(corpus::CorpusId::PiMinusCounter);
  const auto pairs = enumerate_discoveries(m);
  ASSERT_EQ(pairs.size(), 2u);
  std::set<Proposition> found;
  for (const auto& [e, f] : pairs) {
    EXPECT_EQ(e, m.universe());
    found.insert(f);
  }
  EXPECT_EQ(found, (std::set<Proposition>{names(m, {"s1", "s3", "s5"}), names(m, {"s2", "s4", "s6"})}));
}

TEST(EnumerateDiscoveries, FlippingSuffixes) {
  const auto m = corpus::make_flipping();
  // 30 suffixes: every ordered pair i < j.
  EXPECT_EQ(enumerate_discoveries(m).size(), 30u * 29u / 2u);
  const auto w = corpus::make_flipping(30, Rational(99, 100), true);
  // {s1..s7} is a proper subset only of S.
  EXPECT_EQ(enumerate_discoveries(w).size(), 30u * 29u / 2u + 1u);
  for (const auto& [e, f] : enumerate_discoveries(w)) {
    EXPECT_TRUE(f.is_subset_of(e));
    EXPECT_NE(f, e);
  }
}

TEST(EnumeratePartitions, PiMinusModel) {
  const auto m = corpus::make(corpus::CorpusId::PiMinusCounter);
  const auto parts = enumerate_partitions(m, m.universe());
  EXPECT_FALSE(parts.bounded);
  ASSERT_EQ(parts.partitions.size(), 2u);
  std::set<std::vector<Proposition>> got;
  for (auto p : parts.partitions) {
    std::sort(p.begin(), p.end());
    got.insert(p);
  }
  EXPECT_TRUE(got.count({m.universe()}));
  EXPECT_TRUE(got.count({names(m, {"s1", "s3", "s5"}), names(m, {"s2", "s4", "s6"})}));
}

TEST(EnumeratePartitions, DrawingCardV2) {
  const auto m = corpus::make_drawing_card_v2();
  const auto parts = enumerate_partitions(m, m.universe());
  ASSERT_EQ(parts.partitions.size(), 2u);
  std::vector<std::size_t> sizes;
  for (const auto& p : parts.partitions) sizes.push_back(p.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 52}));
}

TEST(EnumeratePartitions, BoundIsReported) {
  const auto m = corpus::make_drawing_card();
  // S = {F1}+...+{F51}+{F52,T} plus the trivial partition.
  EXPECT_EQ(enumerate_partitions(m, m.universe()).partitions.size(), 2u);
  const auto capped = enumerate_partitions(m, m.universe(), 1);
  EXPECT_TRUE(capped.bounded);
  EXPECT_EQ(capped.partitions.size(), 1u);
}

TEST(EnumeratePartitions, AgreesWithBruteForce) {
  for (auto id : corpus::all_ids()) {
    const auto m = corpus::make(id);
    if (m.evidence().size() > 16) continue;
    for (const auto& e : m.evidence()) {
      auto mine = enumerate_partitions(m, e).partitions;
      auto theirs = oracle::partitions(m, e);
      for (auto* v : {&mine, &theirs}) {
        for (auto& p : *v) std::sort(p.begin(), p.end());
        std::sort(v->begin(), v->end());
      }
      EXPECT_EQ(mine, theirs) << corpus::to_string(id);
    }
  }
}

TEST(CheckPrinciple, FlippingDiamondMinus) {
  const auto m = corpus::make_flipping();
  const auto v = check(m, Principle::DiamondMinus);
  ASSERT_FALSE(v.holds());
  const auto tail = Proposition::range(30, 1, 30);
  auto it = std::find_if(v.witnesses.begin(), v.witnesses.end(),
                         [&](const Witness& w) { return w.evidence == m.universe() && w.discovery == tail; });
  ASSERT_NE(it, v.witnesses.end());
  EXPECT_EQ(it->belief_before.states, Proposition::range(30, 0, 7));
  ASSERT_EQ(it->belief_after.size(), 1u);
  EXPECT_EQ(it->belief_after[0].states, Proposition::range(30, 1, 8));
  EXPECT_TRUE(check(m, Principle::BoxMinus).holds());
}

TEST(CheckPrinciple, WalkawayBoxPlus) {
  const auto m = corpus::make_flipping(30, Rational(99, 100), true);
  const auto v = check(m, Principle::BoxPlus);
  ASSERT_EQ(v.witnesses.size(), 1u);
  const auto& w = v.witnesses[0];
  EXPECT_EQ(w.evidence, m.universe());
  EXPECT_EQ(w.discovery, Proposition::range(30, 0, 7));
  EXPECT_EQ(w.belief_before.states, Proposition::range(30, 0, 7));
  EXPECT_EQ(w.belief_after[0].states, Proposition::range(30, 0, 6));
}

TEST(CheckPrinciple, DrawingCardReversal) {
  const auto m = corpus::make_drawing_card();
  const auto v = check(m, Principle::DiamondR);
  ASSERT_EQ(v.witnesses.size(), 1u);
  EXPECT_EQ(v.witnesses[0].evidence, m.universe());
  EXPECT_EQ(v.witnesses[0].discovery, names(m, {"F52", "T"}));
  EXPECT_FALSE(v.witnesses[0].belief_before.states.intersects(v.witnesses[0].belief_after[0].states));
}

TEST(CheckAll, DrawingCardHpd) {
  const auto m = corpus::make_drawing_card();
  const auto all = check_all(m, BeliefOperator::Hpd);
  ASSERT_EQ(all.size(), 7u);
  std::vector<bool> holds;
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(all[i].principle, kAllPrinciples[i]);
    holds.push_back(all[i].holds());
  }
  // The partition {F1},...,{F51},{F52,T} of S always has a member {Fi} whose
  // belief set {Fi} sits inside B(S), so neither partition principle fails.
  EXPECT_EQ(holds, (std::vector<bool>{false, false, true, true, true, true, true}));
}

TEST(CheckAll, SingleEvidenceHoldsEverywhere) {
  StructureSpec spec;
  spec.states = {"a", "b", "c"};
  spec.weights = {3, 2, 1};
  spec.cells = {{0}, {1, 2}};
  spec.evidence = {{0, 1, 2}};
  spec.threshold = Rational(2, 3);
  const auto m = validate_structure(spec);
  for (auto op : {BeliefOperator::Hpd, BeliefOperator::Lk}) {
    for (const auto& v : check_all(m, op)) EXPECT_TRUE(v.holds()) << to_string(v.principle);
  }
}

TEST(CheckPrinciple, PiMinusCounter) {
  const auto m = corpus::make(corpus::CorpusId::PiMinusCounter);
  const auto v = check(m, Principle::PiMinus);
  ASSERT_EQ(v.witnesses.size(), 1u);
  const auto& w = v.witnesses[0];
  ASSERT_EQ(w.partition.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(w.belief_after[i].states, w.partition[i]);
}

TEST(CheckPrinciple, StabilityBoxPlusModel) {
  const auto m = corpus::make(corpus::CorpusId::StabilityBoxPlus);
  const auto v = check(m, Principle::BoxPlus);
  ASSERT_EQ(v.witnesses.size(), 1u);
  EXPECT_EQ(v.witnesses[0].belief_before.states, names(m, {"a", "b"}));
  EXPECT_EQ(v.witnesses[0].belief_after[0].states, names(m, {"a"}));
}

TEST(CheckPrinciple, DrawingCardV2LkReversesOnEveryDraw) {
  const auto m = corpus::make_drawing_card_v2();
  const auto v = check(m, Principle::PiR, BeliefOperator::Lk);
  ASSERT_EQ(v.witnesses.size(), 1u);
  EXPECT_EQ(v.witnesses[0].partition.size(), 52u);
  EXPECT_FALSE(v.bounded);
}

TEST(CheckPrinciple, ValidOnCorpus) {
  for (auto id : corpus::all_ids()) {
    const auto m = corpus::make(id);
    EXPECT_TRUE(check(m, Principle::BoxMinus).holds()) << corpus::to_string(id);
    EXPECT_TRUE(check(m, Principle::BoxR).holds()) << corpus::to_string(id);
    EXPECT_TRUE(check(m, Principle::BoxPlus, BeliefOperator::Lk).holds()) << corpus::to_string(id);
    EXPECT_TRUE(check(m, Principle::BoxMinus, BeliefOperator::Lk).holds()) << corpus::to_string(id);
  }
}

TEST(CheckPrinciple, AgreesWithOracleAndReplaysOnCorpus) {
  const oracle::Kind kinds[] = {oracle::Kind::DiamondMinus, oracle::Kind::DiamondR, oracle::Kind::BoxPlus,
                                oracle::Kind::BoxMinus,     oracle::Kind::BoxR,     oracle::Kind::PiMinus,
                                oracle::Kind::PiR};
  for (auto id : corpus::all_ids()) {
    const auto m = corpus::make(id);
    if (m.evidence().size() > 16 || m.state_count() > 60) continue;
    for (auto op : {BeliefOperator::Hpd, BeliefOperator::Lk}) {
      const auto verdicts = check_all(m, op);
      for (std::size_t i = 0; i < verdicts.size(); ++i) {
        EXPECT_EQ(verdicts[i].holds(), oracle::holds(m, kinds[i], op == BeliefOperator::Lk))
            << corpus::to_string(id) << " " << to_string(verdicts[i].principle);
        for (const auto& w : verdicts[i].witnesses) EXPECT_TRUE(witness_reproduces(m, verdicts[i].principle, op, w));
      }
    }
  }
}

TEST(CheckPrinciple, FirstWitnessOnly) {
  const auto m = corpus::make_flipping();
  CheckOptions opts;
  opts.first_witness_only = true;
  const auto v = check_principle(m, Principle::DiamondMinus, BeliefOperator::Hpd, opts);
  EXPECT_EQ(v.witnesses.size(), 1u);
  EXPECT_EQ(v.witnesses[0], check(m, Principle::DiamondMinus).witnesses[0]);
}

TEST(CheckPrinciple, TamperedWitnessDoesNotReplay) {
  const auto m = corpus::make_drawing_card();
  auto w = check(m, Principle::DiamondR).witnesses.at(0);
  w.discovery = names(m, {"F1"});
  EXPECT_FALSE(witness_reproduces(m, Principle::DiamondR, BeliefOperator::Hpd, w));
}

TEST(CheckOptions, PartitionBoundFromEnvironment) {
  ::setenv("DOXA_MAX_PARTITIONS", "1", 1);
  const auto opts = default_check_options();
  ::unsetenv("DOXA_MAX_PARTITIONS");
  EXPECT_EQ(opts.max_partitions, 1u);
  EXPECT_EQ(default_check_options().max_partitions, std::size_t{1} << 16);
  const auto m = corpus::make(corpus::CorpusId::PiMinusCounter);
  const auto v = check_principle(m, Principle::PiMinus, BeliefOperator::Hpd, opts);
  EXPECT_TRUE(v.bounded);
  EXPECT_FALSE(check_principle(m, Principle::PiMinus, BeliefOperator::Hpd).bounded);
}
