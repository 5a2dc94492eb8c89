#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "doxa/rational.hpp"
#include "doxa/structure.hpp"

namespace doxa::corpus {

enum class CorpusId {
  FlippingForHeads,
  FlippingWithWalkaway,
  DrawingCard,
  DrawingCardQPrime,
  DrawingCardQDoublePrime,
  DrawingCardV2,
  HundredFlips,
  PiMinusCounter,
  StabilityBoxPlus,
  StabilityDiamondMinus,
};

std::span<const CorpusId> all_ids();
// Kebab-case fixture name, e.g. "drawing-card-q-prime".
std::string_view to_string(CorpusId id);
std::optional<CorpusId> parse_corpus_id(std::string_view name);

// Fair coin flipped until heads, truncated at n states: weight(s_i) = 2^-i for
// i < n and the tail lump weight(s_n) = 2^-(n-1). Evidence: every suffix
// {s_i..s_n}; with walkaway also {s_1..s_7}. Requires n >= 16.
ProbabilityStructure make_flipping(std::size_t n = 30, const Rational& t = Rational(99, 100),
                                   bool walkaway = false);

enum class CardQuestion { Q, QPrime, QDoublePrime };

// F1..F52 (9/520 each) and T (52/520); t = 17/20.
ProbabilityStructure make_drawing_card(CardQuestion question = CardQuestion::Q);

// fair_j (1/260) and trick_j (4/260) for j = 1..52; question = which deck;
// evidence S and E_j = {fair_j, trick_j}.
ProbabilityStructure make_drawing_card_v2(const Rational& t = Rational(3, 10));

enum class FlipsQuestion { Polar, Count, Sequence };

// Count/Polar: states (first flip, heads count) with binomial weights.
// Sequence: all 2^n sequences with the singleton question (n <= 12).
ProbabilityStructure make_hundred_flips(std::size_t n = 100, FlipsQuestion question = FlipsQuestion::Count,
                                        const Rational& t = Rational(999, 1000));

// PiMinusCounter, StabilityBoxPlus or StabilityDiamondMinus.
ProbabilityStructure make_appendix(CorpusId id);

// Structure for an id with default parameters.
ProbabilityStructure make(CorpusId id);

}  // namespace doxa::corpus
