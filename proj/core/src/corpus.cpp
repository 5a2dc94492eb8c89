#include "doxa/corpus.hpp"

#include <array>
#include <string>

namespace doxa::corpus {

namespace {

constexpr std::array<CorpusId, 10> kIds = {
    CorpusId::FlippingForHeads,  CorpusId::FlippingWithWalkaway,    CorpusId::DrawingCard,
    CorpusId::DrawingCardQPrime, CorpusId::DrawingCardQDoublePrime, CorpusId::DrawingCardV2,
    CorpusId::HundredFlips,      CorpusId::PiMinusCounter,          CorpusId::StabilityBoxPlus,
    CorpusId::StabilityDiamondMinus,
};

std::vector<std::size_t> iota_vec(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v;
  for (std::size_t i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

Rational pow2_inverse(std::size_t k) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, k);
  return Rational(mpz_class(1), d);
}

mpz_class binomial(std::size_t n, std::size_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

std::span<const CorpusId> all_ids() { return kIds; }

std::string_view to_string(CorpusId id) {
  switch (id) {
    case CorpusId::FlippingForHeads: return "flipping";
    case CorpusId::FlippingWithWalkaway: return "flipping-walkaway";
    case CorpusId::DrawingCard: return "drawing-card";
    case CorpusId::DrawingCardQPrime: return "drawing-card-q-prime";
    case CorpusId::DrawingCardQDoublePrime: return "drawing-card-q-double-prime";
    case CorpusId::DrawingCardV2: return "drawing-card-v2";
    case CorpusId::HundredFlips: return "hundred-flips";
    case CorpusId::PiMinusCounter: return "pi-minus-counter";
    case CorpusId::StabilityBoxPlus: return "stability-box-plus";
    case CorpusId::StabilityDiamondMinus: return "stability-diamond-minus";
  }
  return "?";
}

std::optional<CorpusId> parse_corpus_id(std::string_view name) {
  for (auto id : kIds) {
    if (name == to_string(id)) return id;
  }
  return std::nullopt;
}

ProbabilityStructure make_flipping(std::size_t n, const Rational& t, bool walkaway) {
  if (n < 16) throw Error(ErrorCode::InfeasibleConfig, "flipping needs at least 16 states");
  StructureSpec spec;
  for (std::size_t i = 1; i <= n; ++i) {
    spec.states.push_back("s" + std::to_string(i));
    spec.weights.push_back(pow2_inverse(i < n ? i : n - 1));
    spec.cells.push_back({i - 1});
  }
  for (std::size_t i = 0; i < n; ++i) spec.evidence.push_back(iota_vec(i, n));
  if (walkaway) spec.evidence.push_back(iota_vec(0, 7));
  spec.threshold = t;
  return validate_structure(std::move(spec));
}

ProbabilityStructure make_drawing_card(CardQuestion question) {
  constexpr std::size_t kCards = 52;
  const std::size_t trick = kCards;
  StructureSpec spec;
  for (std::size_t i = 1; i <= kCards; ++i) {
    spec.states.push_back("F" + std::to_string(i));
    spec.weights.emplace_back(9, 520);
  }
  spec.states.push_back("T");
  spec.weights.emplace_back(52, 520);
  for (auto& w : spec.weights) w.canonicalize();

  switch (question) {
    case CardQuestion::Q:
      spec.cells = {iota_vec(0, kCards), {trick}};
      break;
    case CardQuestion::QPrime:
      spec.cells = {iota_vec(0, kCards - 1), {kCards - 1}, {trick}};
      break;
    case CardQuestion::QDoublePrime:
      for (std::size_t s = 0; s <= kCards; ++s) spec.cells.push_back({s});
      break;
  }

  spec.evidence.push_back(iota_vec(0, kCards + 1));
  for (std::size_t i = 0; i + 1 < kCards; ++i) spec.evidence.push_back({i});
  spec.evidence.push_back({kCards - 1, trick});
  spec.threshold = Rational(17, 20);
  return validate_structure(std::move(spec));
}

ProbabilityStructure make_drawing_card_v2(const Rational& t) {
  constexpr std::size_t kCards = 52;
  StructureSpec spec;
  for (std::size_t j = 1; j <= kCards; ++j) {
    spec.states.push_back("fair_" + std::to_string(j));
    spec.weights.emplace_back(1, 260);
  }
  for (std::size_t j = 1; j <= kCards; ++j) {
    spec.states.push_back("trick_" + std::to_string(j));
    spec.weights.emplace_back(1, 65);
  }
  spec.cells.push_back(iota_vec(0, kCards));
  for (std::size_t j = 0; j < kCards; ++j) spec.cells.push_back({kCards + j});
  spec.evidence.push_back(iota_vec(0, 2 * kCards));
  for (std::size_t j = 0; j < kCards; ++j) spec.evidence.push_back({j, kCards + j});
  spec.threshold = t;
  return validate_structure(std::move(spec));
}

ProbabilityStructure make_hundred_flips(std::size_t n, FlipsQuestion question, const Rational& t) {
  StructureSpec spec;
  spec.threshold = t;
  std::vector<std::size_t> first_heads;
  std::vector<std::size_t> first_tails;

  if (question == FlipsQuestion::Sequence) {
    if (n == 0 || n > 12) throw Error(ErrorCode::InfeasibleConfig, "sequence question supports 1..12 flips");
    const std::size_t count = std::size_t{1} << n;
    const Rational w = pow2_inverse(n);
    for (std::size_t code = 0; code < count; ++code) {
      std::string name = "seq_";
      for (std::size_t i = 0; i < n; ++i) name += ((code >> (n - 1 - i)) & 1u) ? 'T' : 'H';
      spec.states.push_back(std::move(name));
      spec.weights.push_back(w);
      spec.cells.push_back({code});
      ((code >> (n - 1)) & 1u ? first_tails : first_heads).push_back(code);
    }
  } else {
    if (n == 0 || n > 100) throw Error(ErrorCode::InfeasibleConfig, "count and polar questions support 1..100 flips");
    const Rational scale = pow2_inverse(n);
    // Ordered by heads count, tails-first state before heads-first state.
    std::vector<std::size_t> count_of_state;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k <= n - 1) {
        first_tails.push_back(spec.states.size());
        spec.states.push_back("T_" + std::to_string(k));
        spec.weights.push_back(Rational(binomial(n - 1, k)) * scale);
        count_of_state.push_back(k);
      }
      if (k >= 1) {
        first_heads.push_back(spec.states.size());
        spec.states.push_back("H_" + std::to_string(k));
        spec.weights.push_back(Rational(binomial(n - 1, k - 1)) * scale);
        count_of_state.push_back(k);
      }
    }
    if (question == FlipsQuestion::Count) {
      spec.cells.assign(n + 1, {});
      for (std::size_t s = 0; s < count_of_state.size(); ++s) spec.cells[count_of_state[s]].push_back(s);
    } else {
      // "More than ceil(0.9 n) heads?"
      const std::size_t cutoff = (9 * n + 9) / 10;
      spec.cells.assign(2, {});
      for (std::size_t s = 0; s < count_of_state.size(); ++s) {
        spec.cells[count_of_state[s] > cutoff ? 1 : 0].push_back(s);
      }
      if (spec.cells[1].empty()) spec.cells.pop_back();
    }
  }
  spec.evidence.push_back(iota_vec(0, spec.states.size()));
  spec.evidence.push_back(first_heads);
  spec.evidence.push_back(first_tails);
  return validate_structure(std::move(spec));
}

ProbabilityStructure make_appendix(CorpusId id) {
  StructureSpec spec;
  switch (id) {
    case CorpusId::PiMinusCounter:
      spec.states = {"s1", "s2", "s3", "s4", "s5", "s6"};
      spec.weights.assign(6, Rational(1, 6));
      spec.cells = {{0, 1}, {2, 3}, {4}, {5}};
      spec.evidence = {{0, 1, 2, 3, 4, 5}, {0, 2, 4}, {1, 3, 5}};
      spec.threshold = Rational(13, 20);
      break;
    case CorpusId::StabilityBoxPlus:
      spec.states = {"a", "b", "c"};
      spec.weights = {Rational(9, 10), Rational(9, 100), Rational(1, 100)};
      spec.cells = {{0}, {1}, {2}};
      spec.evidence = {{0, 1, 2}, {0, 1}};
      spec.threshold = Rational(9001, 10000);
      break;
    case CorpusId::StabilityDiamondMinus:
      // Answers A, B, C with prior 1/2, 1/4 + 1/20, 1/4 - 1/20, each split
      // into a state inside E (1/6 each) and one outside.
      spec.states = {"A_in", "A_out", "B_in", "B_out", "C_in", "C_out"};
      spec.weights = {Rational(1, 6), Rational(1, 3), Rational(1, 6), Rational(2, 15), Rational(1, 6), Rational(1, 30)};
      spec.cells = {{0, 1}, {2, 3}, {4, 5}};
      spec.evidence = {{0, 1, 2, 3, 4, 5}, {0, 2, 4}};
      spec.threshold = Rational(11, 20);
      break;
    default:
      throw Error(ErrorCode::InfeasibleConfig, "not an appendix structure: " + std::string(to_string(id)));
  }
  return validate_structure(std::move(spec));
}

ProbabilityStructure make(CorpusId id) {
  switch (id) {
    case CorpusId::FlippingForHeads: return make_flipping(30, Rational(99, 100), false);
    case CorpusId::FlippingWithWalkaway: return make_flipping(30, Rational(99, 100), true);
    case CorpusId::DrawingCard: return make_drawing_card(CardQuestion::Q);
    case CorpusId::DrawingCardQPrime: return make_drawing_card(CardQuestion::QPrime);
    case CorpusId::DrawingCardQDoublePrime: return make_drawing_card(CardQuestion::QDoublePrime);
    case CorpusId::DrawingCardV2: return make_drawing_card_v2();
    case CorpusId::HundredFlips: return make_hundred_flips();
    default: return make_appendix(id);
  }
}

}  // namespace doxa::corpus
