#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "doxa/error.hpp"
#include "doxa/structure.hpp"

namespace doxa::dsl {

struct SourceSpan {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based
  std::size_t length = 0;
};

enum class ParseErrorKind { Syntax, UnknownState, DuplicateState, BadRational, MissingSection, SemanticInvalid };

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, SourceSpan span, std::string message,
             std::optional<ErrorCode> semantic = std::nullopt);

  [[nodiscard]] ParseErrorKind kind() const { return kind_; }
  [[nodiscard]] const SourceSpan& span() const { return span_; }
  [[nodiscard]] const std::string& message() const { return message_; }
  // The validation diagnostic when kind() == SemanticInvalid.
  [[nodiscard]] std::optional<ErrorCode> semantic_code() const { return semantic_; }

 private:
  ParseErrorKind kind_;
  SourceSpan span_;
  std::string message_;
  std::optional<ErrorCode> semantic_;
};

// Parses the .bps structure format and validates the result.
ProbabilityStructure parse(std::string_view text);

// Parses a text containing only a `question:` section against m's states.
Question parse_question(std::string_view text, const ProbabilityStructure& m);

// Parses "{a b c}" (or "S") against m's states.
Proposition parse_set(std::string_view text, const ProbabilityStructure& m);

// Canonical text: parse(serialize(m)) == m and serialize is idempotent
// through parse.
std::string serialize(const ProbabilityStructure& m);

}  // namespace doxa::dsl
