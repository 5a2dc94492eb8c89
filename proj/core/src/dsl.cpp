#include "doxa/dsl.hpp"

#include <array>
#include <cctype>
#include <map>
#include <unordered_map>

namespace doxa::dsl {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Syntax: return "Syntax";
    case ParseErrorKind::UnknownState: return "UnknownState";
    case ParseErrorKind::DuplicateState: return "DuplicateState";
    case ParseErrorKind::BadRational: return "BadRational";
    case ParseErrorKind::MissingSection: return "MissingSection";
    case ParseErrorKind::SemanticInvalid: return "SemanticInvalid";
  }
  return "?";
}

namespace {

std::string format_message(ParseErrorKind kind, const SourceSpan& span, const std::string& message) {
  return std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + std::string(to_string(kind)) + ": " +
         message;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, SourceSpan span, std::string message, std::optional<ErrorCode> semantic)
    : std::runtime_error(format_message(kind, span, message)),
      kind_(kind),
      span_(span),
      message_(std::move(message)),
      semantic_(semantic) {}

namespace {

enum class TokenKind { Ident, Number, LBrace, RBrace, Equals, Header };

struct Token {
  TokenKind kind;
  std::string text;
  SourceSpan span;
};

constexpr std::array<std::string_view, 5> kSections = {"states", "prior", "question", "evidence", "threshold"};

bool is_section(std::string_view word) {
  for (auto s : kSections) {
    if (s == word) return true;
  }
  return false;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool number_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/'; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto span_at = [&](std::size_t len) { return SourceSpan{line, col, len}; };
  auto advance = [&](std::size_t len) {
    i += len;
    col += len;
  };

  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == '{' || c == '}' || c == '=') {
      tokens.push_back({c == '{' ? TokenKind::LBrace : c == '}' ? TokenKind::RBrace : TokenKind::Equals,
                        std::string(1, c), span_at(1)});
      advance(1);
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      if (j < text.size() && text[j] == ':' && is_section(word)) {
        tokens.push_back({TokenKind::Header, word, span_at(j - i + 1)});
        advance(j - i + 1);
      } else {
        tokens.push_back({TokenKind::Ident, word, span_at(j - i)});
        advance(j - i);
      }
      continue;
    }
    if (number_char(c) || c == '-' || c == '+') {
      std::size_t j = i + 1;
      while (j < text.size() && number_char(text[j])) ++j;
      tokens.push_back({TokenKind::Number, std::string(text.substr(i, j - i)), span_at(j - i)});
      advance(j - i);
      continue;
    }
    throw ParseError(ParseErrorKind::Syntax, span_at(1), std::string("unexpected character '") + c + "'");
  }
  return tokens;
}

struct Section {
  Token header;
  std::vector<Token> body;
};

// Spans of the parsed pieces, used to place semantic diagnostics.
struct Layout {
  std::map<std::string, Section, std::less<>> sections;
};

Layout split_sections(const std::vector<Token>& tokens) {
  Layout layout;
  Section* current = nullptr;
  for (const auto& t : tokens) {
    if (t.kind == TokenKind::Header) {
      auto [it, inserted] = layout.sections.emplace(t.text, Section{t, {}});
      if (!inserted) throw ParseError(ParseErrorKind::Syntax, t.span, "section '" + t.text + "' appears twice");
      current = &it->second;
      continue;
    }
    if (current == nullptr) throw ParseError(ParseErrorKind::Syntax, t.span, "expected a section header");
    current->body.push_back(t);
  }
  return layout;
}

// Position of the last visible character, or 1:1 for blank input.
SourceSpan end_span(std::string_view text) {
  SourceSpan last{1, 1, 0};
  std::size_t line = 1;
  std::size_t col = 1;
  for (char c : text) {
    if (c == '\n') {
      ++line;
      col = 1;
      continue;
    }
    if (c != '\r' && c != ' ' && c != '\t') last = SourceSpan{line, col, 1};
    ++col;
  }
  return last;
}

const Section& require(const Layout& layout, std::string_view name, std::string_view text) {
  const auto it = layout.sections.find(name);
  if (it == layout.sections.end()) {
    throw ParseError(ParseErrorKind::MissingSection, end_span(text), "missing section '" + std::string(name) + ":'");
  }
  return it->second;
}

Rational parse_number(const Token& t) {
  if (t.kind != TokenKind::Number) {
    throw ParseError(ParseErrorKind::Syntax, t.span, "expected a rational number, found '" + t.text + "'");
  }
  try {
    return parse_rational(t.text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseErrorKind::BadRational, t.span, e.what());
  }
}

class NameTable {
 public:
  explicit NameTable(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) index_.emplace(names[i], i);
  }
  std::size_t lookup(const Token& t) const {
    const auto it = index_.find(t.text);
    if (it == index_.end()) throw ParseError(ParseErrorKind::UnknownState, t.span, "unknown state '" + t.text + "'");
    return it->second;
  }
  std::size_t size() const { return index_.size(); }

 private:
  std::unordered_map<std::string, std::size_t> index_;
};

std::vector<std::vector<std::size_t>> parse_sets(const Section& section, const NameTable& names, bool allow_full) {
  std::vector<std::vector<std::size_t>> sets;
  const auto& body = section.body;
  std::size_t i = 0;
  auto full = [&] {
    std::vector<std::size_t> all;
    for (std::size_t s = 0; s < names.size(); ++s) all.push_back(s);
    return all;
  };
  while (i < body.size()) {
    const auto& t = body[i];
    if (allow_full && t.kind == TokenKind::Ident && t.text == "S") {
      sets.push_back(full());
      ++i;
      continue;
    }
    if (t.kind != TokenKind::LBrace) throw ParseError(ParseErrorKind::Syntax, t.span, "expected '{', found '" + t.text + "'");
    ++i;
    std::vector<std::size_t> members;
    std::vector<bool> seen(names.size(), false);
    while (true) {
      if (i >= body.size()) throw ParseError(ParseErrorKind::Syntax, t.span, "unterminated '{'");
      const auto& m = body[i];
      if (m.kind == TokenKind::RBrace) {
        ++i;
        break;
      }
      if (m.kind != TokenKind::Ident) {
        throw ParseError(ParseErrorKind::Syntax, m.span, "expected a state name, found '" + m.text + "'");
      }
      if (allow_full && m.text == "S") {
        for (std::size_t s = 0; s < names.size(); ++s) {
          if (!seen[s]) members.push_back(s);
          seen[s] = true;
        }
      } else {
        const auto s = names.lookup(m);
        if (seen[s]) throw ParseError(ParseErrorKind::DuplicateState, m.span, "state '" + m.text + "' listed twice in one set");
        seen[s] = true;
        members.push_back(s);
      }
      ++i;
    }
    sets.push_back(std::move(members));
  }
  if (sets.empty()) throw ParseError(ParseErrorKind::Syntax, section.header.span, "section needs at least one set");
  return sets;
}

std::vector<std::string> parse_states(const Section& section) {
  std::vector<std::string> states;
  std::unordered_map<std::string, bool> seen;
  for (const auto& t : section.body) {
    if (t.kind != TokenKind::Ident) throw ParseError(ParseErrorKind::Syntax, t.span, "expected a state name, found '" + t.text + "'");
    if (t.text == "S") throw ParseError(ParseErrorKind::Syntax, t.span, "'S' is reserved for the full state set");
    if (!seen.emplace(t.text, true).second) {
      throw ParseError(ParseErrorKind::DuplicateState, t.span, "state '" + t.text + "' declared twice");
    }
    states.push_back(t.text);
  }
  if (states.empty()) {
    throw ParseError(ParseErrorKind::SemanticInvalid, section.header.span, "a structure needs at least one state",
                     ErrorCode::EmptyStateSet);
  }
  return states;
}

std::vector<Rational> parse_prior(const Section& section, const NameTable& names) {
  const auto& body = section.body;
  const std::size_t n = names.size();
  if (body.size() == 1 && body[0].kind == TokenKind::Ident && body[0].text == "uniform") {
    return std::vector<Rational>(n, Rational(1, static_cast<unsigned long>(n)));
  }
  std::vector<std::optional<Rational>> weights(n);
  std::size_t i = 0;
  while (i < body.size()) {
    const auto& name = body[i];
    if (name.kind != TokenKind::Ident) throw ParseError(ParseErrorKind::Syntax, name.span, "expected 'name=weight', found '" + name.text + "'");
    if (i + 1 >= body.size() || body[i + 1].kind != TokenKind::Equals) {
      throw ParseError(ParseErrorKind::Syntax, name.span, "expected '=' after '" + name.text + "'");
    }
    if (i + 2 >= body.size()) throw ParseError(ParseErrorKind::Syntax, body[i + 1].span, "missing weight");
    const auto s = names.lookup(name);
    if (weights[s]) throw ParseError(ParseErrorKind::DuplicateState, name.span, "prior for '" + name.text + "' given twice");
    weights[s] = parse_number(body[i + 2]);
    i += 3;
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (!weights[s]) {
      throw ParseError(ParseErrorKind::Syntax, section.header.span, "prior is missing state #" + std::to_string(s + 1));
    }
    out.push_back(*weights[s]);
  }
  return out;
}

SourceSpan semantic_span(const Layout& layout, ErrorCode code) {
  std::string_view section = "states";
  switch (code) {
    case ErrorCode::NegativeWeight:
    case ErrorCode::ZeroTotalWeight: section = "prior"; break;
    case ErrorCode::NotAPartition: section = "question"; break;
    case ErrorCode::EmptyEvidenceSet:
    case ErrorCode::ZeroProbabilityEvidence:
    case ErrorCode::DuplicateEvidence: section = "evidence"; break;
    case ErrorCode::ThresholdOutOfRange: {
      const auto& s = layout.sections.at("threshold");
      return s.body.empty() ? s.header.span : s.body.front().span;
    }
    default: break;
  }
  return layout.sections.at(std::string(section)).header.span;
}

}  // namespace

ProbabilityStructure parse(std::string_view text) {
  const auto layout = split_sections(tokenize(text));
  for (auto name : kSections) require(layout, name, text);

  StructureSpec spec;
  spec.states = parse_states(layout.sections.at("states"));
  const NameTable names(spec.states);
  spec.weights = parse_prior(layout.sections.at("prior"), names);
  spec.cells = parse_sets(layout.sections.at("question"), names, false);
  spec.evidence = parse_sets(layout.sections.at("evidence"), names, true);

  const auto& threshold = layout.sections.at("threshold");
  if (threshold.body.size() != 1) {
    throw ParseError(ParseErrorKind::Syntax, threshold.body.size() > 1 ? threshold.body[1].span : threshold.header.span,
                     "threshold takes exactly one rational");
  }
  spec.threshold = parse_number(threshold.body.front());

  try {
    return validate_structure(std::move(spec));
  } catch (const Error& e) {
    throw ParseError(ParseErrorKind::SemanticInvalid, semantic_span(layout, e.code()), e.what(), e.code());
  }
}

Question parse_question(std::string_view text, const ProbabilityStructure& m) {
  const auto layout = split_sections(tokenize(text));
  const auto& section = require(layout, "question", text);
  for (const auto& [name, s] : layout.sections) {
    if (name != "question") throw ParseError(ParseErrorKind::Syntax, s.header.span, "only a question section is allowed here");
  }
  std::vector<std::string> state_names;
  for (const auto& s : m.states()) state_names.push_back(s.name);
  const NameTable names(state_names);
  std::vector<Proposition> cells;
  for (const auto& c : parse_sets(section, names, false)) {
    cells.push_back(Proposition::from_indices(m.state_count(), c));
  }
  try {
    return Question::from_cells(m.state_count(), std::move(cells));
  } catch (const Error& e) {
    throw ParseError(ParseErrorKind::SemanticInvalid, section.header.span, e.what(), e.code());
  }
}

Proposition parse_set(std::string_view text, const ProbabilityStructure& m) {
  auto tokens = tokenize(text);
  Section section{Token{TokenKind::Header, "set", SourceSpan{1, 1, 0}}, std::move(tokens)};
  std::vector<std::string> state_names;
  for (const auto& s : m.states()) state_names.push_back(s.name);
  const NameTable names(state_names);
  const auto sets = parse_sets(section, names, true);
  if (sets.size() != 1) throw ParseError(ParseErrorKind::Syntax, SourceSpan{1, 1, text.size()}, "expected exactly one set");
  return Proposition::from_indices(m.state_count(), sets.front());
}

namespace {

void append_set(std::string& out, const ProbabilityStructure& m, const Proposition& p) {
  out += "  {";
  p.for_each([&](std::size_t s) {
    out += ' ';
    out += m.state_name(s);
  });
  out += " }\n";
}

}  // namespace

std::string serialize(const ProbabilityStructure& m) {
  std::string out = "states:";
  for (const auto& s : m.states()) {
    out += ' ';
    out += s.name;
  }
  out += "\nprior:\n";
  for (std::size_t s = 0; s < m.state_count(); ++s) {
    out += "  " + m.state_name(s) + "=" + doxa::to_string(m.weights()[s]) + "\n";
  }
  out += "question:\n";
  for (const auto& c : m.question().cells()) append_set(out, m, c);
  out += "evidence:\n";
  const auto everything = m.universe();
  for (const auto& e : m.evidence()) {
    if (e == everything) {
      out += "  S\n";
    } else {
      append_set(out, m, e);
    }
  }
  out += "threshold: " + doxa::to_string(m.threshold()) + "\n";
  return out;
}

}  // namespace doxa::dsl
