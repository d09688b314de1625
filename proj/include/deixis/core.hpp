// Shared domain types: identifiers, referent sorts, conveyed content,
// and the error hierarchy used across the library.

#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace deixis {

// Clause identifiers name minimal segments ("c1", "c2", ...). Node
// identifiers share the namespace: leaves are named by their clause,
// generated parents are labelled "g1", "g2", ... in creation order.
using ClauseId = std::string;
using NodeId = std::string;

// The ontological category of a referent. Closed inventory: scripts and
// queries may only use these tags.
enum class Sort {
  EventToken,
  EventType,
  ActionType,
  Process,
  PropositionToken,
  PropositionType,
  Fact,
  Description,
  SpeechAct,
  Situation,
};

namespace detail {
inline constexpr std::array<std::pair<Sort, std::string_view>, 10> kSortTags{{
    {Sort::EventToken, "event-token"},
    {Sort::EventType, "event-type"},
    {Sort::ActionType, "action-type"},
    {Sort::Process, "process"},
    {Sort::PropositionToken, "proposition-token"},
    {Sort::PropositionType, "proposition-type"},
    {Sort::Fact, "fact"},
    {Sort::Description, "description"},
    {Sort::SpeechAct, "speech-act"},
    {Sort::Situation, "situation"},
}};
}  // namespace detail

inline std::string_view to_string(Sort s) {
  for (const auto& [sort, tag] : detail::kSortTags)
    if (sort == s) return tag;
  return "unknown";
}

inline std::optional<Sort> sort_from_string(std::string_view tag) {
  for (const auto& [sort, name] : detail::kSortTags)
    if (name == tag) return sort;
  return std::nullopt;
}

inline std::vector<Sort> all_sorts() {
  std::vector<Sort> out;
  out.reserve(detail::kSortTags.size());
  for (const auto& [sort, tag] : detail::kSortTags) out.push_back(sort);
  return out;
}

// One reading a segment conveys: a sorted, human-readable paraphrase.
// A single clause may carry several of these, which is what licenses
// distinct referents for the same demonstratum.
struct ConveyedContent {
  Sort sort{};
  std::string gloss;

  friend bool operator==(const ConveyedContent&,
                         const ConveyedContent&) = default;
};

// A minimal discourse segment: one clause of text plus what it conveys.
struct Clause {
  ClauseId id;
  std::string text;
  std::vector<ConveyedContent> conveys;

  friend bool operator==(const Clause&, const Clause&) = default;
};

// Raised by tree, stack, resolver and treelab operations whose
// preconditions fail. Maps to CLI exit status 3.
class OpError : public std::runtime_error {
 public:
  enum class Kind {
    UnknownTarget,
    TargetOffFrontier,
    TargetNotInStack,
    UnknownNode,
    UnknownClause,
    DuplicateNodeId,
    DuplicateLabel,
    InitOnNonEmpty,
    Uninitialized,
    Inapplicable,
    DuplicateValue,
  };

  OpError(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Raised while parsing or validating a script document. Maps to CLI
// exit status 2.
class ScriptError : public std::runtime_error {
 public:
  enum class Kind {
    Syntax,
    UnknownSort,
    DanglingTarget,
    DuplicateClauseId,
  };

  ScriptError(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

namespace detail {

inline std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

// Case-insensitive "does gloss mention every keyword" check, used both
// by query content filters and by gold matching.
inline bool contains_keyword(std::string_view gloss, std::string_view keyword) {
  if (keyword.empty()) return true;
  return lowercase(gloss).find(lowercase(keyword)) != std::string::npos;
}

inline bool contains_all_keywords(std::string_view gloss,
                                  const std::vector<std::string>& keywords) {
  return std::all_of(keywords.begin(), keywords.end(), [&](const auto& kw) {
    return contains_keyword(gloss, kw);
  });
}

}  // namespace detail

}  // namespace deixis
