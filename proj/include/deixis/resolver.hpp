// Deictic pronoun resolution. A pronoun used deictically points at a
// segment proxy (the discourse entity standing in for a segment's
// propositional content), not at the referent itself. Only segments on
// the current right frontier supply proxies, unless the pronoun is
// stressed. Referring functions map proxies to sorted referents; the
// query's required sort and optional content keywords narrow the field,
// and the survivors are ranked leaf-most first. A non-empty resolution
// accommodates its top referent as a fresh discourse entity.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deixis/core.hpp"
#include "deixis/tree.hpp"

namespace deixis {

// What a deictic pronoun can point at.
struct SegmentProxy {
  NodeId node;
  std::vector<ClauseId> span;
  std::vector<ConveyedContent> content;
  // Derived placement data carried along for ranking.
  bool on_frontier = true;
  int depth = 0;
};

// Named mapping from proxy content to a referent of a fixed sort.
// Universal functions apply to every proxy (any segment has a speech
// act, an assertion and a description associated with it); extractors
// apply only when the proxy's content carries their sort.
struct ReferringFunction {
  std::string name;
  Sort output_sort{};
  bool universal = false;

  bool applicable(const SegmentProxy& proxy) const {
    if (universal) return true;
    return std::any_of(proxy.content.begin(), proxy.content.end(),
                       [&](const ConveyedContent& c) {
                         return c.sort == output_sort;
                       });
  }
};

inline const std::vector<ReferringFunction>& registry_default() {
  static const std::vector<ReferringFunction> registry = {
      {"event-of", Sort::EventToken, false},
      {"action-of", Sort::ActionType, false},
      {"process-of", Sort::Process, false},
      {"fact-of", Sort::Fact, false},
      {"situation-of", Sort::Situation, false},
      {"type-of-event", Sort::EventType, false},
      {"type-of-proposition", Sort::PropositionType, false},
      {"speech-act-of", Sort::SpeechAct, true},
      {"assertion-of", Sort::PropositionToken, true},
      {"description-of", Sort::Description, true},
  };
  return registry;
}

namespace detail {

inline std::string span_text(const std::vector<ClauseId>& span) {
  if (span.empty()) return "";
  if (span.size() == 1) return span.front();
  return span.front() + "-" + span.back();
}

inline std::string synthesized_gloss(const ReferringFunction& fn,
                                     const SegmentProxy& proxy) {
  std::string kind = fn.name;
  if (fn.name == "speech-act-of") kind = "speech act of ";
  else if (fn.name == "assertion-of") kind = "assertion of ";
  else if (fn.name == "description-of") kind = "description of ";
  else kind = fn.name + " ";
  return kind + span_text(proxy.span);
}

// First content entry of the function's sort that mentions every
// keyword; universal functions fall back to a synthesized gloss.
inline std::optional<std::string> select_gloss(
    const ReferringFunction& fn, const SegmentProxy& proxy,
    const std::vector<std::string>& keywords) {
  for (const ConveyedContent& item : proxy.content)
    if (item.sort == fn.output_sort &&
        contains_all_keywords(item.gloss, keywords))
      return item.gloss;
  if (fn.universal) {
    std::string gloss = synthesized_gloss(fn, proxy);
    if (contains_all_keywords(gloss, keywords)) return gloss;
  }
  return std::nullopt;
}

}  // namespace detail

// Proxies a deictic pronoun may point at right now: right-frontier
// segments leaf-most first; under stress every segment, frontier first.
inline std::vector<SegmentProxy> candidate_demonstrata(
    const DiscourseTree& tree, bool stressed) {
  std::vector<SegmentProxy> out;
  auto make_proxy = [&](const NodeId& id, bool frontier) {
    SegmentProxy proxy;
    proxy.node = id;
    proxy.span = tree.span(id);
    proxy.content = tree.conveys_of(id);
    proxy.on_frontier = frontier;
    proxy.depth = tree.depth(id);
    return proxy;
  };
  std::vector<NodeId> frontier = tree.right_frontier();
  for (auto it = frontier.rbegin(); it != frontier.rend(); ++it)
    out.push_back(make_proxy(*it, true));
  if (stressed) {
    for (const NodeId& id : tree.preorder())
      if (!tree.on_frontier(id)) out.push_back(make_proxy(id, false));
  }
  return out;
}

// Referent produced by one referring function on one proxy.
inline std::pair<std::string, Sort> apply(const ReferringFunction& fn,
                                          const SegmentProxy& proxy) {
  if (!fn.applicable(proxy))
    throw OpError(OpError::Kind::Inapplicable,
                  fn.name + " does not apply to segment '" + proxy.node + "'");
  auto gloss = detail::select_gloss(fn, proxy, {});
  return {*gloss, fn.output_sort};
}

enum class Pronoun { This, That, It, Zero };

inline std::string_view to_string(Pronoun p) {
  switch (p) {
    case Pronoun::This: return "this";
    case Pronoun::That: return "that";
    case Pronoun::It: return "it";
    case Pronoun::Zero: return "zero";
  }
  return "that";
}

inline std::optional<Pronoun> pronoun_from_string(std::string_view name) {
  if (name == "this") return Pronoun::This;
  if (name == "that") return Pronoun::That;
  if (name == "it") return Pronoun::It;
  if (name == "zero") return Pronoun::Zero;
  return std::nullopt;
}

struct DeixisQuery {
  ClauseId after;  // resolution point: right after this clause's step
  Pronoun pronoun = Pronoun::That;
  bool stressed = false;
  Sort required_sort{};
  std::vector<std::string> content_filter;  // predication keywords
};

struct Candidate {
  SegmentProxy proxy;
  std::string function;
  std::string gloss;
  Sort sort{};
  bool universal_function = false;
};

struct DiscourseEntity {
  std::string id;
  Sort sort{};
  NodeId source_node;
  std::string source_function;
  std::string gloss;
};

// The evolving entity list. Clause ingestion and accommodation are the
// only ways entities enter the model.
class DiscourseModel {
 public:
  const std::vector<DiscourseEntity>& entities() const { return entities_; }

  void ingest_clause(const NodeId& leaf, const Clause& clause) {
    for (const ConveyedContent& item : clause.conveys)
      add(item.sort, leaf, "conveys", item.gloss);
  }

  DiscourseEntity accommodate(const Candidate& candidate) {
    return add(candidate.sort, candidate.proxy.node, candidate.function,
               candidate.gloss);
  }

 private:
  DiscourseEntity add(Sort sort, const NodeId& node, std::string function,
                      std::string gloss) {
    DiscourseEntity entity{"e" + std::to_string(++counter_), sort, node,
                           std::move(function), std::move(gloss)};
    entities_.push_back(entity);
    return entity;
  }

  std::vector<DiscourseEntity> entities_;
  int counter_ = 0;
};

inline DiscourseEntity accommodate(DiscourseModel& model,
                                   const Candidate& candidate) {
  return model.accommodate(candidate);
}

struct Resolution {
  std::vector<Candidate> candidates;  // ranked, best first
  std::optional<DiscourseEntity> accommodated;

  bool infelicitous() const { return candidates.empty(); }
};

// Stable order: frontier before stressed extras, deeper (leaf-most)
// node first, extractors before universal functions on the same node,
// then smaller span.
inline std::vector<Candidate> rank(std::vector<Candidate> candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     auto key = [](const Candidate& c) {
                       return std::tuple(c.proxy.on_frontier ? 0 : 1,
                                         -c.proxy.depth,
                                         c.universal_function ? 1 : 0,
                                         c.proxy.span.size());
                     };
                     return key(a) < key(b);
                   });
  return candidates;
}

// Full resolution of one query against the current tree state. Returns
// the ranked candidate list; an empty list signals infelicity, not an
// error. When `model` is given and the list is non-empty, the top
// referent is accommodated as a new discourse entity.
inline Resolution resolve(const DiscourseTree& tree,
                          const std::vector<ReferringFunction>& registry,
                          const DeixisQuery& query,
                          DiscourseModel* model = nullptr) {
  if (!query.after.empty() && !tree.node_for_clause(query.after))
    throw OpError(OpError::Kind::UnknownClause,
                  "query names unreplayed clause '" + query.after + "'");

  std::vector<Candidate> found;
  for (const SegmentProxy& proxy : candidate_demonstrata(tree, query.stressed))
    for (const ReferringFunction& fn : registry) {
      if (fn.output_sort != query.required_sort) continue;
      if (!fn.applicable(proxy) && !fn.universal) continue;
      auto gloss = detail::select_gloss(fn, proxy, query.content_filter);
      if (!gloss) continue;
      found.push_back({proxy, fn.name, *gloss, fn.output_sort});
    }

  Resolution result;
  result.candidates = rank(std::move(found));
  if (model && !result.candidates.empty())
    result.accommodated = model->accommodate(result.candidates.front());
  return result;
}

}  // namespace deixis
