// The discourse segment tree. Grows strictly at its right frontier via
// two operations: attach (new rightmost daughter, +1 node) and adjoin
// (new parent over a frontier node with the new leaf as right sibling,
// +2 nodes). Nodes that leave the frontier are kept but marked inactive;
// the structure below them never changes again.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deixis/core.hpp"

namespace deixis {

struct SegmentNode {
  NodeId id;
  std::vector<NodeId> children;  // insertion order, left to right
  std::optional<Clause> clause;  // present for nodes that began as clause leaves
  std::optional<std::vector<ConveyedContent>> conveys_override;
  bool active = true;  // true iff the node is on the right frontier

  bool is_leaf() const { return children.empty(); }
};

// The operation descriptor a script step carries.
struct TreeOp {
  enum class Kind { Init, Attach, Adjoin };
  Kind kind = Kind::Init;
  NodeId target;                 // attach/adjoin only
  std::optional<NodeId> label;   // adjoin: explicit parent label
  std::optional<std::vector<ConveyedContent>> conveys_override;  // adjoin
};

class DiscourseTree {
 public:
  struct Adjoined {
    NodeId parent;
    NodeId leaf;
  };

  DiscourseTree() = default;

  static DiscourseTree init(Clause first) {
    DiscourseTree tree;
    tree.root_ = first.id;
    SegmentNode node;
    node.id = first.id;
    node.clause = std::move(first);
    tree.nodes_.emplace(node.id, std::move(node));
    tree.op_count_ = 1;
    return tree;
  }

  bool initialized() const { return !root_.empty(); }

  // Appends the clause as a new rightmost daughter of `target`, which
  // must be on the right frontier. Attaching to a frontier leaf is
  // permitted: the leaf keeps its clause and becomes a non-terminal.
  NodeId attach(const NodeId& target, Clause clause) {
    require_initialized();
    SegmentNode& parent = require_frontier(target);
    require_fresh(clause.id);

    deactivate_chain_below(target);

    NodeId leaf_id = clause.id;
    SegmentNode leaf;
    leaf.id = leaf_id;
    leaf.clause = std::move(clause);
    nodes_.emplace(leaf_id, std::move(leaf));
    parent_.emplace(leaf_id, target);
    parent.children.push_back(leaf_id);
    ++op_count_;
    return leaf_id;
  }

  // Inserts a new parent in `target`'s position with children
  // [target, new leaf]. The target (and everything below it) leaves the
  // right frontier for good.
  Adjoined adjoin(const NodeId& target, Clause clause,
                  std::optional<NodeId> label = std::nullopt,
                  std::optional<std::vector<ConveyedContent>> conveys_override =
                      std::nullopt) {
    require_initialized();
    require_frontier(target);
    require_fresh(clause.id);

    NodeId parent_id;
    if (label) {
      if (nodes_.contains(*label) || *label == clause.id)
        throw OpError(OpError::Kind::DuplicateLabel,
                      "adjoin label '" + *label + "' already names a node");
      parent_id = *label;
    } else {
      parent_id = fresh_label(clause.id);
    }

    deactivate_chain_below(target);
    nodes_.at(target).active = false;

    SegmentNode parent;
    parent.id = parent_id;
    parent.children = {target};
    parent.conveys_override = std::move(conveys_override);

    // Splice the parent into target's slot.
    if (target == root_) {
      root_ = parent_id;
    } else {
      const NodeId& grandparent = parent_.at(target);
      auto& siblings = nodes_.at(grandparent).children;
      for (auto& child : siblings)
        if (child == target) child = parent_id;
      parent_.emplace(parent_id, grandparent);
    }
    parent_[target] = parent_id;

    NodeId leaf_id = clause.id;
    SegmentNode leaf;
    leaf.id = leaf_id;
    leaf.clause = std::move(clause);

    parent.children.push_back(leaf_id);
    nodes_.emplace(parent_id, std::move(parent));
    nodes_.emplace(leaf_id, std::move(leaf));
    parent_.emplace(leaf_id, parent_id);
    ++op_count_;
    return {parent_id, leaf_id};
  }

  // Root-to-leaf path through rightmost daughters.
  std::vector<NodeId> right_frontier() const {
    require_initialized();
    std::vector<NodeId> path;
    NodeId cur = root_;
    path.push_back(cur);
    while (!nodes_.at(cur).children.empty()) {
      cur = nodes_.at(cur).children.back();
      path.push_back(cur);
    }
    return path;
  }

  // Left-to-right clause ids under `id` (a node's own clause precedes
  // its children's).
  std::vector<ClauseId> span(const NodeId& id) const {
    const SegmentNode& node = require_node(id);
    std::vector<ClauseId> out;
    collect_span(node, out);
    return out;
  }

  // Effective conveyed content: the adjoin-time override when present,
  // otherwise the deduplicated union of the node's own clause content
  // and its children's effective content.
  std::vector<ConveyedContent> conveys_of(const NodeId& id) const {
    const SegmentNode& node = require_node(id);
    std::vector<ConveyedContent> out;
    collect_conveys(node, out);
    return out;
  }

  const SegmentNode& at(const NodeId& id) const { return require_node(id); }

  bool contains(const NodeId& id) const { return nodes_.contains(id); }

  bool on_frontier(const NodeId& id) const { return require_node(id).active; }

  const NodeId& root() const {
    require_initialized();
    return root_;
  }

  std::size_t node_count() const { return nodes_.size(); }

  int op_count() const { return op_count_; }

  int depth(const NodeId& id) const {
    require_node(id);
    int d = 0;
    NodeId cur = id;
    while (cur != root_) {
      cur = parent_.at(cur);
      ++d;
    }
    return d;
  }

  std::optional<NodeId> parent_of(const NodeId& id) const {
    require_node(id);
    if (id == root_) return std::nullopt;
    return parent_.at(id);
  }

  std::vector<NodeId> preorder() const {
    require_initialized();
    std::vector<NodeId> out;
    out.reserve(nodes_.size());
    collect_preorder(root_, out);
    return out;
  }

  // The leaf (or grown node) created for a clause, if any.
  std::optional<NodeId> node_for_clause(const ClauseId& clause) const {
    if (auto it = nodes_.find(clause);
        it != nodes_.end() && it->second.clause.has_value())
      return it->first;
    return std::nullopt;
  }

 private:
  void require_initialized() const {
    if (!initialized())
      throw OpError(OpError::Kind::Uninitialized, "tree not initialized");
  }

  const SegmentNode& require_node(const NodeId& id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end())
      throw OpError(OpError::Kind::UnknownNode, "unknown node '" + id + "'");
    return it->second;
  }

  SegmentNode& require_frontier(const NodeId& id) {
    auto it = nodes_.find(id);
    if (it == nodes_.end())
      throw OpError(OpError::Kind::UnknownTarget,
                    "unknown target '" + id + "'");
    if (!it->second.active)
      throw OpError(OpError::Kind::TargetOffFrontier,
                    "target '" + id + "' is not on the right frontier");
    return it->second;
  }

  void require_fresh(const NodeId& id) const {
    if (nodes_.contains(id))
      throw OpError(OpError::Kind::DuplicateNodeId,
                    "clause id '" + id + "' already names a node");
  }

  // Frontier nodes strictly below `target` leave the frontier.
  void deactivate_chain_below(const NodeId& target) {
    NodeId cur = target;
    while (!nodes_.at(cur).children.empty()) {
      cur = nodes_.at(cur).children.back();
      nodes_.at(cur).active = false;
    }
  }

  NodeId fresh_label(const NodeId& pending_clause) {
    NodeId label;
    do {
      label = "g" + std::to_string(++generated_);
    } while (nodes_.contains(label) || label == pending_clause);
    return label;
  }

  void collect_span(const SegmentNode& node, std::vector<ClauseId>& out) const {
    if (node.clause) out.push_back(node.clause->id);
    for (const NodeId& child : node.children)
      collect_span(nodes_.at(child), out);
  }

  void collect_conveys(const SegmentNode& node,
                       std::vector<ConveyedContent>& out) const {
    if (node.conveys_override) {
      for (const ConveyedContent& item : *node.conveys_override)
        push_unique(item, out);
      return;
    }
    if (node.clause)
      for (const ConveyedContent& item : node.clause->conveys)
        push_unique(item, out);
    for (const NodeId& child : node.children)
      collect_conveys(nodes_.at(child), out);
  }

  static void push_unique(const ConveyedContent& item,
                          std::vector<ConveyedContent>& out) {
    for (const ConveyedContent& seen : out)
      if (seen == item) return;
    out.push_back(item);
  }

  void collect_preorder(const NodeId& id, std::vector<NodeId>& out) const {
    out.push_back(id);
    for (const NodeId& child : nodes_.at(id).children)
      collect_preorder(child, out);
  }

  std::map<NodeId, SegmentNode> nodes_;
  std::map<NodeId, NodeId> parent_;
  NodeId root_;
  int op_count_ = 0;
  int generated_ = 0;
};

}  // namespace deixis
