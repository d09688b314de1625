// Focus-space stack maintained in lockstep with the discourse tree.
// Kept as a verification dual: the stack read bottom-to-top must equal
// the tree's right frontier read root-to-leaf after every operation.

#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "deixis/core.hpp"
#include "deixis/tree.hpp"

namespace deixis {

class FocusStack {
 public:
  FocusStack() = default;

  static FocusStack mirror_init(NodeId leaf) {
    FocusStack stack;
    stack.elems_.push_back(std::move(leaf));
    return stack;
  }

  // Pop until `target` is on top, then push the new leaf.
  void mirror_attach(const NodeId& target, NodeId leaf) {
    pop_to(target);
    elems_.push_back(std::move(leaf));
  }

  // Pop through `target` (target included), then push the new parent
  // and the new leaf. Pushing the parent is what keeps the stack equal
  // to the post-adjoin right frontier.
  void mirror_adjoin(const NodeId& target, NodeId parent, NodeId leaf) {
    pop_to(target);
    elems_.pop_back();
    elems_.push_back(std::move(parent));
    elems_.push_back(std::move(leaf));
  }

  bool contains(const NodeId& id) const {
    return std::find(elems_.begin(), elems_.end(), id) != elems_.end();
  }

  // Bottom first.
  const std::vector<NodeId>& elements() const { return elems_; }

  std::size_t size() const { return elems_.size(); }

 private:
  void pop_to(const NodeId& target) {
    if (!contains(target))
      throw OpError(OpError::Kind::TargetNotInStack,
                    "'" + target + "' is not in the focus stack");
    while (elems_.back() != target) elems_.pop_back();
  }

  std::vector<NodeId> elems_;
};

// True iff the stack bottom-to-top equals the right frontier
// root-to-leaf.
inline bool equivalent(const FocusStack& stack, const DiscourseTree& tree) {
  if (!tree.initialized()) return stack.size() == 0;
  return stack.elements() == tree.right_frontier();
}

}  // namespace deixis
