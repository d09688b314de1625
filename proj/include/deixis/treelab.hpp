// Reference value trees for contrast with the discourse tree: a binary
// search tree and an AVL tree insert at the fringe (null child slots),
// never at the right frontier, and rotation can change an AVL root.
// Used by docs, the demo subcommand and property-test foils.

#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "deixis/core.hpp"

namespace deixis::treelab {

enum class Variant { Bst, Avl };

class ValueTree {
 public:
  explicit ValueTree(Variant variant = Variant::Bst) : variant_(variant) {}

  Variant variant() const { return variant_; }

  void insert(int value) {
    if (contains(value))
      throw OpError(OpError::Kind::DuplicateValue,
                    "value " + std::to_string(value) + " already present");
    root_ = variant_ == Variant::Avl ? insert_avl(std::move(root_), value)
                                     : insert_bst(std::move(root_), value);
    ++size_;
  }

  bool contains(int value) const {
    const Node* cur = root_.get();
    while (cur) {
      if (value == cur->value) return true;
      cur = value < cur->value ? cur->left.get() : cur->right.get();
    }
    return false;
  }

  std::size_t size() const { return size_; }

  std::optional<int> root_value() const {
    if (!root_) return std::nullopt;
    return root_->value;
  }

  // Height in nodes: empty tree 0, single node 1.
  int height() const { return node_height(root_.get()); }

  std::vector<int> inorder() const {
    std::vector<int> out;
    out.reserve(size_);
    collect_inorder(root_.get(), out);
    return out;
  }

  // left-height minus right-height for every node, preorder.
  std::vector<int> balance_factors() const {
    std::vector<int> out;
    collect_balance(root_.get(), out);
    return out;
  }

  struct FrontierFringe {
    std::vector<int> right_frontier;  // root-first path of rightmost daughters
    std::size_t fringe_slots = 0;     // null child positions open to insertion
  };

  FrontierFringe frontier_and_fringe() const {
    if (!root_) throw OpError(OpError::Kind::Uninitialized, "empty tree");
    FrontierFringe out;
    const Node* cur = root_.get();
    while (cur) {
      out.right_frontier.push_back(cur->value);
      cur = cur->right ? cur->right.get() : cur->left.get();
    }
    count_fringe(root_.get(), out.fringe_slots);
    return out;
  }

  std::string render_dot() const {
    std::ostringstream out;
    out << "digraph valuetree {\n";
    std::vector<int> frontier;
    if (root_) {
      const Node* cur = root_.get();
      while (cur) {
        frontier.push_back(cur->value);
        cur = cur->right ? cur->right.get() : cur->left.get();
      }
    }
    render_nodes(root_.get(), frontier, out);
    render_edges(root_.get(), out);
    out << "}\n";
    return out.str();
  }

 private:
  struct Node {
    int value;
    int height = 1;  // memoized; tests recompute independently
    std::unique_ptr<Node> left;
    std::unique_ptr<Node> right;

    explicit Node(int v) : value(v) {}
  };
  using NodePtr = std::unique_ptr<Node>;

  static int node_height(const Node* node) { return node ? node->height : 0; }

  static void update_height(Node& node) {
    node.height =
        1 + std::max(node_height(node.left.get()), node_height(node.right.get()));
  }

  static int balance_of(const Node& node) {
    return node_height(node.left.get()) - node_height(node.right.get());
  }

  static NodePtr insert_bst(NodePtr node, int value) {
    if (!node) return std::make_unique<Node>(value);
    if (value < node->value)
      node->left = insert_bst(std::move(node->left), value);
    else
      node->right = insert_bst(std::move(node->right), value);
    update_height(*node);
    return node;
  }

  static NodePtr rotate_right(NodePtr node) {
    NodePtr pivot = std::move(node->left);
    node->left = std::move(pivot->right);
    update_height(*node);
    pivot->right = std::move(node);
    update_height(*pivot);
    return pivot;
  }

  static NodePtr rotate_left(NodePtr node) {
    NodePtr pivot = std::move(node->right);
    node->right = std::move(pivot->left);
    update_height(*node);
    pivot->left = std::move(node);
    update_height(*pivot);
    return pivot;
  }

  static NodePtr rebalance(NodePtr node) {
    update_height(*node);
    int balance = balance_of(*node);
    if (balance > 1) {
      if (balance_of(*node->left) < 0)
        node->left = rotate_left(std::move(node->left));
      return rotate_right(std::move(node));
    }
    if (balance < -1) {
      if (balance_of(*node->right) > 0)
        node->right = rotate_right(std::move(node->right));
      return rotate_left(std::move(node));
    }
    return node;
  }

  static NodePtr insert_avl(NodePtr node, int value) {
    if (!node) return std::make_unique<Node>(value);
    if (value < node->value)
      node->left = insert_avl(std::move(node->left), value);
    else
      node->right = insert_avl(std::move(node->right), value);
    return rebalance(std::move(node));
  }

  static void collect_inorder(const Node* node, std::vector<int>& out) {
    if (!node) return;
    collect_inorder(node->left.get(), out);
    out.push_back(node->value);
    collect_inorder(node->right.get(), out);
  }

  static void collect_balance(const Node* node, std::vector<int>& out) {
    if (!node) return;
    out.push_back(balance_of(*node));
    collect_balance(node->left.get(), out);
    collect_balance(node->right.get(), out);
  }

  static void count_fringe(const Node* node, std::size_t& slots) {
    if (!node) return;
    if (!node->left) ++slots;
    if (!node->right) ++slots;
    count_fringe(node->left.get(), slots);
    count_fringe(node->right.get(), slots);
  }

  static void render_nodes(const Node* node, const std::vector<int>& frontier,
                           std::ostringstream& out) {
    if (!node) return;
    out << "  \"" << node->value << "\"";
    for (int v : frontier)
      if (v == node->value) {
        out << " [peripheries=2]";
        break;
      }
    out << ";\n";
    render_nodes(node->left.get(), frontier, out);
    render_nodes(node->right.get(), frontier, out);
  }

  static void render_edges(const Node* node, std::ostringstream& out) {
    if (!node) return;
    if (node->left)
      out << "  \"" << node->value << "\" -> \"" << node->left->value
          << "\" [label=\"L\"];\n";
    if (node->right)
      out << "  \"" << node->value << "\" -> \"" << node->right->value
          << "\" [label=\"R\"];\n";
    render_edges(node->left.get(), out);
    render_edges(node->right.get(), out);
  }

  NodePtr root_;
  Variant variant_;
  std::size_t size_ = 0;
};

}  // namespace deixis::treelab
