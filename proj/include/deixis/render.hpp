// Deterministic text renderings of a discourse tree. Right-frontier
// nodes are marked: trailing `*` in ascii, doubled border in dot.

#pragma once

#include <sstream>
#include <string>

#include "deixis/tree.hpp"

namespace deixis {

enum class RenderFormat { Ascii, Dot };

inline std::optional<RenderFormat> render_format_from_string(
    std::string_view name) {
  if (name == "ascii") return RenderFormat::Ascii;
  if (name == "dot") return RenderFormat::Dot;
  return std::nullopt;
}

namespace detail {

inline void render_ascii_node(const DiscourseTree& tree, const NodeId& id,
                              int indent, std::ostringstream& out) {
  const SegmentNode& node = tree.at(id);
  out << std::string(static_cast<std::size_t>(indent) * 2, ' ') << id;
  if (node.active) out << " *";
  out << '\n';
  for (const NodeId& child : node.children)
    render_ascii_node(tree, child, indent + 1, out);
}

inline std::string dot_quote(const std::string& id) {
  std::string quoted = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace detail

inline std::string render_ascii(const DiscourseTree& tree) {
  std::ostringstream out;
  detail::render_ascii_node(tree, tree.root(), 0, out);
  return out.str();
}

inline std::string render_dot(const DiscourseTree& tree) {
  std::ostringstream out;
  out << "digraph discourse {\n";
  const auto order = tree.preorder();
  for (const NodeId& id : order) {
    out << "  " << detail::dot_quote(id);
    if (tree.at(id).active) out << " [peripheries=2]";
    out << ";\n";
  }
  for (const NodeId& id : order)
    for (const NodeId& child : tree.at(id).children)
      out << "  " << detail::dot_quote(id) << " -> " << detail::dot_quote(child)
          << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string render(const DiscourseTree& tree, RenderFormat format) {
  return format == RenderFormat::Ascii ? render_ascii(tree) : render_dot(tree);
}

}  // namespace deixis
