#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vffkit {

// Penn-Treebank-style constituency node. A node is either a leaf carrying a
// surface token (possibly multi-word, e.g. "(NP a cake)") or an interior
// node with ordered children; never both.
struct TreeNode {
  std::string label;
  std::vector<TreeNode> children;
  std::optional<std::string> token;

  bool is_leaf() const { return token.has_value(); }

  static TreeNode leaf(std::string label, std::string token);
  static TreeNode node(std::string label, std::vector<TreeNode> children);

  bool operator==(const TreeNode&) const = default;
};

struct ParsedSentence {
  long sentence_id = 0;
  TreeNode tree;
  std::string source;  // berkeley | stanford | other
};

// Parses one bracketed tree. Errors (unbalanced brackets, empty labels,
// trailing garbage, mixed token/subtree children) carry the byte position.
TreeNode parse_tree(const std::string& text);

// Canonical single-line form: "(LABEL child child)" with single spaces.
std::string serialize_tree(const TreeNode& tree);

// Left-to-right concatenation of leaf tokens.
std::vector<std::string> tree_yield(const TreeNode& tree);

// Strips functional tag suffixes and numeric indices ("NP-SBJ-1" -> "NP",
// "S=2" -> "S"). Labels that are pure punctuation (incl. -LRB-/-RRB-) are
// left untouched.
std::string strip_label_annotations(const std::string& label);
TreeNode strip_function_tags(TreeNode tree);

// True for labels made of punctuation only (",", ".", "``", "-LRB-", ...).
bool is_punctuation_label(const std::string& label);

// trees file: JSON-lines of {sentence_id, source, tree}. Trees are parsed
// and functional tags stripped at load time.
std::vector<ParsedSentence> load_parsed_sentences(const std::string& path);
void store_parsed_sentences(const std::vector<ParsedSentence>& trees,
                            const std::string& path);

}  // namespace vffkit
