//
// Copyright 2026 The Synaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef SYNAUG_TREEBANK_H_
#define SYNAUG_TREEBANK_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace synaug {

// A Penn-Treebank-style constituency tree. Internal nodes carry a label and
// at least one child; leaves carry a label (the POS tag) and a token.
// Values are immutable by convention once built and safe to share across
// threads.
struct ConstituencyTree {
  std::string label;
  std::string token;  // non-empty iff leaf
  std::vector<ConstituencyTree> children;

  bool IsLeaf() const { return children.empty(); }
  bool operator==(const ConstituencyTree&) const = default;
};

enum class ParseErrorKind {
  kEmptyInput,
  kUnbalancedParens,
  kEmptyLabel,
  kEmptyNode,          // "(NP)" — neither children nor a token
  kUnexpectedContent,  // stray tokens outside or inside a node body
};

// Offsets are 1-based byte positions; end-of-input faults report one past
// the last byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t offset, const std::string& what);

  ParseErrorKind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  ParseErrorKind kind_;
  std::size_t offset_;
};

// Parses a bracketed constituency parse with a single root. A label-less
// outer wrapper "( ... )" around exactly one node, as found in MNLI parse
// columns, is collapsed into that node. Tokens containing parentheses are
// expected to be pre-escaped as -LRB-/-RRB-; no unescaping happens here.
ConstituencyTree ParseBracketed(std::string_view text);

// Left-to-right sequence of leaf tokens.
std::vector<std::string> YieldTokens(const ConstituencyTree& tree);
void AppendYield(const ConstituencyTree& tree, std::vector<std::string>* out);

std::size_t LeafCount(const ConstituencyTree& tree);

// Single-space-separated bracketed form; ParseBracketed(Serialize(t)) == t.
std::string Serialize(const ConstituencyTree& tree);

// Collapses every whitespace run to one space and trims the ends.
std::string NormalizeWhitespace(std::string_view text);

// Convenience constructors used by tests and the synthetic corpus builder.
ConstituencyTree Leaf(std::string tag, std::string token);
ConstituencyTree Node(std::string label, std::vector<ConstituencyTree> children);

}  // namespace synaug

#endif  // SYNAUG_TREEBANK_H_
