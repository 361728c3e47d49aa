#pragma once

#include <string>
#include <vector>

namespace anspar {

// Lowercased, whitespace-free tokens as produced by preprocess_text().
using TokenSeq = std::vector<std::string>;

inline std::string join_tokens(const TokenSeq& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

/// Extracted answer tokens plus per-token provenance: either the attention
/// weight that kept the token or the POS template that matched it.
struct ParseResult {
  TokenSeq tokens;
  std::vector<double> weights;        // parallel to tokens when attention-derived
  std::vector<std::string> matched_template;  // POS tags when template-derived
  bool no_match = false;

  bool empty() const { return tokens.empty(); }
};

}  // namespace anspar
