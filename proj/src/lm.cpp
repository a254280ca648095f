#include "piirec/lm.hpp"

#include <cmath>

#include "piirec/errors.hpp"

namespace piirec {

size_t first_token_at_or_after(const TokenScoreSeq& seq, size_t char_pos) {
  if (char_pos > seq.text.size()) {
    throw OutOfRangeError("char_pos " + std::to_string(char_pos) + " beyond text length " +
                          std::to_string(seq.text.size()));
  }
  for (size_t i = 0; i < seq.tokens.size(); ++i) {
    if (seq.tokens[i].end > char_pos) return i;
  }
  return seq.tokens.size();
}

bool token_spans_cover_text(const TokenScoreSeq& seq) {
  size_t pos = 0;
  for (const auto& tok : seq.tokens) {
    if (tok.begin != pos || tok.end <= tok.begin) return false;
    if (!std::isfinite(tok.logprob)) return false;
    pos = tok.end;
  }
  return pos == seq.text.size();
}

}  // namespace piirec
