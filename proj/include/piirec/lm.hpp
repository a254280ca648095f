#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "piirec/masked_text.hpp"

namespace piirec {

// Generation defaults: temperature 1.2, top-k 30, top-p 0.8.
struct SamplingParams {
  double temperature = 1.2;
  int top_k = 30;
  double top_p = 0.8;
  int max_new_tokens = 64;
  std::optional<uint64_t> seed;
};

struct ScoredToken {
  std::string text;    // exact input slice at [begin, end)
  double logprob = 0;  // finite, <= 0
  size_t begin = 0;
  size_t end = 0;
};

// Per-token log-probabilities with byte offsets. Spans are contiguous,
// non-overlapping and cover the scored string.
struct TokenScoreSeq {
  std::string text;
  std::vector<ScoredToken> tokens;

  size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

enum class BackendRole { kVictim, kReference };

// A language model reachable for sampled generation and per-token scoring.
// Implementations: the in-process n-gram lab, the HTTP wire client, and the
// cassette replay harness. All methods are safe to call concurrently.
class Backend {
 public:
  virtual ~Backend() = default;

  // Sampled continuation for `prompt`; the prompt itself is excluded.
  virtual std::string generate(const std::string& prompt, const SamplingParams& params) = 0;

  // Teacher-forced per-token logprobs for `text` under this model's own
  // tokenization.
  virtual TokenScoreSeq score(const std::string& text) = 0;

  virtual std::string descriptor() const = 0;

  // Native recollection support (masked text in, unmasked text out). The
  // toy lab implements this directly; wire backends go through prompts
  // instead and return nullopt here.
  virtual std::optional<std::string> recollect(const MaskedText& /*masked*/,
                                               const SamplingParams& /*params*/) {
    return std::nullopt;
  }

  // Completed request count, for query-budget accounting.
  virtual uint64_t request_count() const { return 0; }
};

struct BackendHandle {
  BackendRole role = BackendRole::kVictim;
  std::shared_ptr<Backend> impl;

  Backend& operator*() const { return *impl; }
  Backend* operator->() const { return impl.get(); }
  explicit operator bool() const { return impl != nullptr; }
};

// Index of the first token whose span intersects [char_pos, ...): the
// smallest index whose span end exceeds char_pos. char_pos == text length
// yields the one-past-last sentinel (empty scoring range). Throws
// OutOfRangeError when char_pos exceeds the text length.
size_t first_token_at_or_after(const TokenScoreSeq& seq, size_t char_pos);

// Validates the span invariants (contiguous, covering, finite logprobs).
// Used by tests and the wire client on untrusted responses.
bool token_spans_cover_text(const TokenScoreSeq& seq);

}  // namespace piirec
