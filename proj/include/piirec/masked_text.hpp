#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "piirec/entity.hpp"

namespace piirec {

// Candidate (or ground-truth) strings keyed by slot.
using CandidateMap = std::map<SlotKey, std::string>;
using GroundTruth = CandidateMap;

// One typed mask slot of a masked text, with the byte offsets of all its
// placeholder occurrences in the rendered form.
struct MaskSlot {
  SlotKey key;
  std::vector<size_t> occurrences;  // strictly increasing, non-empty
};

// A scrubbed text: literal spans interleaved with typed mask slots.
// Immutable after construction; rendering reproduces the source text
// byte-for-byte.
class MaskedText {
 public:
  struct Segment {
    enum class Kind { kLiteral, kSlot };
    Kind kind = Kind::kLiteral;
    std::string literal;  // set when kind == kLiteral
    SlotKey slot{};       // set when kind == kSlot

    static Segment make_literal(std::string text) {
      Segment s;
      s.kind = Kind::kLiteral;
      s.literal = std::move(text);
      return s;
    }
    static Segment make_slot(SlotKey key) {
      Segment s;
      s.kind = Kind::kSlot;
      s.slot = key;
      return s;
    }
  };

  MaskedText() = default;

  // Normalizes segments (merges adjacent literals, drops empties) and
  // derives the slot table with occurrence offsets.
  static MaskedText from_segments(std::string id, std::vector<Segment> segments);

  const std::string& id() const { return id_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<MaskSlot>& slots() const { return slots_; }

  bool has_slot(const SlotKey& key) const { return find_slot(key) != nullptr; }
  const MaskSlot* find_slot(const SlotKey& key) const;
  std::vector<SlotKey> slot_keys() const;

  // The source text with "[TYPE-NUM]" placeholders.
  std::string render() const;

 private:
  std::string id_;
  std::vector<Segment> segments_;
  std::vector<MaskSlot> slots_;  // ordered by first occurrence
};

// Parses a scrubbed text with "[TYPE-NUM]" placeholders. A '[' starts a
// placeholder only when immediately followed by an uppercase tag and a dash;
// any other '[' is literal text. Throws UnknownEntityTypeError for tags
// outside the closed set and MalformedPlaceholderError for unclosed brackets
// or non-numeric ids.
MaskedText parse_masked_text(std::string_view raw, std::string id);

// Inverse of parse_masked_text.
std::string render_masked(const MaskedText& text);

// Replaces every occurrence of every slot with its candidate string.
// Throws MissingCandidateError when a slot lacks an entry.
std::string substitute(const MaskedText& text, const CandidateMap& candidates);

// One (prefix, tail) pair per occurrence of `target`, with all other slots
// filled from `others`. The prefix of the first pair is the text before the
// first occurrence; later prefixes are empty because each tail runs exactly
// up to the next occurrence. Concatenating prefix + candidate + tail over
// all pairs reconstructs substitute(text, others + target->candidate).
struct SplitSegment {
  std::string prefix;
  std::string tail;
};
std::vector<SplitSegment> split_segments_at_slot(const MaskedText& text, const SlotKey& target,
                                                 const CandidateMap& others);

// Reduces a masked text to the sentence(s) containing the target slot's
// occurrences plus `radius_sentences` neighbors on each side (one contiguous
// span). Sentence boundaries are '.', '!' or '?' followed by whitespace, or
// a newline. Slot ids are preserved so candidates map back to the parent.
MaskedText window_around_slot(const MaskedText& text, const SlotKey& target,
                              int radius_sentences);

}  // namespace piirec
