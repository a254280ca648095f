#include "piirec/masked_text.hpp"

#include <algorithm>
#include <cctype>

#include "piirec/errors.hpp"

namespace piirec {

MaskedText MaskedText::from_segments(std::string id, std::vector<Segment> segments) {
  MaskedText out;
  out.id_ = std::move(id);
  for (auto& seg : segments) {
    if (seg.kind == Segment::Kind::kLiteral) {
      if (seg.literal.empty()) continue;
      if (!out.segments_.empty() && out.segments_.back().kind == Segment::Kind::kLiteral) {
        out.segments_.back().literal += seg.literal;
      } else {
        out.segments_.push_back(std::move(seg));
      }
    } else {
      out.segments_.push_back(std::move(seg));
    }
  }
  // Derive occurrence offsets in the rendered text.
  size_t pos = 0;
  for (const auto& seg : out.segments_) {
    if (seg.kind == Segment::Kind::kLiteral) {
      pos += seg.literal.size();
      continue;
    }
    auto it = std::find_if(out.slots_.begin(), out.slots_.end(),
                           [&](const MaskSlot& s) { return s.key == seg.slot; });
    if (it == out.slots_.end()) {
      out.slots_.push_back(MaskSlot{seg.slot, {pos}});
    } else {
      it->occurrences.push_back(pos);
    }
    pos += placeholder_text(seg.slot).size();
  }
  return out;
}

const MaskSlot* MaskedText::find_slot(const SlotKey& key) const {
  for (const auto& slot : slots_) {
    if (slot.key == key) return &slot;
  }
  return nullptr;
}

std::vector<SlotKey> MaskedText::slot_keys() const {
  std::vector<SlotKey> keys;
  keys.reserve(slots_.size());
  for (const auto& slot : slots_) keys.push_back(slot.key);
  return keys;
}

std::string MaskedText::render() const {
  std::string out;
  for (const auto& seg : segments_) {
    if (seg.kind == Segment::Kind::kLiteral) {
      out += seg.literal;
    } else {
      out += placeholder_text(seg.slot);
    }
  }
  return out;
}

namespace {

bool is_tag_char(char c) { return (c >= 'A' && c <= 'Z') || c == '_'; }

}  // namespace

MaskedText parse_masked_text(std::string_view raw, std::string id) {
  std::vector<MaskedText::Segment> segments;
  std::string literal;
  size_t i = 0;
  while (i < raw.size()) {
    if (raw[i] != '[') {
      literal.push_back(raw[i]);
      ++i;
      continue;
    }
    // Candidate placeholder: '[' TAG '-' DIGITS ']'. Commit once we see at
    // least one tag character followed by '-'; otherwise the bracket is
    // literal text.
    size_t j = i + 1;
    while (j < raw.size() && is_tag_char(raw[j])) ++j;
    if (j == i + 1 || j >= raw.size() || raw[j] != '-') {
      literal.push_back('[');
      ++i;
      continue;
    }
    std::string_view tag = raw.substr(i + 1, j - i - 1);
    size_t k = j + 1;
    if (k >= raw.size() || !std::isdigit(static_cast<unsigned char>(raw[k]))) {
      throw MalformedPlaceholderError("expected digits after '-' in [" + std::string(tag) + "-",
                                      i);
    }
    long id_num = 0;
    while (k < raw.size() && std::isdigit(static_cast<unsigned char>(raw[k]))) {
      id_num = id_num * 10 + (raw[k] - '0');
      ++k;
    }
    if (k >= raw.size() || raw[k] != ']') {
      throw MalformedPlaceholderError("unclosed placeholder starting at '['", i);
    }
    auto type = entity_type_from_tag(tag);
    if (!type) throw UnknownEntityTypeError(std::string(tag));
    if (!literal.empty()) {
      segments.push_back(MaskedText::Segment::make_literal(std::move(literal)));
      literal.clear();
    }
    segments.push_back(
        MaskedText::Segment::make_slot(SlotKey{*type, static_cast<int>(id_num)}));
    i = k + 1;
  }
  if (!literal.empty()) segments.push_back(MaskedText::Segment::make_literal(std::move(literal)));
  return MaskedText::from_segments(std::move(id), std::move(segments));
}

std::string render_masked(const MaskedText& text) { return text.render(); }

std::string substitute(const MaskedText& text, const CandidateMap& candidates) {
  std::string out;
  for (const auto& seg : text.segments()) {
    if (seg.kind == MaskedText::Segment::Kind::kLiteral) {
      out += seg.literal;
    } else {
      auto it = candidates.find(seg.slot);
      if (it == candidates.end()) throw MissingCandidateError(seg.slot.to_string());
      out += it->second;
    }
  }
  return out;
}

std::vector<SplitSegment> split_segments_at_slot(const MaskedText& text, const SlotKey& target,
                                                 const CandidateMap& others) {
  std::vector<SplitSegment> pairs;
  std::string current;
  bool seen_target = false;
  for (const auto& seg : text.segments()) {
    if (seg.kind == MaskedText::Segment::Kind::kLiteral) {
      current += seg.literal;
      continue;
    }
    if (seg.slot == target) {
      if (!seen_target) {
        pairs.push_back(SplitSegment{std::move(current), ""});
        seen_target = true;
      } else {
        pairs.back().tail = std::move(current);
        pairs.push_back(SplitSegment{"", ""});
      }
      current.clear();
      continue;
    }
    auto it = others.find(seg.slot);
    if (it == others.end()) throw MissingCandidateError(seg.slot.to_string());
    current += it->second;
  }
  if (!seen_target) return {};
  pairs.back().tail = std::move(current);
  return pairs;
}

namespace {

// Sentence spans over a rendered string: boundaries after '.', '!' or '?'
// followed by whitespace (or end), and after newlines.
std::vector<std::pair<size_t, size_t>> sentence_spans(std::string_view s) {
  std::vector<std::pair<size_t, size_t>> spans;
  size_t begin = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool boundary = false;
    if (c == '\n') boundary = true;
    if ((c == '.' || c == '!' || c == '?') &&
        (i + 1 >= s.size() || std::isspace(static_cast<unsigned char>(s[i + 1])))) {
      boundary = true;
    }
    if (boundary) {
      size_t end = i + 1;
      // Trailing whitespace belongs to the sentence it follows.
      while (end < s.size() && std::isspace(static_cast<unsigned char>(s[end]))) ++end;
      spans.emplace_back(begin, end);
      begin = end;
      i = end - 1;
    }
  }
  if (begin < s.size()) spans.emplace_back(begin, s.size());
  if (spans.empty()) spans.emplace_back(0, s.size());
  return spans;
}

}  // namespace

MaskedText window_around_slot(const MaskedText& text, const SlotKey& target,
                              int radius_sentences) {
  const MaskSlot* slot = text.find_slot(target);
  if (slot == nullptr) return MaskedText::from_segments(text.id(), {});
  std::string rendered = text.render();
  auto spans = sentence_spans(rendered);

  auto sentence_of = [&](size_t pos) {
    for (size_t s = 0; s < spans.size(); ++s) {
      if (pos >= spans[s].first && pos < spans[s].second) return s;
    }
    return spans.size() - 1;
  };

  size_t lo = spans.size();
  size_t hi = 0;
  for (size_t occ : slot->occurrences) {
    size_t s = sentence_of(occ);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  size_t r = static_cast<size_t>(radius_sentences);
  lo = lo > r ? lo - r : 0;
  hi = std::min(hi + r, spans.size() - 1);

  size_t byte_begin = spans[lo].first;
  size_t byte_end = spans[hi].second;
  std::string window = rendered.substr(byte_begin, byte_end - byte_begin);
  return parse_masked_text(window, text.id());
}

}  // namespace piirec
