#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace piirec {

// Lowercases a UTF-8 string. Covers ASCII, Latin-1 Supplement and Latin
// Extended-A; other codepoints pass through unchanged. PII comparison in the
// evaluation module is defined over this folding.
std::string fold_case(std::string_view text);

// Case-insensitive containment: true when `needle` occurs in `haystack`
// after case folding. Empty needles are contained in everything.
bool contains_ci(std::string_view haystack, std::string_view needle);

// Case-insensitive equality.
bool equals_ci(std::string_view a, std::string_view b);

std::string_view trim_view(std::string_view s);
std::string trim(std::string_view s);

// Strips surrounding whitespace, matched quotes and brackets. Used to
// normalize extracted candidates before pooling.
std::string strip_decorations(std::string_view s);

// Splits on any amount of whitespace; no empty pieces.
std::vector<std::string> split_whitespace(std::string_view s);

// Word count under whitespace splitting (text-length buckets use this).
size_t word_count(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);

// Replaces every occurrence of `from` (non-empty) with `to`.
std::string replace_all(std::string_view s, std::string_view from, std::string_view to);

}  // namespace piirec
