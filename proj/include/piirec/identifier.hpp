#pragma once

#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "piirec/entity.hpp"

namespace piirec {

// One extracted PII span. `text` always equals the input slice at
// [begin, end).
struct PiiMatch {
  EntityType type;
  std::string text;
  size_t begin = 0;
  size_t end = 0;
  std::string rule_id;
};

// Deterministic rule-based PII extractor: regex rules for EMAIL_ADDRESS,
// PHONE_NUMBER, URL, ID and DATE_TIME, capitalization heuristics for PERSON,
// LOCATION and ORGANIZATION, plus optional per-type gazetteers. Immutable
// after configuration; concurrent extract() calls are safe.
class PiiIdentifier {
 public:
  PiiIdentifier();

  // Entries match case-insensitively as whole tokens. Throws on empty lists.
  void register_gazetteer(EntityType type, const std::vector<std::string>& entries);

  // Matches of the wanted types, sorted by span start. Overlaps are resolved
  // longest-first within each type, so enlarging `wanted` never removes
  // matches of previously wanted types.
  std::vector<PiiMatch> extract(std::string_view text,
                                const std::set<EntityType>& wanted) const;

 private:
  struct RegexRule {
    EntityType type;
    std::regex pattern;
    std::string rule_id;
  };

  void extract_regex(std::string_view text, EntityType type,
                     std::vector<PiiMatch>& out) const;
  void extract_capitalized(std::string_view text, EntityType type,
                           std::vector<PiiMatch>& out) const;
  void extract_gazetteer(std::string_view text, EntityType type,
                         std::vector<PiiMatch>& out) const;

  std::vector<RegexRule> regex_rules_;
  std::vector<std::pair<EntityType, std::vector<std::string>>> gazetteers_;
};

}  // namespace piirec
