#include "piirec/identifier.hpp"

#include <algorithm>
#include <cctype>

#include "piirec/errors.hpp"
#include "piirec/text_util.hpp"

namespace piirec {
namespace {

const char* kMonths =
    "(?:January|February|March|April|May|June|July|August|September|October|"
    "November|December|Jan|Feb|Mar|Apr|Jun|Jul|Aug|Sept|Sep|Oct|Nov|Dec)";

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '\'' || c == '&' ||
         c == '-';
}

struct Word {
  std::string_view text;
  size_t begin;
  size_t end;
};

std::vector<Word> scan_words(std::string_view text) {
  std::vector<Word> words;
  size_t i = 0;
  while (i < text.size()) {
    if (!is_word_char(text[i])) {
      ++i;
      continue;
    }
    size_t b = i;
    while (i < text.size() && is_word_char(text[i])) ++i;
    words.push_back(Word{text.substr(b, i - b), b, i});
  }
  return words;
}

// Capitalized tokens that are almost never names.
const std::set<std::string, std::less<>>& cap_stopwords() {
  static const std::set<std::string, std::less<>> kSet = {
      "The",     "A",       "An",      "On",       "In",      "At",      "It",     "He",
      "She",     "We",      "They",    "I",        "You",     "My",      "Our",    "His",
      "Her",     "Its",     "This",    "That",     "These",   "Those",   "There",  "Then",
      "When",    "Where",   "Which",   "While",    "Who",     "Why",     "How",    "What",
      "After",   "Before",  "During",  "If",       "As",      "By",      "For",    "To",
      "From",    "With",    "But",     "And",      "Or",      "Nor",     "Not",    "No",
      "Yes",     "However", "Also",    "Because",  "Since",   "Until",   "Over",   "Under",
      "Please",  "Dear",    "Hello",   "Hi",       "Thanks",  "Regards", "Sincerely",
      "January", "February","March",   "April",    "May",     "June",    "July",   "August",
      "September","October","November","December", "Monday",  "Tuesday", "Wednesday",
      "Thursday","Friday",  "Saturday","Sunday",   "Text",    "Rules",   "Rewritten",
  };
  return kSet;
}

const std::set<std::string, std::less<>>& honorifics() {
  static const std::set<std::string, std::less<>> kSet = {
      "Mr", "Mr.", "Mrs", "Mrs.", "Ms", "Ms.", "Dr", "Dr.", "Prof", "Prof.",
      "Sir", "Madam", "Miss", "Mx", "Mx."};
  return kSet;
}

const std::set<std::string, std::less<>>& org_keywords() {
  static const std::set<std::string, std::less<>> kSet = {
      "council",    "committee",  "commission", "corporation", "corp",       "inc",
      "ltd",        "llc",        "company",    "university",  "institute",  "college",
      "bank",       "group",      "agency",     "association", "ministry",   "department",
      "bureau",     "authority",  "board",      "society",     "union",      "foundation",
      "fund",       "partners",   "holdings",   "laboratories","labs",       "systems",
      "technologies","solutions", "services",   "airlines",    "motors",     "court"};
  return kSet;
}

// Strips a trailing possessive ("'s") left inside the word run.
std::string_view strip_possessive(std::string_view w) {
  if (w.size() > 2 && (w.substr(w.size() - 2) == "'s")) return w.substr(0, w.size() - 2);
  return w;
}

bool is_initial_group(std::string_view w) {
  // "R.M.D." or "J." — alternating capital letters and periods.
  if (w.size() < 2 || w.size() % 2 != 0) return false;
  for (size_t i = 0; i < w.size(); i += 2) {
    if (!std::isupper(static_cast<unsigned char>(w[i])) || w[i + 1] != '.') return false;
  }
  return true;
}

bool is_capitalized_word(std::string_view w) {
  if (w.size() < 2) return false;
  if (!std::isupper(static_cast<unsigned char>(w[0]))) return false;
  for (size_t i = 1; i < w.size(); ++i) {
    char c = w[i];
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '\'' && c != '-') return false;
  }
  return true;
}

bool is_name_token(std::string_view w) {
  std::string_view base = strip_possessive(w);
  if (is_initial_group(base)) return true;
  if (!is_capitalized_word(base)) return false;
  return cap_stopwords().find(std::string(base)) == cap_stopwords().end();
}

bool adjacent_by_space(const Word& a, const Word& b, std::string_view text) {
  return b.begin == a.end + 1 && text[a.end] == ' ';
}

bool is_lower_connector(std::string_view w) {
  return w == "of" || w == "the" || w == "for" || w == "and" || w == "de" || w == "van" ||
         w == "&";
}

// Keeps the longest non-overlapping matches of one type; ties broken by
// earlier start.
void resolve_overlaps(std::vector<PiiMatch>& matches) {
  std::stable_sort(matches.begin(), matches.end(), [](const PiiMatch& a, const PiiMatch& b) {
    size_t la = a.end - a.begin;
    size_t lb = b.end - b.begin;
    if (la != lb) return la > lb;
    return a.begin < b.begin;
  });
  std::vector<PiiMatch> kept;
  for (auto& m : matches) {
    bool overlaps = false;
    for (const auto& k : kept) {
      if (m.begin < k.end && k.begin < m.end) {
        overlaps = true;
        break;
      }
    }
    if (!overlaps) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end(),
            [](const PiiMatch& a, const PiiMatch& b) { return a.begin < b.begin; });
  matches = std::move(kept);
}

}  // namespace

PiiIdentifier::PiiIdentifier() {
  auto add = [&](EntityType type, const std::string& pattern, const std::string& rule_id,
                 bool icase = false) {
    auto flags = std::regex::ECMAScript | std::regex::optimize;
    if (icase) flags |= std::regex::icase;
    regex_rules_.push_back(RegexRule{type, std::regex(pattern, flags), rule_id});
  };

  add(EntityType::kEmailAddress,
      R"(\b[A-Za-z0-9._%+-]+@[A-Za-z0-9.-]+\.[A-Za-z]{2,}\b)", "email.addr");

  add(EntityType::kUrl, R"(\bhttps?://[^\s<>"'\)\]]+)", "url.scheme");
  add(EntityType::kUrl, R"(\bwww\.[A-Za-z0-9-]+(?:\.[A-Za-z0-9-]+)+[^\s<>"'\)\]]*)",
      "url.www");

  add(EntityType::kPhoneNumber,
      R"((?:\+\d{1,3}[ .-]?)?(?:\(\d{3}\)[ .-]?|\b\d{3}[ .-])\d{3}[ .-]\d{4}\b)",
      "phone.grouped");
  add(EntityType::kPhoneNumber, R"(\b\d{10}\b)", "phone.bare");

  std::string months(kMonths);
  add(EntityType::kDateTime,
      R"(\b\d{1,2}(?:st|nd|rd|th)?[ ])" + months + R"((?:\.|\b)(?:,?[ ]\d{4})?)",
      "date.day_month", true);
  add(EntityType::kDateTime,
      "\\b" + months + R"((?:\.|\b)[ ]\d{1,2}(?:st|nd|rd|th)?(?:,?[ ]\d{4})?\b)",
      "date.month_day", true);
  add(EntityType::kDateTime, "\\b" + months + R"((?:\.|\b),?[ ]\d{4}\b)", "date.month_year",
      true);
  add(EntityType::kDateTime, R"(\b\d{1,2}[/.-]\d{1,2}[/.-]\d{2,4}\b)", "date.numeric");
  add(EntityType::kDateTime, R"(\b\d{4}-\d{2}-\d{2}\b)", "date.iso");
  add(EntityType::kDateTime, R"(\b(?:19|20)\d{2}\b)", "date.year");
  add(EntityType::kDateTime, R"(\b\d{1,2}:\d{2}(?::\d{2})?(?:[ ]?[AaPp][Mm])?\b)",
      "date.time");

  add(EntityType::kId, R"(\b\d{3,12}\b)", "id.number");
  add(EntityType::kId, R"(\b[A-Z]{2,4}-?\d{3,10}\b)", "id.alnum");

  add(EntityType::kLocation,
      R"(\b\d{1,5}(?: [A-Z][a-z]+){1,3} (?:Street|St|Avenue|Ave|Road|Rd|Lane|Ln|Drive|Dr|Boulevard|Blvd|Place|Pl|Way|Square|Sq)\b)",
      "location.street");
}

void PiiIdentifier::register_gazetteer(EntityType type,
                                       const std::vector<std::string>& entries) {
  if (entries.empty()) throw Error("gazetteer entries must be non-empty");
  for (auto& gaz : gazetteers_) {
    if (gaz.first == type) {
      gaz.second.insert(gaz.second.end(), entries.begin(), entries.end());
      return;
    }
  }
  gazetteers_.emplace_back(type, entries);
}

void PiiIdentifier::extract_regex(std::string_view text, EntityType type,
                                  std::vector<PiiMatch>& out) const {
  std::string input(text);
  for (const auto& rule : regex_rules_) {
    if (rule.type != type) continue;
    auto begin = std::sregex_iterator(input.begin(), input.end(), rule.pattern);
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
      size_t b = static_cast<size_t>(it->position());
      size_t e = b + static_cast<size_t>(it->length());
      // URLs tend to swallow trailing punctuation; trim it back off.
      if (type == EntityType::kUrl) {
        while (e > b && (input[e - 1] == '.' || input[e - 1] == ',' || input[e - 1] == ';' ||
                         input[e - 1] == ':' || input[e - 1] == '!' || input[e - 1] == '?')) {
          --e;
        }
      }
      if (e > b) {
        out.push_back(PiiMatch{type, std::string(text.substr(b, e - b)), b, e, rule.rule_id});
      }
    }
  }
}

void PiiIdentifier::extract_capitalized(std::string_view text, EntityType type,
                                        std::vector<PiiMatch>& out) const {
  auto words = scan_words(text);

  // Capitalized runs; interior lowercase connectors allowed when flanked by
  // name tokens (for ORGANIZATION spans like "Bank of England").
  struct Run {
    size_t first_word;
    size_t last_word;  // inclusive
  };
  std::vector<Run> runs;
  size_t i = 0;
  while (i < words.size()) {
    if (!is_name_token(words[i].text)) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j + 1 < words.size() && adjacent_by_space(words[j], words[j + 1], text)) {
      if (is_name_token(words[j + 1].text)) {
        ++j;
        continue;
      }
      if (is_lower_connector(words[j + 1].text) && j + 2 < words.size() &&
          adjacent_by_space(words[j + 1], words[j + 2], text) &&
          is_name_token(words[j + 2].text)) {
        j += 2;
        continue;
      }
      break;
    }
    runs.push_back(Run{i, j});
    i = j + 1;
  }

  auto run_span = [&](const Run& run) {
    size_t b = words[run.first_word].begin;
    size_t e = words[run.last_word].end;
    std::string_view last = words[run.last_word].text;
    if (strip_possessive(last).size() != last.size()) e -= 2;
    return std::pair<size_t, size_t>(b, e);
  };

  if (type == EntityType::kPerson) {
    for (const auto& run : runs) {
      size_t first = run.first_word;
      // Honorific prefixes are cues, not part of the name.
      while (first <= run.last_word &&
             honorifics().count(std::string(words[first].text)) > 0) {
        ++first;
      }
      if (first > run.last_word) continue;
      size_t n_tokens = run.last_word - first + 1;
      if (n_tokens > 4) continue;
      bool has_connector = false;
      for (size_t w = first; w <= run.last_word; ++w) {
        if (is_lower_connector(words[w].text)) has_connector = true;
      }
      if (has_connector) continue;
      std::string_view first_text = strip_possessive(words[first].text);
      if (n_tokens == 1 && first_text.size() < 3 && !is_initial_group(first_text)) continue;
      auto [b, e] = run_span(Run{first, run.last_word});
      out.push_back(PiiMatch{type, std::string(text.substr(b, e - b)), b, e, "person.caps"});
    }
    return;
  }

  if (type == EntityType::kOrganization) {
    for (const auto& run : runs) {
      bool has_keyword = false;
      for (size_t w = run.first_word; w <= run.last_word; ++w) {
        if (org_keywords().count(fold_case(words[w].text)) > 0) has_keyword = true;
      }
      if (!has_keyword) continue;
      auto [b, e] = run_span(run);
      out.push_back(PiiMatch{type, std::string(text.substr(b, e - b)), b, e, "org.keyword"});
    }
    return;
  }

  if (type == EntityType::kLocation) {
    // "City, Region" pairs.
    for (size_t r = 0; r + 1 < runs.size(); ++r) {
      size_t gap_begin = words[runs[r].last_word].end;
      size_t gap_end = words[runs[r + 1].first_word].begin;
      if (gap_end - gap_begin == 2 && text[gap_begin] == ',' && text[gap_begin + 1] == ' ') {
        size_t b = words[runs[r].first_word].begin;
        size_t e = words[runs[r + 1].last_word].end;
        out.push_back(
            PiiMatch{type, std::string(text.substr(b, e - b)), b, e, "location.city_region"});
      }
    }
    // Locative cue: lowercase "in"/"near" immediately before a run.
    for (const auto& run : runs) {
      if (run.first_word == 0) continue;
      const Word& prev = words[run.first_word - 1];
      if ((prev.text == "in" || prev.text == "near") &&
          adjacent_by_space(prev, words[run.first_word], text)) {
        auto [b, e] = run_span(run);
        out.push_back(
            PiiMatch{type, std::string(text.substr(b, e - b)), b, e, "location.cue"});
      }
    }
    return;
  }
}

void PiiIdentifier::extract_gazetteer(std::string_view text, EntityType type,
                                      std::vector<PiiMatch>& out) const {
  std::string folded = fold_case(text);
  for (const auto& [gtype, entries] : gazetteers_) {
    if (gtype != type) continue;
    for (const auto& entry : entries) {
      std::string needle = fold_case(trim(entry));
      if (needle.empty()) continue;
      size_t pos = 0;
      while ((pos = folded.find(needle, pos)) != std::string::npos) {
        size_t end = pos + needle.size();
        bool left_ok = pos == 0 || !std::isalnum(static_cast<unsigned char>(folded[pos - 1]));
        bool right_ok =
            end >= folded.size() || !std::isalnum(static_cast<unsigned char>(folded[end]));
        if (left_ok && right_ok) {
          out.push_back(PiiMatch{type, std::string(text.substr(pos, needle.size())), pos, end,
                                 "gazetteer"});
        }
        pos += 1;
      }
    }
  }
}

std::vector<PiiMatch> PiiIdentifier::extract(std::string_view text,
                                             const std::set<EntityType>& wanted) const {
  std::vector<PiiMatch> all;
  for (EntityType type : wanted) {
    std::vector<PiiMatch> typed;
    extract_regex(text, type, typed);
    if (type == EntityType::kPerson || type == EntityType::kOrganization ||
        type == EntityType::kLocation) {
      extract_capitalized(text, type, typed);
    }
    extract_gazetteer(text, type, typed);
    resolve_overlaps(typed);
    all.insert(all.end(), typed.begin(), typed.end());
  }
  std::sort(all.begin(), all.end(), [](const PiiMatch& a, const PiiMatch& b) {
    if (a.begin != b.begin) return a.begin < b.begin;
    if (a.end != b.end) return a.end > b.end;
    return static_cast<int>(a.type) < static_cast<int>(b.type);
  });
  return all;
}

}  // namespace piirec
