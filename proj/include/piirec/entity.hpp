#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace piirec {

// Closed set of PII entity types. Parsing any other tag is an error.
enum class EntityType {
  kDateTime,
  kEmailAddress,
  kId,
  kLocation,
  kOrganization,
  kPerson,
  kPhoneNumber,
  kUrl,
};

inline constexpr std::array<EntityType, 8> kAllEntityTypes = {
    EntityType::kDateTime,     EntityType::kEmailAddress, EntityType::kId,
    EntityType::kLocation,     EntityType::kOrganization, EntityType::kPerson,
    EntityType::kPhoneNumber,  EntityType::kUrl,
};

// Canonical tag as it appears inside placeholders, e.g. "DATE_TIME".
std::string_view entity_type_tag(EntityType type);

// Returns nullopt for tags outside the closed set.
std::optional<EntityType> entity_type_from_tag(std::string_view tag);

// Identifies one mask slot within a masked text: the pair (type, number)
// from a "[TYPE-NUM]" placeholder.
struct SlotKey {
  EntityType type;
  int id = 0;

  auto operator<=>(const SlotKey&) const = default;

  // "PERSON-0" form used in dataset files and report keys.
  std::string to_string() const;
  static std::optional<SlotKey> from_string(std::string_view s);
};

// Placeholder text for a slot, e.g. "[PERSON-0]".
std::string placeholder_text(const SlotKey& key);

}  // namespace piirec
