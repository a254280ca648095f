#include "piirec/entity.hpp"

#include <cctype>

namespace piirec {

std::string_view entity_type_tag(EntityType type) {
  switch (type) {
    case EntityType::kDateTime:
      return "DATE_TIME";
    case EntityType::kEmailAddress:
      return "EMAIL_ADDRESS";
    case EntityType::kId:
      return "ID";
    case EntityType::kLocation:
      return "LOCATION";
    case EntityType::kOrganization:
      return "ORGANIZATION";
    case EntityType::kPerson:
      return "PERSON";
    case EntityType::kPhoneNumber:
      return "PHONE_NUMBER";
    case EntityType::kUrl:
      return "URL";
  }
  return "UNKNOWN";
}

std::optional<EntityType> entity_type_from_tag(std::string_view tag) {
  for (EntityType t : kAllEntityTypes) {
    if (entity_type_tag(t) == tag) return t;
  }
  return std::nullopt;
}

std::string SlotKey::to_string() const {
  std::string out(entity_type_tag(type));
  out.push_back('-');
  out += std::to_string(id);
  return out;
}

std::optional<SlotKey> SlotKey::from_string(std::string_view s) {
  size_t dash = s.rfind('-');
  if (dash == std::string_view::npos || dash == 0 || dash + 1 >= s.size()) return std::nullopt;
  auto type = entity_type_from_tag(s.substr(0, dash));
  if (!type) return std::nullopt;
  int id = 0;
  for (size_t i = dash + 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    id = id * 10 + (s[i] - '0');
  }
  return SlotKey{*type, id};
}

std::string placeholder_text(const SlotKey& key) { return "[" + key.to_string() + "]"; }

}  // namespace piirec
