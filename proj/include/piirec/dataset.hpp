#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "piirec/masked_text.hpp"

namespace piirec {

// One attack target: a masked text plus, outside pure-attack mode, the true
// PII per slot.
struct DatasetRecord {
  MaskedText masked;
  std::optional<GroundTruth> truth;
};

// Dataset files hold one JSON object per line:
//   {"id": "...", "text": "... [PERSON-0] ...", "pii": {"PERSON-0": "..."}}
// `pii` is optional; encoding is UTF-8 with LF line endings.
std::vector<DatasetRecord> load_dataset(const std::string& path);
std::vector<DatasetRecord> read_dataset(std::istream& in, const std::string& origin);
void save_dataset(const std::vector<DatasetRecord>& records, const std::string& path);
std::string dataset_record_to_json_line(const DatasetRecord& record);

}  // namespace piirec
