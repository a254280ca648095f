#include "piirec/dataset.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "piirec/errors.hpp"

namespace piirec {

using nlohmann::json;

std::vector<DatasetRecord> read_dataset(std::istream& in, const std::string& origin) {
  std::vector<DatasetRecord> records;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      throw DatasetParseError(line_no, e.what());
    }
    if (!obj.is_object() || !obj.contains("id") || !obj.contains("text")) {
      throw DatasetParseError(line_no, "record needs 'id' and 'text' fields");
    }
    DatasetRecord record;
    try {
      record.masked = parse_masked_text(obj.at("text").get<std::string>(),
                                        obj.at("id").get<std::string>());
    } catch (const Error& e) {
      throw DatasetParseError(line_no, e.what());
    } catch (const json::exception& e) {
      throw DatasetParseError(line_no, e.what());
    }
    if (obj.contains("pii")) {
      if (!obj.at("pii").is_object()) throw DatasetParseError(line_no, "'pii' must be an object");
      GroundTruth truth;
      for (const auto& [key, value] : obj.at("pii").items()) {
        auto slot = SlotKey::from_string(key);
        if (!slot) throw DatasetParseError(line_no, "bad slot key '" + key + "'");
        if (!record.masked.has_slot(*slot)) {
          throw DatasetParseError(line_no, "pii key '" + key + "' has no matching slot");
        }
        if (!value.is_string()) throw DatasetParseError(line_no, "pii values must be strings");
        truth[*slot] = value.get<std::string>();
      }
      record.truth = std::move(truth);
    }
    records.push_back(std::move(record));
  }
  if (in.bad()) throw DatasetParseError(line_no, "read failure on " + origin);
  return records;
}

std::vector<DatasetRecord> load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetParseError(0, "cannot open " + path);
  return read_dataset(in, path);
}

std::string dataset_record_to_json_line(const DatasetRecord& record) {
  json obj;
  obj["id"] = record.masked.id();
  obj["text"] = record.masked.render();
  if (record.truth) {
    json pii = json::object();
    for (const auto& [slot, value] : *record.truth) pii[slot.to_string()] = value;
    obj["pii"] = std::move(pii);
  }
  return obj.dump();
}

void save_dataset(const std::vector<DatasetRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  for (const auto& record : records) out << dataset_record_to_json_line(record) << '\n';
}

}  // namespace piirec
