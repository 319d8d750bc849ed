#include "contamkit/dataset_io.hpp"

#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "contamkit/errors.hpp"

namespace contamkit {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string require_string_field(const ordered_json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw DataError(std::string("missing or non-string field \"") + key +
                    "\"");
  }
  return it->get<std::string>();
}

bool is_blank(const std::string& line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

std::string record_to_json_line(const InstructionExample& ex) {
  ordered_json j;
  j["id"] = ex.id;
  j["instruction"] = ex.instruction;
  j["input"] = ex.input;
  j["output"] = ex.output;
  return j.dump();
}

InstructionExample record_from_json_line(const std::string& line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DataError("record is not a JSON object");
  InstructionExample ex;
  ex.id = require_string_field(j, "id");
  ex.instruction = require_string_field(j, "instruction");
  ex.input = require_string_field(j, "input");
  ex.output = require_string_field(j, "output");
  if (ex.id.empty()) throw DataError("empty id");
  if (ex.instruction.empty()) throw DataError("empty instruction");
  return ex;
}

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset file: " + path.string());

  Dataset d;
  d.name = path.stem().string();
  d.provenance["source_path"] = path.string();

  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    InstructionExample ex;
    try {
      ex = record_from_json_line(line);
    } catch (const DataError& e) {
      throw DataError(path.string() + " line " + std::to_string(line_no) +
                      ": " + e.what());
    }
    if (!seen.insert(ex.id).second) {
      throw DataError(path.string() + " line " + std::to_string(line_no) +
                      ": duplicate id \"" + ex.id + "\"");
    }
    d.examples.push_back(std::move(ex));
  }
  return d;
}

void save_dataset(const Dataset& d, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write dataset file: " + path.string());
  for (const auto& ex : d.examples) {
    out << record_to_json_line(ex) << '\n';
  }
  if (!out) throw DataError("write failed: " + path.string());
}

}  // namespace contamkit
