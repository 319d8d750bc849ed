#pragma once

#include <filesystem>
#include <string>

#include "contamkit/types.hpp"

namespace contamkit {

// Reads a line-delimited dataset of `{"id","instruction","input","output"}`
// records. Throws DataError naming the line for malformed records, missing
// fields, empty ids/instructions, and duplicate ids. Blank lines are
// skipped. Record order equals file order.
Dataset load_dataset(const std::filesystem::path& path);

// Writes one record per line, UTF-8, keys in id/instruction/input/output
// order. load_dataset(save_dataset(d)) reproduces all records exactly.
void save_dataset(const Dataset& d, const std::filesystem::path& path);

// Single-record codecs, shared with the eval-record reader/writers.
std::string record_to_json_line(const InstructionExample& ex);
InstructionExample record_from_json_line(const std::string& line);

}  // namespace contamkit
