#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ncst/instances.hpp"

namespace ncst {

/// {"points": [[x, y], ...], "trees": {"name": [[i, j], ...]}}. Errors name
/// the offending field, e.g. "trees.initial[2]".
Instance parse_instance(const nlohmann::json& doc);
Instance load_instance(const std::filesystem::path& file);
nlohmann::json instance_to_json(const Instance& inst);

/// {"points", "start", "target", "steps": [{"remove": [i, j], "add": [i, j]}]}.
struct SequenceFile {
  FlipSequence sequence;
  Tree target;
};

SequenceFile parse_sequence(const nlohmann::json& doc);
SequenceFile load_sequence(const std::filesystem::path& file);
nlohmann::json sequence_to_json(const FlipSequence& seq, const Tree& target);

/// Parses JSON text; syntax errors are reported as InvalidInput with the
/// line and column.
nlohmann::json parse_json_text(const std::string& text, const std::string& source);

void write_json(const std::filesystem::path& file, const nlohmann::json& doc);

}  // namespace ncst
