#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "implode/json_io.hpp"

namespace implode::cli {

struct RunConfig {
  std::string command;  // rootsys, arrangement, ..., verify
  std::string action;   // second word (suite name for verify)
  std::optional<std::string> input;
  std::optional<json_io::Json> document;  // used instead of reading `input`
  std::uint64_t seed = verify::kDefaultSeed;
  std::optional<double> tol;
  std::optional<std::string> output;
  std::optional<std::string> csv;   // contract ghflow trajectory
  std::optional<std::string> family;
  std::optional<int> rank;
  bool serial = false;  // verify: run samples on one thread
};

struct Outcome {
  int status = 0;
  json_io::Json document;
};

// Actions per command, in help order.
const std::vector<std::pair<std::string, std::vector<std::string>>>& commands();

// Never throws for domain errors: they become {"error": {...}} documents with
// exit status 2, 3 or 4.
Outcome dispatch(const RunConfig& config);

// Key-ordered, two-space indented serialisation used for all output.
std::string render(const json_io::Json& doc);

}  // namespace implode::cli
