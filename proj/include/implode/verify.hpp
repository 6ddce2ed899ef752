#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "implode/parallel.hpp"

namespace implode::verify {

struct PropertyResult {
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;
  double threshold = 0.0;
  std::size_t samples = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;

  bool passed() const;
};

inline constexpr std::uint64_t kDefaultSeed = 7;

std::vector<std::string> suite_names();

// Runs one named suite ("all" runs every suite). Throws
// PreconditionError("unknown_suite") for other names.
std::vector<SuiteReport> run(const std::string& suite, std::uint64_t seed, Exec exec = Exec::Parallel);

}  // namespace implode::verify
