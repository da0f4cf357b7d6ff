#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wfdim {

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t corpus_size = 200;
  std::optional<std::string> suite;  // run only this suite
  int precision_bits = 128;
};

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few failure descriptions
  std::vector<std::string> notes;     // observations recorded without assertion
};

std::vector<std::string> suite_names();

/// Runs the property suites; InvalidArgument for an unknown suite name.
std::vector<SuiteResult> run_verify(const VerifyOptions& options);

}  // namespace wfdim
