#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "wfdim/classifier.hpp"
#include "wfdim/poly.hpp"
#include "wfdim/zspace.hpp"

namespace wfdim {

using Json = nlohmann::json;

/// A parsed `dim` input file. Exactly one of `roots` / `coefficients` is set.
struct InputSpec {
  FieldDescriptor field;
  std::optional<FactoredInput> roots;
  std::optional<Poly> coefficients;
  std::optional<int> precision_bits;
  Json raw;  // the document as read, echoed into the report
};

/// Scalars are ["rat", num, den] or ["quad", a_num, a_den, b_num, b_den] with
/// decimal-string integers. ParseError on any schema violation.
ExactScalar scalar_from_json(const Json& j, const FieldDescriptor& field);
Json scalar_to_json(const ExactScalar& x);

FieldDescriptor field_from_json(const Json& j);
Json field_to_json(const FieldDescriptor& field);

InputSpec parse_input_spec(const std::string& text);
InputSpec read_input_spec(const std::string& path);

struct Timings {
  long long classify_us = 0;
};

Json report_to_json(const InputSpec& spec, const WfReport& report, const Timings& timings);

/// Human-readable rendering of the same report.
std::string report_to_text(const WfReport& report);

/// "3/4" or "3/4:-1/2" (meaning 3/4 − 1/2·√d) under the given field.
ExactScalar parse_inline_scalar(const std::string& text, const FieldDescriptor& field);
/// Comma-separated list of inline scalars.
std::vector<ExactScalar> parse_inline_list(const std::string& text, const FieldDescriptor& field);

Json z_report_to_json(const ZProblem& z, const ZReport& report);

/// Canonical JSON text used for all output (two-space indent, sorted keys).
std::string dump(const Json& j);

}  // namespace wfdim
