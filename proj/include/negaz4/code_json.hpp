#pragma once

// JSON form of a CodeSpec:
//   {"n":1,"k":1,"choice":[{"j":1,"case":"II","lambda":2,"t":null,
//     "b":{"0":[1]},"size":"8"}],"total_size":"8"}
// j is 1-based, each digit is its d coefficients (little-endian, 0/1), and
// sizes are decimal strings.

#include "negaz4/ideal_enum.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace negaz4 {

using Json = nlohmann::ordered_json;

Json to_json(const IdealSpec& spec, unsigned d);
Json to_json(const CodeSpec& spec, const CodeSpecStream& stream);

struct ParsedCode {
  CodeSpecStream stream;  // the full space the spec lives in
  CodeSpec spec;
};

// Rebuilds and validates a CodeSpec (generators are recomputed; stated sizes
// must agree). Throws std::invalid_argument on malformed input.
ParsedCode parse_code_spec(const Json& j);
ParsedCode parse_code_spec(const std::string& text);

}  // namespace negaz4
