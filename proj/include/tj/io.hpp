#pragma once

#include <iosfwd>
#include <string>

#include "tj/graph.hpp"
#include "tj/solver.hpp"

namespace tj {

class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

/// Reads the `tji 1` instance format. Rejects self-loops, duplicate edges
/// and out-of-range ids; `#` lines are comments.
Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);
Instance load_instance(const std::string& path);

/// Canonical serialization: header, n, ell, k, I, J, sorted edge lines.
/// Ids are compacted to 0..n-1 preserving order; with original_n >= 0,
/// vertices whose original id is >= original_n get a `# fresh` comment
/// mapping the compacted id to its neighborhood.
std::string serialize_instance(const Instance& inst, int original_n = -1);

/// Sentinel file body emitted when kernelization short-circuits.
std::string decided_yes_sentinel(const std::string& reason);

const char* answer_name(Answer a);
const char* method_name(Method m);

/// FNV-1a 64-bit of the bytes, as lowercase hex.
std::string checksum_hex(const std::string& bytes);

}  // namespace tj
