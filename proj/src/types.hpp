#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercover {

using NodeId = uint32_t;

enum class ErrorCode {
  invalid_argument,
  io,
  parse,
  domain,
  sample_cap,
  internal,
};

struct Error : std::runtime_error {
  ErrorCode code;
  Error(ErrorCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

// A hyperedge is a sorted, duplicate-free list of dense node ids. Empty is
// legal (a sampled edge may cover nothing); empty edges are counted by the
// algorithms but never stored.
using Hyperedge = std::vector<NodeId>;

}  // namespace hypercover
