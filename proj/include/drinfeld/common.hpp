#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace drinfeld {

// Thrown on invalid arguments or domain violations (maps to usage errors).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a computation would exceed the configured size limits.
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal consistency check fails (signals a bug upstream).
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Process-wide size limits. Enumeration (lookup tables, exhaustive scans)
// is bounded by max_table_elems; plain vector arithmetic in extension
// fields is bounded only by the degree cap, since splitting fields of
// modest degree can have astronomically many elements.
struct Limits {
  std::uint64_t max_table_elems = std::uint64_t(1) << 22;
  std::uint32_t max_degree_over_fp = 512;
};

Limits& limits();

}  // namespace drinfeld
