#ifndef SCHRODER_CONFIG_HPP
#define SCHRODER_CONFIG_HPP

#include <cstdint>
#include <istream>
#include <string>

#include "schroder/constant_term.hpp"
#include "schroder/enumerators.hpp"

namespace schroder {

/// Caps and thread count, read from `key = value` lines. Recognised keys:
/// enumeration_cap, parking_cap, ct_max_size, ct_max_series_order,
/// ct_max_terms, threads. `#` starts a comment.
struct Config {
  EnumerationOptions enumeration;
  std::uint64_t parking_cap = 10'000'000;
  CtOptions ct;
};

/// Throws std::invalid_argument on unknown keys or malformed values.
Config parse_config(std::istream& in);
Config load_config(const std::string& path);

}  // namespace schroder

#endif  // SCHRODER_CONFIG_HPP
