#include "schroder/config.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace schroder {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("config: bad value for " + key + ": '" + text + "'");
  return value;
}

}  // namespace

Config parse_config(std::istream& in) {
  Config cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(line_no) + " has no '='");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "enumeration_cap") cfg.enumeration.cap = parse_number<std::uint64_t>(key, value);
    else if (key == "parking_cap") cfg.parking_cap = parse_number<std::uint64_t>(key, value);
    else if (key == "threads") cfg.enumeration.threads = parse_number<int>(key, value);
    else if (key == "ct_max_size") cfg.ct.max_size = parse_number<int>(key, value);
    else if (key == "ct_max_series_order") cfg.ct.limits.max_series_order = parse_number<int>(key, value);
    else if (key == "ct_max_terms") cfg.ct.limits.max_terms = parse_number<std::size_t>(key, value);
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  if (cfg.enumeration.threads < 1) throw std::invalid_argument("config: threads must be positive");
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  return parse_config(in);
}

}  // namespace schroder
