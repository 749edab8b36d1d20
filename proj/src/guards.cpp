#include "grcat/guards.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace grcat {

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || end != value.data() + value.size() || out <= 0) {
    throw std::invalid_argument("GRCAT_SIZE_GUARD: bad value for " + std::string(key) + ": \"" +
                                std::string(value) + "\"");
  }
  return out;
}

}  // namespace

SizeGuards SizeGuards::parse(std::string_view text) {
  SizeGuards g;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("GRCAT_SIZE_GUARD: expected key=value, got \"" +
                                  std::string(item) + "\"");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "an_max") {
      g.an_max = parse_number<int>(key, value);
    } else if (key == "bruteforce_max") {
      g.bruteforce_max = parse_number<std::size_t>(key, value);
    } else if (key == "window_max") {
      g.window_max = parse_number<int>(key, value);
    } else if (key == "universe_max") {
      g.universe_max = parse_number<std::size_t>(key, value);
    } else {
      throw std::invalid_argument("GRCAT_SIZE_GUARD: unknown key \"" + std::string(key) + "\"");
    }
  }
  return g;
}

SizeGuards SizeGuards::from_env() {
  const char* env = std::getenv("GRCAT_SIZE_GUARD");
  return env ? parse(env) : SizeGuards{};
}

}  // namespace grcat
