#include "bracekit/budgets.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace bracekit {

namespace {

template <typename T>
void read_env(const char* name, T& field) {
  const char* raw = std::getenv(name);
  if (!raw) return;
  const std::string_view text(raw);
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value <= 0) return;
  field = value;
}

}  // namespace

Budgets Budgets::from_environment() {
  Budgets b;
  read_env("BRACEKIT_MATCHING_BUDGET", b.matchings);
  read_env("BRACEKIT_TWO_FACTOR_BUDGET", b.two_factors);
  read_env("BRACEKIT_CYCLE_BUDGET", b.cycles);
  read_env("BRACEKIT_CLASS_EXPONENT", b.orientation_class_exponent);
  read_env("BRACEKIT_CUT_SHORE", b.cut_shore_size);
  if (b.orientation_class_exponent > 62) b.orientation_class_exponent = 62;
  return b;
}

}  // namespace bracekit
