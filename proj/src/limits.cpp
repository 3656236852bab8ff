#include "qk/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace qk {

Limits Limits::uniform(std::size_t max_order) {
  Limits l;
  l.medial_check = max_order;
  l.auto_enumeration = max_order;
  l.bijectivity_scan = max_order;
  if (max_order > l.table_order) l.table_order = max_order;
  return l;
}

std::optional<std::size_t> max_order_from_env() {
  const char* raw = std::getenv("QK_MAX_ORDER");
  if (raw == nullptr) return std::nullopt;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return std::nullopt;
  return value;
}

Limits Limits::from_env() {
  if (auto v = max_order_from_env()) return uniform(*v);
  return Limits{};
}

}  // namespace qk
