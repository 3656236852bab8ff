#ifndef QK_LIMITS_HPP_
#define QK_LIMITS_HPP_

#include <cstddef>
#include <optional>

namespace qk {

// Order bounds for the exhaustive procedures.
struct Limits {
  std::size_t medial_check = 512;       // O(n^4) medial scan
  std::size_t auto_enumeration = 1000;  // automorphism enumeration / census
  std::size_t bijectivity_scan = 1000000;
  std::size_t table_order = 1 << 16;   // largest table we will materialize

  // Every bound replaced by `max_order`.
  static Limits uniform(std::size_t max_order);

  // Defaults, overridden by QK_MAX_ORDER when it is set to a positive integer.
  static Limits from_env();
};

// Parses the value of QK_MAX_ORDER; nullopt when unset or malformed.
std::optional<std::size_t> max_order_from_env();

}  // namespace qk

#endif  // QK_LIMITS_HPP_
