#ifndef QK_ERROR_HPP_
#define QK_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qk {

using Element = std::uint32_t;

// A named assignment of elements that violates some identity, e.g. "x=1 y=0".
struct Witness {
  std::vector<std::pair<std::string, Element>> bindings;

  bool empty() const { return bindings.empty(); }
  std::string to_string() const;
  bool operator==(const Witness&) const = default;
};

enum class ErrorKind {
  kParse,
  kInvalidArgument,
  kBoundExceeded,
  kNotARack,
  kNotAQuandle,
  kNotAUnit,
  kIllDefined,
  kNotBijective,
  kEvenOrder,
  kMismatch,
  kNotLatin,
  kVerificationFailed,
  kNotAGroup,
  kNotMedial,
  kNotCommutative,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, Witness witness = {})
      : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const Witness& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  Witness witness_;
};

}  // namespace qk

#endif  // QK_ERROR_HPP_
