#ifndef QK_TABLE_HPP_
#define QK_TABLE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qk/error.hpp"

namespace qk {

// A permutation or arbitrary map of {0,...,n-1}, stored as its image list.
using Map = std::vector<Element>;

// A finite magma on {0,...,n-1}. Entry (i, j) is i*j; row i is L_i, column j
// is R_j. Order 0 is the empty magma.
class CayleyTable {
 public:
  CayleyTable() = default;

  // Validates that `entries` has n*n values, all in [0, n).
  CayleyTable(std::size_t order, std::vector<Element> entries);

  static CayleyTable empty() { return CayleyTable(); }

  static CayleyTable from_function(
      std::size_t order, const std::function<Element(Element, Element)>& op);

  std::size_t order() const { return order_; }
  bool is_empty() const { return order_ == 0; }

  Element operator()(Element i, Element j) const {
    return entries_[static_cast<std::size_t>(i) * order_ + j];
  }

  std::span<const Element> row(Element i) const {
    return {entries_.data() + static_cast<std::size_t>(i) * order_, order_};
  }
  std::span<const Element> entries() const { return entries_; }

  Map left_map(Element x) const;   // L_x : y -> x*y
  Map right_map(Element x) const;  // R_x : y -> y*x

  // Table with elements renamed by the bijection `relabel` (old -> new).
  CayleyTable relabeled(std::span<const Element> relabel) const;

  bool operator==(const CayleyTable&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<Element> entries_;
};

bool is_permutation_map(std::span<const Element> map);

// Inverse of a permutation; throws kInvalidArgument if `perm` is not one.
Map invert_permutation(std::span<const Element> perm);

}  // namespace qk

#endif  // QK_TABLE_HPP_
