#ifndef QK_PROPERTIES_HPP_
#define QK_PROPERTIES_HPP_

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qk/limits.hpp"
#include "qk/table.hpp"

namespace qk {

struct PropertyFlag {
  bool holds = true;
  Witness witness;  // first violating tuple in scan order; empty when holds

  explicit operator bool() const { return holds; }
};

// Exhaustive truth values of the defining identities. Witness variable names:
//   idempotent      x            with x*x != x
//   rack            x y z        with y*x == z*x, y < z (column not a permutation)
//                   a b c        with (a*b)*c != (a*c)*(b*c)
//   kei             x y          with (y*x)*x != y, scanned y outer
//   medial          a b c d      with (a*b)*(c*d) != (a*c)*(b*d)
//   latin           x y z        with x*y == x*z, y < z
//   commutative     x y          with x*y != y*x
//   left_involutive x y          with x*(x*y) != y
//   cocommutative   x y          dual not commutative (rack witness for non-racks)
// quandle and kei inherit the witness of the first failing ingredient.
struct PropertyReport {
  PropertyFlag idempotent;
  PropertyFlag rack;
  PropertyFlag quandle;
  PropertyFlag kei;
  PropertyFlag medial;
  PropertyFlag latin;
  PropertyFlag commutative;
  PropertyFlag cocommutative;
  PropertyFlag left_involutive;

  // (name, flag) in a fixed display order.
  std::vector<std::pair<std::string_view, const PropertyFlag*>> flags() const;
};

// Throws kBoundExceeded when the order exceeds limits.medial_check.
PropertyReport check_properties(const CayleyTable& x, const Limits& limits = Limits{});

// Individual deciders; each returns the same flag check_properties reports.
PropertyFlag check_idempotent(const CayleyTable& x);
PropertyFlag check_rack(const CayleyTable& x);
PropertyFlag check_latin(const CayleyTable& x);
PropertyFlag check_commutative(const CayleyTable& x);
PropertyFlag check_medial(const CayleyTable& x);
PropertyFlag check_left_involutive(const CayleyTable& x);
PropertyFlag check_right_involutive(const CayleyTable& x);

// First (x, y, z) with y < z and y*x == z*x, i.e. R_x not injective.
PropertyFlag check_columns_bijective(const CayleyTable& x);

// Dual rack: entry (i, j) = R_j^{-1}(i). Throws kNotARack when a column is not
// a permutation and kInvalidArgument for the empty magma.
CayleyTable dual(const CayleyTable& x);

// Componentwise product; index encoding is mixed radix with the last factor
// varying fastest.
CayleyTable direct_sum(std::span<const CayleyTable> factors,
                       const Limits& limits = Limits{});

}  // namespace qk

#endif  // QK_PROPERTIES_HPP_
