#ifndef QK_ABELIAN_HPP_
#define QK_ABELIAN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qk/limits.hpp"
#include "qk/table.hpp"

namespace qk {

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using Coords = std::vector<std::uint64_t>;

// Z/d_1 x ... x Z/d_k with every d_i >= 2; the empty list is the trivial group.
// Elements are indexed mixed radix, last coordinate fastest.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<std::uint64_t> moduli);

  const std::vector<std::uint64_t>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  std::uint64_t order() const { return order_; }

  Coords coords(std::uint64_t index) const;
  std::uint64_t index(const Coords& c) const;

  std::uint64_t add(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t neg(std::uint64_t x) const;
  std::uint64_t generator(std::size_t j) const;  // index of e_j

  // "Z3xZ15"; the trivial group is "Z1".
  std::string to_string() const;

  bool operator==(const FinAbGroup&) const = default;

 private:
  std::vector<std::uint64_t> moduli_;
  std::uint64_t order_ = 1;
};

// "Z3xZ15", "Z5", "Z1" (trivial). Throws kParse.
FinAbGroup parse_group_spec(std::string_view spec);

// "[2]", "[[0,1],[1,1]]" (rows listed in order), "[]" for 0x0. Throws kParse.
IntMatrix parse_matrix(std::string_view spec);
std::string matrix_to_string(const IntMatrix& m);

// Column j of `m` is the image of e_j. Returns the first (i, j) with
// m[i][j] * d_j != 0 mod d_i, or nullopt when the matrix defines an
// endomorphism. Also checks the shape.
std::optional<std::pair<std::size_t, std::size_t>> ill_defined_entry(const FinAbGroup& g,
                                                                     const IntMatrix& m);

// Applies a well-defined matrix to an element index.
std::uint64_t apply_matrix(const FinAbGroup& g, const IntMatrix& m, std::uint64_t x);

// First nonzero element of the kernel (index order), nullopt when injective.
std::optional<std::uint64_t> kernel_witness(const FinAbGroup& g, const IntMatrix& m);

// A certified automorphism of a FinAbGroup. Entries are stored reduced mod
// the modulus of their row.
class GroupAuto {
 public:
  const FinAbGroup& group() const { return group_; }
  const IntMatrix& matrix() const { return matrix_; }

  std::uint64_t apply(std::uint64_t x) const { return apply_matrix(group_, matrix_, x); }
  Map permutation() const;

  // id - phi, reduced. Well defined, not necessarily bijective.
  IntMatrix identity_minus() const;
  bool identity_minus_bijective() const;

  bool operator==(const GroupAuto&) const = default;

 private:
  friend GroupAuto make_auto(const FinAbGroup&, const IntMatrix&, const Limits&);
  GroupAuto(FinAbGroup g, IntMatrix m) : group_(std::move(g)), matrix_(std::move(m)) {}

  FinAbGroup group_;
  IntMatrix matrix_;
};

// Errors: kInvalidArgument (shape), kIllDefined (witness i, j), kNotBijective
// (witness x = first nonzero kernel element), kBoundExceeded (order above
// limits.bijectivity_scan).
GroupAuto make_auto(const FinAbGroup& g, const IntMatrix& m, const Limits& limits = Limits{});

IntMatrix identity_matrix(std::size_t k);
IntMatrix reduce_matrix(const FinAbGroup& g, IntMatrix m);

// x*y = phi(x) + (id - phi)(y). Throws kMismatch when phi is not on g.
CayleyTable alexander(const FinAbGroup& g, const GroupAuto& phi, const Limits& limits = Limits{});

// x*y = (x + y)/2; throws kEvenOrder when 2 is not invertible.
GroupAuto halving_auto(const FinAbGroup& g);
CayleyTable midpoint(const FinAbGroup& g, const Limits& limits = Limits{});

// C_{2m+1}; order 1 for m == 0.
CayleyTable cyclic_midpoint(std::uint64_t m, const Limits& limits = Limits{});

}  // namespace qk

#endif  // QK_ABELIAN_HPP_
