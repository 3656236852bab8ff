#ifndef QK_KERNELS_HPP_
#define QK_KERNELS_HPP_

#include <array>
#include <optional>

#include "qk/table.hpp"

// Exhaustive identity scans. Each returns the lexicographically first
// violating tuple (first variable outermost), or nullopt when the identity
// holds everywhere. The OpenMP versions return exactly the serial answer for
// any thread count.
namespace qk::kernels {

using Triple = std::array<Element, 3>;
using Quad = std::array<Element, 4>;

namespace serial {
// (a*b)*(c*d) == (a*c)*(b*d)
std::optional<Quad> find_medial_violation(const CayleyTable& t);
// (a*b)*c == (a*c)*(b*c)
std::optional<Triple> find_right_distributivity_violation(const CayleyTable& t);
// (a*b)*c == a*(b*c)
std::optional<Triple> find_associativity_violation(const CayleyTable& t);
}  // namespace serial

namespace omp {
std::optional<Quad> find_medial_violation(const CayleyTable& t);
std::optional<Triple> find_right_distributivity_violation(const CayleyTable& t);
std::optional<Triple> find_associativity_violation(const CayleyTable& t);
}  // namespace omp

}  // namespace qk::kernels

#endif  // QK_KERNELS_HPP_
