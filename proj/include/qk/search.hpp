#ifndef QK_SEARCH_HPP_
#define QK_SEARCH_HPP_

#include <optional>
#include <vector>

#include "qk/table.hpp"

namespace qk {

// A generating set together with a derivation of every other element as a
// product of elements that appear earlier in `order`.
struct GenerationPlan {
  struct Step {
    Element element;
    Element left;   // element == left * right; unused for generators
    Element right;
    bool is_generator;
  };
  std::vector<Element> generators;
  std::vector<Step> order;                 // all n elements, generators included
  std::vector<std::size_t> stage_end;      // order[0, stage_end[i]) is generated by generators[0..i]
};

// Greedy: repeatedly add the element whose addition enlarges the generated
// subalgebra most (smallest index on ties) until everything is generated.
GenerationPlan generating_set(const CayleyTable& x);

// Subalgebra generated by `seeds` under *, as a sorted element list.
std::vector<Element> subalgebra(const CayleyTable& x, const std::vector<Element>& seeds);

// All f with f(i*j) = f(i)*f(j), in lexicographic order of (f(0), f(1), ...).
// Throws kInvalidArgument for an empty operand.
std::vector<Map> homomorphisms(const CayleyTable& x, const CayleyTable& y);

// First isomorphism in search order, or nullopt.
std::optional<Map> is_isomorphic(const CayleyTable& x, const CayleyTable& y);

bool is_homomorphism(const CayleyTable& x, const CayleyTable& y, const Map& f);

}  // namespace qk

#endif  // QK_SEARCH_HPP_
