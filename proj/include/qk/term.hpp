#ifndef QK_TERM_HPP_
#define QK_TERM_HPP_

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qk/table.hpp"

namespace qk {

// An ordered list of distinct generator names, each matching
// [a-zA-Z][a-zA-Z0-9_]*. Throws kInvalidArgument on violations.
class GeneratorList {
 public:
  explicit GeneratorList(std::vector<std::string> names);

  // "a,b,c"
  static GeneratorList parse(std::string_view comma_separated);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  // Index of `name`; throws kInvalidArgument if undeclared.
  std::size_t index_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

// Quandle word over generator indices with multiplication and both divisions:
//   mul(x, y)  = x*y
//   ldiv(x, y) = the w with x*w = y
//   rdiv(y, x) = R_x^{-1}(y), the w with w*x = y
class Term {
 public:
  enum class Kind { kGenerator, kMul, kLeftDiv, kRightDiv };

  static Term generator(std::size_t index);
  static Term mul(Term l, Term r);
  static Term ldiv(Term l, Term r);
  static Term rdiv(Term l, Term r);

  Kind kind() const;
  std::size_t generator_index() const;
  const Term& left() const;
  const Term& right() const;
  std::size_t depth() const;

  // Same s-expression syntax parse_term accepts.
  std::string to_string(const GeneratorList& gens) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term binary(Kind kind, Term l, Term r);

  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  std::size_t index = 0;
  std::vector<Term> children;
  std::size_t depth = 0;
};

inline Term::Kind Term::kind() const { return node_->kind; }
inline std::size_t Term::generator_index() const { return node_->index; }
inline const Term& Term::left() const { return node_->children[0]; }
inline const Term& Term::right() const { return node_->children[1]; }
inline std::size_t Term::depth() const { return node_->depth; }

// term := NAME | "(" OP term term ")", OP one of * \ /.
// Syntax errors are kParse ("position N: ..."); undeclared names are
// kInvalidArgument.
Term parse_term(std::string_view text, const GeneratorList& gens);

// Value of `term` in a finite magma, generator i sent to assignment[i].
// Divisions require the relevant row/column to be a permutation
// (kNotLatin / kNotARack otherwise).
Element evaluate_in(const Term& term, const CayleyTable& table,
                    std::span<const Element> assignment);

}  // namespace qk

#endif  // QK_TERM_HPP_
