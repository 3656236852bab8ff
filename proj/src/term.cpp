#include "qk/term.hpp"

#include <cctype>

namespace qk {
namespace {

bool valid_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

class Parser {
 public:
  Parser(std::string_view text, const GeneratorList& gens) : text_(text), gens_(gens) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kParse, "position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Term term() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input, expected a term");
    if (text_[pos_] == '(') {
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size()) fail("unexpected end of input, expected an operator");
      char op = text_[pos_];
      if (op != '*' && op != '\\' && op != '/') fail(std::string("unknown operator '") + op + "'");
      ++pos_;
      if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
          text_[pos_] != '(') {
        fail("operator must be followed by whitespace");
      }
      Term l = term();
      Term r = term();
      skip_ws();
      if (pos_ >= text_.size()) fail("unexpected end of input, expected ')'");
      if (text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      switch (op) {
        case '*': return Term::mul(std::move(l), std::move(r));
        case '\\': return Term::ldiv(std::move(l), std::move(r));
        default: return Term::rdiv(std::move(l), std::move(r));
      }
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    if (name.empty()) fail("expected a generator name or '('");
    if (!valid_name(name)) {
      pos_ = start;
      fail("invalid generator name '" + std::string(name) + "'");
    }
    return Term::generator(gens_.index_of(name));
  }

  std::string_view text_;
  const GeneratorList& gens_;
  std::size_t pos_ = 0;
};

}  // namespace

GeneratorList::GeneratorList(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(ErrorKind::kInvalidArgument, "no generators declared");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i])) {
      throw Error(ErrorKind::kInvalidArgument, "invalid generator name '" + names_[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw Error(ErrorKind::kInvalidArgument, "duplicate generator '" + names_[i] + "'");
      }
    }
  }
}

GeneratorList GeneratorList::parse(std::string_view comma_separated) {
  std::vector<std::string> names;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = comma_separated.find(',', pos);
    names.emplace_back(comma_separated.substr(pos, comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return GeneratorList(std::move(names));
}

std::size_t GeneratorList::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw Error(ErrorKind::kInvalidArgument, "undeclared generator '" + std::string(name) + "'");
}

Term Term::generator(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kGenerator;
  node->index = index;
  return Term(std::move(node));
}

Term Term::binary(Kind kind, Term l, Term r) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->depth = 1 + std::max(l.depth(), r.depth());
  node->children = {std::move(l), std::move(r)};
  return Term(std::move(node));
}

Term Term::mul(Term l, Term r) { return binary(Kind::kMul, std::move(l), std::move(r)); }
Term Term::ldiv(Term l, Term r) { return binary(Kind::kLeftDiv, std::move(l), std::move(r)); }
Term Term::rdiv(Term l, Term r) { return binary(Kind::kRightDiv, std::move(l), std::move(r)); }

std::string Term::to_string(const GeneratorList& gens) const {
  switch (kind()) {
    case Kind::kGenerator: return gens.name(generator_index());
    case Kind::kMul: return "(* " + left().to_string(gens) + " " + right().to_string(gens) + ")";
    case Kind::kLeftDiv:
      return "(\\ " + left().to_string(gens) + " " + right().to_string(gens) + ")";
    case Kind::kRightDiv:
      return "(/ " + left().to_string(gens) + " " + right().to_string(gens) + ")";
  }
  return {};
}

Term parse_term(std::string_view text, const GeneratorList& gens) {
  return Parser(text, gens).parse();
}

Element evaluate_in(const Term& term, const CayleyTable& table,
                    std::span<const Element> assignment) {
  switch (term.kind()) {
    case Term::Kind::kGenerator: return assignment[term.generator_index()];
    case Term::Kind::kMul:
      return table(evaluate_in(term.left(), table, assignment),
                   evaluate_in(term.right(), table, assignment));
    case Term::Kind::kLeftDiv: {
      Element x = evaluate_in(term.left(), table, assignment);
      Element y = evaluate_in(term.right(), table, assignment);
      Element found = static_cast<Element>(-1);
      for (Element w = 0; w < table.order(); ++w) {
        if (table(x, w) != y) continue;
        if (found != static_cast<Element>(-1)) break;
        found = w;
      }
      if (found == static_cast<Element>(-1) || !is_permutation_map(table.left_map(x))) {
        throw Error(ErrorKind::kNotLatin, "left division by " + std::to_string(x) + " undefined");
      }
      return found;
    }
    case Term::Kind::kRightDiv: {
      Element y = evaluate_in(term.left(), table, assignment);
      Element x = evaluate_in(term.right(), table, assignment);
      Map r = table.right_map(x);
      if (!is_permutation_map(r)) {
        throw Error(ErrorKind::kNotARack, "right division by " + std::to_string(x) + " undefined");
      }
      return invert_permutation(r)[y];
    }
  }
  return 0;
}

}  // namespace qk
