#include "qk/table.hpp"

#include <string>

namespace qk {

std::string Witness::to_string() const {
  std::string out;
  for (const auto& [name, value] : bindings) {
    if (!out.empty()) out += ' ';
    out += name;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kInvalidArgument: return "invalid argument";
    case ErrorKind::kBoundExceeded: return "bound exceeded";
    case ErrorKind::kNotARack: return "not a rack";
    case ErrorKind::kNotAQuandle: return "not a quandle";
    case ErrorKind::kNotAUnit: return "not a unit";
    case ErrorKind::kIllDefined: return "ill-defined";
    case ErrorKind::kNotBijective: return "not bijective";
    case ErrorKind::kEvenOrder: return "even order";
    case ErrorKind::kMismatch: return "mismatch";
    case ErrorKind::kNotLatin: return "not latin";
    case ErrorKind::kVerificationFailed: return "verification failed";
    case ErrorKind::kNotAGroup: return "not a group";
    case ErrorKind::kNotMedial: return "not medial";
    case ErrorKind::kNotCommutative: return "not commutative";
  }
  return "error";
}

CayleyTable::CayleyTable(std::size_t order, std::vector<Element> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != order_ * order_) {
    throw Error(ErrorKind::kInvalidArgument,
                "table of order " + std::to_string(order_) + " needs " +
                    std::to_string(order_ * order_) + " entries, got " +
                    std::to_string(entries_.size()));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k] >= order_) {
      throw Error(ErrorKind::kInvalidArgument,
                  "entry (" + std::to_string(k / order_) + "," +
                      std::to_string(k % order_) + ") = " +
                      std::to_string(entries_[k]) + " out of range");
    }
  }
}

CayleyTable CayleyTable::from_function(
    std::size_t order, const std::function<Element(Element, Element)>& op) {
  std::vector<Element> entries(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      entries[i * order + j] = op(static_cast<Element>(i), static_cast<Element>(j));
    }
  }
  return CayleyTable(order, std::move(entries));
}

Map CayleyTable::left_map(Element x) const {
  auto r = row(x);
  return Map(r.begin(), r.end());
}

Map CayleyTable::right_map(Element x) const {
  Map out(order_);
  for (std::size_t y = 0; y < order_; ++y) out[y] = (*this)(static_cast<Element>(y), x);
  return out;
}

CayleyTable CayleyTable::relabeled(std::span<const Element> relabel) const {
  if (relabel.size() != order_ || !is_permutation_map(relabel)) {
    throw Error(ErrorKind::kInvalidArgument, "relabeling is not a bijection");
  }
  std::vector<Element> entries(order_ * order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      entries[relabel[i] * order_ + relabel[j]] =
          relabel[(*this)(static_cast<Element>(i), static_cast<Element>(j))];
    }
  }
  return CayleyTable(order_, std::move(entries));
}

bool is_permutation_map(std::span<const Element> map) {
  std::vector<bool> seen(map.size(), false);
  for (Element v : map) {
    if (v >= map.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Map invert_permutation(std::span<const Element> perm) {
  if (!is_permutation_map(perm)) {
    throw Error(ErrorKind::kInvalidArgument, "map is not a permutation");
  }
  Map inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<Element>(i);
  return inv;
}

}  // namespace qk
