#include "qk/properties.hpp"

#include <string>

#include "qk/kernels.hpp"

namespace qk {
namespace {

PropertyFlag fails(Witness w) { return PropertyFlag{false, std::move(w)}; }

Witness bind(std::initializer_list<std::pair<const char*, Element>> items) {
  Witness w;
  for (const auto& [name, v] : items) w.bindings.emplace_back(name, v);
  return w;
}

PropertyFlag first_failure(std::initializer_list<const PropertyFlag*> parts) {
  for (const auto* p : parts) {
    if (!p->holds) return *p;
  }
  return PropertyFlag{};
}

}  // namespace

std::vector<std::pair<std::string_view, const PropertyFlag*>> PropertyReport::flags() const {
  return {{"idempotent", &idempotent},   {"rack", &rack},
          {"quandle", &quandle},         {"kei", &kei},
          {"medial", &medial},           {"latin", &latin},
          {"commutative", &commutative}, {"cocommutative", &cocommutative},
          {"left_involutive", &left_involutive}};
}

PropertyFlag check_idempotent(const CayleyTable& t) {
  for (Element x = 0; x < t.order(); ++x) {
    if (t(x, x) != x) return fails(bind({{"x", x}}));
  }
  return {};
}

PropertyFlag check_columns_bijective(const CayleyTable& t) {
  const std::size_t n = t.order();
  std::vector<Element> first_preimage(n);
  std::vector<bool> seen(n);
  for (Element x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), false);
    for (Element z = 0; z < n; ++z) {
      Element v = t(z, x);
      if (seen[v]) return fails(bind({{"x", x}, {"y", first_preimage[v]}, {"z", z}}));
      seen[v] = true;
      first_preimage[v] = z;
    }
  }
  return {};
}

PropertyFlag check_rack(const CayleyTable& t) {
  if (auto cols = check_columns_bijective(t); !cols.holds) return cols;
  if (auto w = kernels::omp::find_right_distributivity_violation(t)) {
    return fails(bind({{"a", (*w)[0]}, {"b", (*w)[1]}, {"c", (*w)[2]}}));
  }
  return {};
}

PropertyFlag check_latin(const CayleyTable& t) {
  const std::size_t n = t.order();
  std::vector<Element> first_preimage(n);
  std::vector<bool> seen(n);
  for (Element x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), false);
    auto row = t.row(x);
    for (Element z = 0; z < n; ++z) {
      Element v = row[z];
      if (seen[v]) return fails(bind({{"x", x}, {"y", first_preimage[v]}, {"z", z}}));
      seen[v] = true;
      first_preimage[v] = z;
    }
  }
  return {};
}

PropertyFlag check_commutative(const CayleyTable& t) {
  for (Element x = 0; x < t.order(); ++x) {
    for (Element y = 0; y < t.order(); ++y) {
      if (t(x, y) != t(y, x)) return fails(bind({{"x", x}, {"y", y}}));
    }
  }
  return {};
}

PropertyFlag check_medial(const CayleyTable& t) {
  if (auto w = kernels::omp::find_medial_violation(t)) {
    return fails(bind({{"a", (*w)[0]}, {"b", (*w)[1]}, {"c", (*w)[2]}, {"d", (*w)[3]}}));
  }
  return {};
}

PropertyFlag check_left_involutive(const CayleyTable& t) {
  for (Element x = 0; x < t.order(); ++x) {
    for (Element y = 0; y < t.order(); ++y) {
      if (t(x, t(x, y)) != y) return fails(bind({{"x", x}, {"y", y}}));
    }
  }
  return {};
}

PropertyFlag check_right_involutive(const CayleyTable& t) {
  // Row-major over the entry y*x: y outer, x inner.
  for (Element y = 0; y < t.order(); ++y) {
    for (Element x = 0; x < t.order(); ++x) {
      if (t(t(y, x), x) != y) return fails(bind({{"x", x}, {"y", y}}));
    }
  }
  return {};
}

PropertyReport check_properties(const CayleyTable& t, const Limits& limits) {
  if (t.order() > limits.medial_check) {
    throw Error(ErrorKind::kBoundExceeded,
                "order " + std::to_string(t.order()) + " exceeds the medial-check bound " +
                    std::to_string(limits.medial_check));
  }
  PropertyReport r;
  r.idempotent = check_idempotent(t);
  r.rack = check_rack(t);
  r.quandle = first_failure({&r.rack, &r.idempotent});
  r.kei = r.quandle.holds ? check_right_involutive(t) : r.quandle;
  r.medial = check_medial(t);
  r.latin = check_latin(t);
  r.commutative = check_commutative(t);
  r.left_involutive = check_left_involutive(t);
  if (!r.rack.holds) {
    r.cocommutative = r.rack;
  } else if (!t.is_empty()) {
    r.cocommutative = check_commutative(dual(t));
  }
  return r;
}

CayleyTable dual(const CayleyTable& t) {
  if (t.is_empty()) throw Error(ErrorKind::kInvalidArgument, "dual of the empty magma");
  if (auto cols = check_columns_bijective(t); !cols.holds) {
    throw Error(ErrorKind::kNotARack, "column " + std::to_string(cols.witness.bindings[0].second) +
                                          " is not a permutation",
                cols.witness);
  }
  const std::size_t n = t.order();
  std::vector<Element> entries(n * n);
  for (Element j = 0; j < n; ++j) {
    for (Element y = 0; y < n; ++y) {
      // R_j(y) = y*j, so R_j^{-1}(y*j) = y.
      entries[static_cast<std::size_t>(t(y, j)) * n + j] = y;
    }
  }
  return CayleyTable(n, std::move(entries));
}

CayleyTable direct_sum(std::span<const CayleyTable> factors, const Limits& limits) {
  if (factors.empty()) throw Error(ErrorKind::kInvalidArgument, "direct sum of no factors");
  std::size_t order = 1;
  for (const auto& f : factors) {
    if (f.is_empty()) throw Error(ErrorKind::kInvalidArgument, "direct sum with an empty factor");
    order *= f.order();
    if (order > limits.table_order) {
      throw Error(ErrorKind::kBoundExceeded, "direct sum order exceeds " +
                                                 std::to_string(limits.table_order));
    }
  }
  const std::size_t k = factors.size();
  // Decode each index into per-factor coordinates once.
  std::vector<Element> coords(order * k);
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::size_t rest = idx;
    for (std::size_t f = k; f-- > 0;) {
      coords[idx * k + f] = static_cast<Element>(rest % factors[f].order());
      rest /= factors[f].order();
    }
  }
  std::vector<Element> entries(order * order);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(order); ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      std::size_t idx = 0;
      for (std::size_t f = 0; f < k; ++f) {
        idx = idx * factors[f].order() +
              factors[f](coords[static_cast<std::size_t>(i) * k + f], coords[j * k + f]);
      }
      entries[static_cast<std::size_t>(i) * order + j] = static_cast<Element>(idx);
    }
  }
  return CayleyTable(order, std::move(entries));
}

}  // namespace qk
