#include "qk/kernels.hpp"

#include <atomic>
#include <cstddef>
#include <vector>

namespace qk::kernels {
namespace {

// Per-outer-index scans shared by both backends. `stop` lets the parallel
// driver abandon a scan once a smaller outer index has already failed.
template <class Stop>
std::optional<Quad> medial_from(const CayleyTable& t, Element a, Stop stop) {
  const std::size_t n = t.order();
  for (Element b = 0; b < n; ++b) {
    if (stop()) return std::nullopt;
    auto row_ab = t.row(t(a, b));
    for (Element c = 0; c < n; ++c) {
      auto row_ac = t.row(t(a, c));
      auto row_c = t.row(c);
      auto row_b = t.row(b);
      for (Element d = 0; d < n; ++d) {
        if (row_ab[row_c[d]] != row_ac[row_b[d]]) return Quad{a, b, c, d};
      }
    }
  }
  return std::nullopt;
}

template <class Stop>
std::optional<Triple> right_dist_from(const CayleyTable& t, Element a, Stop stop) {
  const std::size_t n = t.order();
  auto row_a = t.row(a);
  for (Element b = 0; b < n; ++b) {
    if (stop()) return std::nullopt;
    auto row_ab = t.row(row_a[b]);
    for (Element c = 0; c < n; ++c) {
      if (row_ab[c] != t(row_a[c], t(b, c))) return Triple{a, b, c};
    }
  }
  return std::nullopt;
}

template <class Stop>
std::optional<Triple> assoc_from(const CayleyTable& t, Element a, Stop stop) {
  const std::size_t n = t.order();
  auto row_a = t.row(a);
  for (Element b = 0; b < n; ++b) {
    if (stop()) return std::nullopt;
    auto row_ab = t.row(row_a[b]);
    auto row_b = t.row(b);
    for (Element c = 0; c < n; ++c) {
      if (row_ab[c] != row_a[row_b[c]]) return Triple{a, b, c};
    }
  }
  return std::nullopt;
}

template <class Tuple, class Scan>
std::optional<Tuple> serial_first(const CayleyTable& t, Scan scan) {
  auto never = [] { return false; };
  for (Element a = 0; a < t.order(); ++a) {
    if (auto w = scan(t, a, never)) return w;
  }
  return std::nullopt;
}

template <class Tuple, class Scan>
std::optional<Tuple> parallel_first(const CayleyTable& t, Scan scan) {
  const auto n = static_cast<std::ptrdiff_t>(t.order());
  std::atomic<std::ptrdiff_t> best{n};
  std::vector<std::optional<Tuple>> found(static_cast<std::size_t>(n));

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t a = 0; a < n; ++a) {
    if (a >= best.load(std::memory_order_relaxed)) continue;
    auto stop = [&] { return a >= best.load(std::memory_order_relaxed); };
    auto w = scan(t, static_cast<Element>(a), stop);
    if (!w) continue;
    found[static_cast<std::size_t>(a)] = w;
    std::ptrdiff_t cur = best.load();
    while (a < cur && !best.compare_exchange_weak(cur, a)) {
    }
  }
  const std::ptrdiff_t b = best.load();
  if (b == n) return std::nullopt;
  return found[static_cast<std::size_t>(b)];
}

auto medial_scan = [](const CayleyTable& t, Element a, auto stop) { return medial_from(t, a, stop); };
auto dist_scan = [](const CayleyTable& t, Element a, auto stop) { return right_dist_from(t, a, stop); };
auto assoc_scan = [](const CayleyTable& t, Element a, auto stop) { return assoc_from(t, a, stop); };

}  // namespace

namespace serial {

std::optional<Quad> find_medial_violation(const CayleyTable& t) {
  return serial_first<Quad>(t, medial_scan);
}
std::optional<Triple> find_right_distributivity_violation(const CayleyTable& t) {
  return serial_first<Triple>(t, dist_scan);
}
std::optional<Triple> find_associativity_violation(const CayleyTable& t) {
  return serial_first<Triple>(t, assoc_scan);
}

}  // namespace serial

namespace omp {

std::optional<Quad> find_medial_violation(const CayleyTable& t) {
  return parallel_first<Quad>(t, medial_scan);
}
std::optional<Triple> find_right_distributivity_violation(const CayleyTable& t) {
  return parallel_first<Triple>(t, dist_scan);
}
std::optional<Triple> find_associativity_violation(const CayleyTable& t) {
  return parallel_first<Triple>(t, assoc_scan);
}

}  // namespace omp

}  // namespace qk::kernels
