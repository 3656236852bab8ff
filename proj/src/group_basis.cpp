#include <algorithm>
#include <map>

#include "qk/structure.hpp"

namespace qk {
namespace {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k) out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_power_of(std::uint64_t v, std::uint64_t p) {
  while (v % p == 0) v /= p;
  return v == 1;
}

}  // namespace

GroupBasis group_basis(const CayleyTable& add, Element e) {
  if (auto bad = abelian_group_violation(add, e)) {
    throw Error(ErrorKind::kNotAGroup, "not an abelian group: " + bad->first + " fails at " +
                                           bad->second.to_string(),
                bad->second);
  }
  const std::size_t n = add.order();

  std::vector<std::uint64_t> order(n, 0);
  for (Element x = 0; x < n; ++x) {
    std::uint64_t k = 1;
    for (Element acc = x; acc != e; acc = add(acc, x)) ++k;
    order[x] = k;
  }

  // Per prime: (order, generator) pairs, non-increasing in order.
  std::vector<std::vector<std::pair<std::uint64_t, Element>>> per_prime;
  for (auto [p, k] : factorize(n)) {
    (void)k;
    std::vector<Element> sylow;
    for (Element x = 0; x < n; ++x) {
      if (is_power_of(order[x], p)) sylow.push_back(x);
    }
    std::stable_sort(sylow.begin(), sylow.end(),
                     [&](Element a, Element b) { return order[a] > order[b]; });

    std::vector<bool> in_h(n, false);
    std::vector<Element> h{e};
    in_h[e] = true;
    std::vector<std::pair<std::uint64_t, Element>> chosen;
    while (h.size() < sylow.size()) {
      // First element of maximal order whose cyclic subgroup meets H trivially.
      Element pick = e;
      for (Element x : sylow) {
        if (in_h[x]) continue;
        bool trivial = true;
        Element acc = x;
        for (std::uint64_t m = 1; m < order[x] && trivial; ++m, acc = add(acc, x)) {
          trivial = !in_h[acc];
        }
        if (trivial) {
          pick = x;
          break;
        }
      }
      if (pick == e) {
        throw Error(ErrorKind::kVerificationFailed, "basis extraction stalled");
      }
      std::vector<Element> next;
      next.reserve(h.size() * order[pick]);
      for (Element base : h) {
        Element acc = base;
        for (std::uint64_t m = 0; m < order[pick]; ++m, acc = add(acc, pick)) next.push_back(acc);
      }
      for (Element v : next) in_h[v] = true;
      h = std::move(next);
      chosen.emplace_back(order[pick], pick);
    }
    per_prime.push_back(std::move(chosen));
  }

  // CRT: slot s combines the s-th largest cyclic factor of every prime.
  std::size_t slots = 0;
  for (const auto& c : per_prime) slots = std::max(slots, c.size());
  GroupBasis basis;
  for (std::size_t s = 0; s < slots; ++s) {
    std::uint64_t d = 1;
    Element g = e;
    for (const auto& c : per_prime) {
      if (s < c.size()) {
        d *= c[s].first;
        g = add(g, c[s].second);
      }
    }
    basis.factors.push_back(d);
    basis.generators.push_back(g);
  }
  std::reverse(basis.factors.begin(), basis.factors.end());
  std::reverse(basis.generators.begin(), basis.generators.end());
  return basis;
}

std::vector<std::uint64_t> invariant_factors(const CayleyTable& add, Element e) {
  return group_basis(add, e).factors;
}

std::vector<std::vector<std::uint64_t>> abelian_groups_of_order(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "group order must be positive");
  // Partitions of each prime exponent, parts non-increasing.
  auto partitions = [](unsigned k) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned left, unsigned max_part) -> void {
      if (left == 0) {
        out.push_back(cur);
        return;
      }
      for (unsigned part = std::min(left, max_part); part >= 1; --part) {
        cur.push_back(part);
        self(self, left - part, part);
        cur.pop_back();
      }
    };
    rec(rec, k, k);
    return out;
  };

  std::vector<std::vector<std::uint64_t>> groups{{}};
  // Each entry: per-slot (largest first) accumulated factor.
  std::vector<std::vector<std::uint64_t>> slots_list{{}};
  for (auto [p, k] : factorize(n)) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& slots : slots_list) {
      for (const auto& part : partitions(k)) {
        std::vector<std::uint64_t> merged = slots;
        if (merged.size() < part.size()) merged.resize(part.size(), 1);
        for (std::size_t s = 0; s < part.size(); ++s) {
          std::uint64_t pp = 1;
          for (unsigned i = 0; i < part[s]; ++i) pp *= p;
          merged[s] *= pp;
        }
        next.push_back(std::move(merged));
      }
    }
    slots_list = std::move(next);
  }
  groups.clear();
  for (auto slots : slots_list) {
    std::reverse(slots.begin(), slots.end());
    groups.push_back(std::move(slots));
  }
  std::sort(groups.begin(), groups.end());
  return groups;
}

}  // namespace qk
