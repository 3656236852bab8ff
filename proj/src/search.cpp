#include "qk/search.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace qk {
namespace {

constexpr Element kUnset = static_cast<Element>(-1);

// Extends the closed set `member` by `seed`, appending derivations to `order`.
void close_with(const CayleyTable& t, Element seed, std::vector<bool>& member,
                std::vector<Element>& members, std::vector<GenerationPlan::Step>* order) {
  if (member[seed]) return;
  std::deque<Element> queue{seed};
  member[seed] = true;
  members.push_back(seed);
  if (order) order->push_back({seed, 0, 0, true});
  auto visit = [&](Element l, Element r) {
    Element p = t(l, r);
    if (member[p]) return;
    member[p] = true;
    members.push_back(p);
    queue.push_back(p);
    if (order) order->push_back({p, l, r, false});
  };
  while (!queue.empty()) {
    Element m = queue.front();
    queue.pop_front();
    // Snapshot size: elements appended during this sweep are queued anyway.
    const std::size_t count = members.size();
    for (std::size_t k = 0; k < count; ++k) {
      Element other = members[k];
      visit(m, other);
      visit(other, m);
    }
  }
}

std::vector<std::size_t> cycle_type(const Map& perm) {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(perm.size());
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t c = s; !seen[c]; c = perm[c]) {
      seen[c] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

// Isomorphism-invariant fingerprint of each element.
struct Profile {
  bool idempotent;
  std::size_t left_fixed;
  std::size_t right_fixed;
  std::size_t image_size_left;
  std::size_t image_size_right;
  std::vector<std::size_t> right_cycles;  // only meaningful when R_x is a permutation
  std::size_t preimage_count;             // |{(y, z) : y*z = x}|
  auto operator<=>(const Profile&) const = default;
};

std::vector<Profile> profiles(const CayleyTable& t) {
  const std::size_t n = t.order();
  std::vector<std::size_t> preimages(n, 0);
  for (Element v : t.entries()) ++preimages[v];
  std::vector<Profile> out(n);
  for (Element x = 0; x < n; ++x) {
    Profile& p = out[x];
    p.idempotent = t(x, x) == x;
    Map l = t.left_map(x);
    Map r = t.right_map(x);
    p.left_fixed = p.right_fixed = 0;
    for (Element y = 0; y < n; ++y) {
      p.left_fixed += l[y] == y;
      p.right_fixed += r[y] == y;
    }
    auto image = [](Map m) {
      std::sort(m.begin(), m.end());
      return static_cast<std::size_t>(std::unique(m.begin(), m.end()) - m.begin());
    };
    p.image_size_left = image(l);
    p.image_size_right = image(r);
    if (p.image_size_right == n) p.right_cycles = cycle_type(r);
    p.preimage_count = preimages[x];
  }
  return out;
}

// Backtracking over generator images. `accept_image(g, v)` filters candidate
// images for each element (generators and derived ones); with `injective` no
// two elements may share an image. `on_complete` is called with every full
// homomorphism and returns false to stop.
template <class Accept, class OnComplete>
void search_homs(const CayleyTable& x, const CayleyTable& y, const GenerationPlan& plan,
                 bool injective, Accept accept_image, OnComplete on_complete) {
  const std::size_t n = x.order();
  Map f(n, kUnset);
  std::vector<bool> taken(y.order(), false);
  std::vector<Element> assigned;  // in plan order
  bool stop = false;
  auto admissible = [&](Element e, Element v) {
    return (!injective || !taken[v]) && accept_image(e, v);
  };
  auto assign = [&](Element e, Element v) {
    f[e] = v;
    if (injective) taken[v] = true;
    assigned.push_back(e);
  };

  auto check_new = [&](std::size_t from) {
    // Every pair involving an element assigned at index >= from.
    for (std::size_t i = from; i < assigned.size(); ++i) {
      Element p = assigned[i];
      for (std::size_t j = 0; j <= i; ++j) {
        Element q = assigned[j];
        Element pq = x(p, q), qp = x(q, p);
        if (f[pq] != kUnset && f[pq] != y(f[p], f[q])) return false;
        if (f[qp] != kUnset && f[qp] != y(f[q], f[p])) return false;
      }
    }
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t stage) -> void {
    if (stop) return;
    if (stage == plan.generators.size()) {
      if (!on_complete(f)) stop = true;
      return;
    }
    const std::size_t begin = stage == 0 ? 0 : plan.stage_end[stage - 1];
    const std::size_t end = plan.stage_end[stage];
    const Element g = plan.order[begin].element;
    for (Element v = 0; v < y.order() && !stop; ++v) {
      if (!admissible(g, v)) continue;
      const std::size_t mark = assigned.size();
      bool ok = true;
      assign(g, v);
      for (std::size_t k = begin + 1; k < end; ++k) {
        const auto& step = plan.order[k];
        Element image = y(f[step.left], f[step.right]);
        if (!admissible(step.element, image)) {
          ok = false;
          break;
        }
        assign(step.element, image);
      }
      if (ok && check_new(mark)) self(self, stage + 1);
      for (std::size_t k = mark; k < assigned.size(); ++k) {
        if (injective) taken[f[assigned[k]]] = false;
        f[assigned[k]] = kUnset;
      }
      assigned.resize(mark);
    }
  };
  recurse(recurse, 0);
}

}  // namespace

std::vector<Element> subalgebra(const CayleyTable& t, const std::vector<Element>& seeds) {
  std::vector<bool> member(t.order(), false);
  std::vector<Element> members;
  for (Element s : seeds) close_with(t, s, member, members, nullptr);
  std::sort(members.begin(), members.end());
  return members;
}

GenerationPlan generating_set(const CayleyTable& t) {
  const std::size_t n = t.order();
  GenerationPlan plan;
  std::vector<bool> member(n, false);
  std::vector<Element> members;
  while (members.size() < n) {
    Element best = kUnset;
    std::size_t best_size = 0;
    for (Element cand = 0; cand < n; ++cand) {
      if (member[cand]) continue;
      auto trial_member = member;
      auto trial_members = members;
      close_with(t, cand, trial_member, trial_members, nullptr);
      if (trial_members.size() > best_size) {
        best_size = trial_members.size();
        best = cand;
        if (best_size == n) break;
      }
    }
    plan.generators.push_back(best);
    close_with(t, best, member, members, &plan.order);
    plan.stage_end.push_back(plan.order.size());
  }
  return plan;
}

bool is_homomorphism(const CayleyTable& x, const CayleyTable& y, const Map& f) {
  if (f.size() != x.order()) return false;
  for (Element v : f) {
    if (v >= y.order()) return false;
  }
  for (Element i = 0; i < x.order(); ++i) {
    for (Element j = 0; j < x.order(); ++j) {
      if (f[x(i, j)] != y(f[i], f[j])) return false;
    }
  }
  return true;
}

std::vector<Map> homomorphisms(const CayleyTable& x, const CayleyTable& y) {
  if (x.is_empty() || y.is_empty()) {
    throw Error(ErrorKind::kInvalidArgument, "homomorphisms need nonempty magmas");
  }
  GenerationPlan plan = generating_set(x);
  std::vector<Map> out;
  search_homs(
      x, y, plan, /*injective=*/false, [](Element, Element) { return true; },
      [&](const Map& f) {
        out.push_back(f);
        return true;
      });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Map> is_isomorphic(const CayleyTable& x, const CayleyTable& y) {
  if (x.order() != y.order()) return std::nullopt;
  if (x.is_empty()) return Map{};
  auto px = profiles(x);
  auto py = profiles(y);
  {
    auto sx = px, sy = py;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy) return std::nullopt;
  }
  // Compress profiles to class ids for cheap comparison.
  std::map<Profile, std::size_t> ids;
  for (const auto& p : px) ids.emplace(p, ids.size());
  std::vector<std::size_t> cx(x.order()), cy(y.order());
  for (std::size_t i = 0; i < x.order(); ++i) cx[i] = ids.at(px[i]);
  for (std::size_t i = 0; i < y.order(); ++i) cy[i] = ids.at(py[i]);

  GenerationPlan plan = generating_set(x);
  std::optional<Map> result;
  search_homs(
      x, y, plan, /*injective=*/true,
      [&](Element e, Element v) { return cx[e] == cy[v]; },
      [&](const Map& f) {
        result = f;
        return false;
      });
  return result;
}

}  // namespace qk
