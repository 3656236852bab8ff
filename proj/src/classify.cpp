#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "qk/properties.hpp"
#include "qk/structure.hpp"

namespace qk {
namespace {

constexpr std::uint64_t kUnset = static_cast<std::uint64_t>(-1);

std::uint64_t element_order(const FinAbGroup& g, std::uint64_t x) {
  std::uint64_t k = 1;
  for (std::uint64_t acc = x; acc != 0; acc = g.add(acc, x)) ++k;
  return k;
}

// Z[t]-submodule closure: closed under + and phi. Records, for each new
// element, how it was derived (from phi of `left`, or left + right).
struct ModuleStep {
  std::uint64_t element;
  std::uint64_t left;
  std::uint64_t right;  // kUnset: element = phi(left)
  bool is_generator;
};

// `members` must be empty or already a phi-stable subgroup. Adding x to a
// phi-stable subgroup H gives H + <x>, which is phi-stable once phi(x) is in,
// so the closure walks cosets of <x> and then continues with phi(x).
void module_close(const GroupAuto& phi, std::uint64_t seed, std::vector<bool>& member,
                  std::vector<std::uint64_t>& members, std::vector<ModuleStep>* steps) {
  const FinAbGroup& g = phi.group();
  auto add = [&](std::uint64_t v, ModuleStep step) {
    member[v] = true;
    members.push_back(v);
    if (steps) steps->push_back(step);
  };
  if (members.empty()) add(0, {0, 0, 0, true});
  std::uint64_t x = seed;
  std::uint64_t from = kUnset;
  while (!member[x]) {
    const std::size_t base = members.size();
    add(x, from == kUnset ? ModuleStep{x, 0, 0, true} : ModuleStep{x, from, kUnset, false});
    for (std::size_t i = 0; i < base; ++i) {
      std::uint64_t prev = members[i] == 0 ? x : members[i];
      for (std::uint64_t y = g.add(prev, x); !member[y]; prev = y, y = g.add(y, x)) {
        add(y, {y, prev, x, false});
      }
    }
    from = x;
    x = phi.apply(x);
  }
}

std::size_t cyclic_module_size(const GroupAuto& phi, std::uint64_t x) {
  std::vector<bool> member(phi.group().order(), false);
  std::vector<std::uint64_t> members;
  module_close(phi, 0, member, members, nullptr);
  module_close(phi, x, member, members, nullptr);
  return members.size();
}

IntMatrix matrix_of_permutation(const FinAbGroup& g, const Map& perm) {
  const std::size_t k = g.rank();
  IntMatrix m(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    Coords c = g.coords(perm[g.generator(j)]);
    for (std::size_t i = 0; i < k; ++i) m[i][j] = static_cast<std::int64_t>(c[i]);
  }
  return m;
}

}  // namespace

std::string Decomposition::to_string() const {
  if (orders.empty()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) out += " + ";
    out += "C" + std::to_string(orders[i]);
  }
  return out;
}

Decomposition decompose_mcq(const CayleyTable& x, const Limits& limits) {
  if (x.is_empty()) throw Error(ErrorKind::kInvalidArgument, "decomposition of the empty magma");
  if (auto comm = check_commutative(x); !comm.holds) {
    throw Error(ErrorKind::kNotCommutative,
                "not commutative at " + comm.witness.to_string(), comm.witness);
  }
  std::optional<BmtCertificate> cert;
  if (check_latin(x).holds) {
    cert = bmt_certify(x, 0);
    if (!cert->verified) cert.reset();
  }
  if (!cert) {
    // A verified certificate already proves mediality; without one, find out why.
    if (x.order() > limits.medial_check) {
      throw Error(ErrorKind::kBoundExceeded, "order exceeds the medial-check bound");
    }
    if (auto med = check_medial(x); !med.holds) {
      throw Error(ErrorKind::kNotMedial, "not medial at " + med.witness.to_string(), med.witness);
    }
    if (auto rack = check_rack(x); !rack.holds) {
      throw Error(ErrorKind::kNotARack, "not a rack at " + rack.witness.to_string(), rack.witness);
    }
    auto idem = check_idempotent(x);
    throw Error(ErrorKind::kNotAQuandle, "not a quandle at " + idem.witness.to_string(),
                idem.witness);
  }
  Decomposition d;
  for (auto f : invariant_factors(cert->add, cert->basepoint)) {
    if (f % 2 == 0) {
      throw Error(ErrorKind::kVerificationFailed, "even invariant factor in a midpoint quandle");
    }
    d.orders.push_back(f);
  }
  return d;
}

std::optional<Map> latin_alexander_isomorphic(const GroupAuto& phi1, const GroupAuto& phi2) {
  if (!phi1.identity_minus_bijective() || !phi2.identity_minus_bijective()) {
    throw Error(ErrorKind::kNotLatin, "id - phi is not an automorphism");
  }
  const FinAbGroup& g1 = phi1.group();
  const FinAbGroup& g2 = phi2.group();
  if (g1.order() != g2.order()) return std::nullopt;
  const std::uint64_t n = g1.order();

  // Greedy module generators of (G1, phi1), with derivations.
  std::vector<ModuleStep> steps;
  std::vector<std::size_t> stage_end;
  std::vector<std::uint64_t> generators;
  {
    std::vector<bool> member(n, false);
    std::vector<std::uint64_t> members;
    module_close(phi1, 0, member, members, &steps);
    stage_end.push_back(steps.size());
    generators.push_back(0);
    while (members.size() < n) {
      std::uint64_t best = kUnset;
      std::size_t best_size = 0;
      for (std::uint64_t c = 0; c < n; ++c) {
        if (member[c]) continue;
        auto tm = member;
        auto tms = members;
        module_close(phi1, c, tm, tms, nullptr);
        if (tms.size() > best_size) {
          best_size = tms.size();
          best = c;
          if (best_size == n) break;
        }
      }
      module_close(phi1, best, member, members, &steps);
      stage_end.push_back(steps.size());
      generators.push_back(best);
    }
  }

  std::vector<std::uint64_t> ord2(n), size2(n);
  for (std::uint64_t v = 0; v < n; ++v) {
    ord2[v] = element_order(g2, v);
    size2[v] = cyclic_module_size(phi2, v);
  }

  Map alpha(n, static_cast<Element>(kUnset));
  std::vector<bool> taken(n, false);
  std::vector<std::uint64_t> assigned;
  std::optional<Map> result;

  auto assign = [&](std::uint64_t x, std::uint64_t v) {
    alpha[x] = static_cast<Element>(v);
    taken[v] = true;
    assigned.push_back(x);
  };
  // Additivity on the submodule reached after each stage only needs to be
  // tested against a generating set of its underlying group.
  std::vector<std::vector<std::uint64_t>> group_gens(stage_end.size());
  {
    std::vector<bool> in_h(n, false);
    std::vector<std::uint64_t> h{0};
    in_h[0] = true;
    std::vector<std::uint64_t> gens;
    std::size_t k = 0;
    for (std::size_t stage = 0; stage < stage_end.size(); ++stage) {
      for (; k < stage_end[stage]; ++k) {
        const std::uint64_t x = steps[k].element;
        if (in_h[x]) continue;
        gens.push_back(x);
        const std::size_t base = h.size();
        for (std::size_t i = 0; i < base; ++i) {
          for (std::uint64_t y = g1.add(h[i], x); !in_h[y]; y = g1.add(y, x)) {
            in_h[y] = true;
            h.push_back(y);
          }
        }
      }
      group_gens[stage] = gens;
    }
  }

  auto consistent = [&](std::size_t stage) {
    for (std::uint64_t p : assigned) {
      if (alpha[phi1.apply(p)] != phi2.apply(alpha[p])) return false;
      for (std::uint64_t s : group_gens[stage]) {
        if (alpha[g1.add(p, s)] != g2.add(alpha[p], alpha[s])) return false;
      }
    }
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t stage) -> void {
    if (result) return;
    if (stage == generators.size()) {
      result = alpha;
      return;
    }
    const std::size_t begin = stage == 0 ? 0 : stage_end[stage - 1];
    const std::size_t end = stage_end[stage];
    const std::uint64_t gen = steps[begin].element;
    const std::uint64_t want_order = element_order(g1, gen);
    const std::size_t want_size = cyclic_module_size(phi1, gen);
    for (std::uint64_t v = 0; v < n && !result; ++v) {
      if (taken[v] || ord2[v] != want_order || size2[v] != want_size) continue;
      const std::size_t mark = assigned.size();
      assign(gen, v);
      bool ok = true;
      for (std::size_t k = begin + 1; k < end && ok; ++k) {
        const ModuleStep& st = steps[k];
        std::uint64_t image = st.right == kUnset
                                  ? phi2.apply(alpha[st.left])
                                  : g2.add(alpha[st.left], alpha[st.right]);
        if (taken[image]) {
          ok = false;
        } else {
          assign(st.element, image);
        }
      }
      if (ok && consistent(stage)) self(self, stage + 1);
      for (std::size_t k = mark; k < assigned.size(); ++k) {
        taken[alpha[assigned[k]]] = false;
        alpha[assigned[k]] = static_cast<Element>(kUnset);
      }
      assigned.resize(mark);
    }
  };
  recurse(recurse, 0);
  return result;
}

std::vector<IntMatrix> automorphisms(const FinAbGroup& g, const Limits& limits) {
  if (g.order() > limits.auto_enumeration) {
    throw Error(ErrorKind::kBoundExceeded, "group order " + std::to_string(g.order()) +
                                               " exceeds the automorphism enumeration bound " +
                                               std::to_string(limits.auto_enumeration));
  }
  const std::uint64_t n = g.order();
  const std::size_t k = g.rank();
  std::vector<std::uint64_t> ord(n);
  for (std::uint64_t v = 0; v < n; ++v) ord[v] = element_order(g, v);

  // Candidates for column j: elements of order exactly d_j, in index order,
  // which is the lexicographic order of their coordinate columns.
  std::vector<std::vector<std::uint64_t>> candidates(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::uint64_t v = 0; v < n; ++v) {
      if (ord[v] == g.moduli()[j]) candidates[j].push_back(v);
    }
  }

  std::vector<IntMatrix> out;
  std::vector<std::uint64_t> columns(k);
  std::vector<bool> in_span(n, false);
  in_span[0] = true;
  std::vector<std::uint64_t> span{0};

  auto recurse = [&](auto&& self, std::size_t j) -> void {
    if (j == k) {
      IntMatrix m(k, std::vector<std::int64_t>(k, 0));
      for (std::size_t c = 0; c < k; ++c) {
        Coords co = g.coords(columns[c]);
        for (std::size_t i = 0; i < k; ++i) m[i][c] = static_cast<std::int64_t>(co[i]);
      }
      out.push_back(std::move(m));
      return;
    }
    const std::uint64_t d = g.moduli()[j];
    for (std::uint64_t v : candidates[j]) {
      bool independent = true;
      std::uint64_t acc = v;
      for (std::uint64_t m = 1; m < d && independent; ++m, acc = g.add(acc, v)) {
        independent = !in_span[acc];
      }
      if (!independent) continue;
      const std::size_t old_size = span.size();
      for (std::size_t s = 0; s < old_size; ++s) {
        std::uint64_t acc2 = span[s];
        for (std::uint64_t m = 1; m < d; ++m) {
          acc2 = g.add(acc2, v);
          span.push_back(acc2);
          in_span[acc2] = true;
        }
      }
      columns[j] = v;
      self(self, j + 1);
      for (std::size_t s = old_size; s < span.size(); ++s) in_span[span[s]] = false;
      span.resize(old_size);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CensusEntry> enumerate_medial_latin(std::uint64_t n, const Limits& limits) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "order must be positive");
  if (n > limits.auto_enumeration) {
    throw Error(ErrorKind::kBoundExceeded, "order " + std::to_string(n) +
                                               " exceeds the census bound " +
                                               std::to_string(limits.auto_enumeration));
  }
  std::vector<CensusEntry> out;
  for (const auto& factors : abelian_groups_of_order(n)) {
    FinAbGroup g(factors);
    std::vector<IntMatrix> auts = automorphisms(g, limits);
    std::vector<Map> perms, inv_perms;
    perms.reserve(auts.size());
    for (const auto& m : auts) {
      GroupAuto a = make_auto(g, m, limits);
      perms.push_back(a.permutation());
      inv_perms.push_back(invert_permutation(perms.back()));
    }
    std::map<IntMatrix, std::size_t> index;
    for (std::size_t i = 0; i < auts.size(); ++i) index.emplace(auts[i], i);

    std::vector<bool> covered(auts.size(), false);
    std::vector<std::pair<IntMatrix, std::size_t>> classes;  // (min matrix, size)
    for (std::size_t i = 0; i < auts.size(); ++i) {
      if (covered[i]) continue;
      GroupAuto phi = make_auto(g, auts[i], limits);
      if (!phi.identity_minus_bijective()) continue;
      // Conjugacy class {a phi a^-1}.
      const Map& p = perms[i];
      std::set<std::size_t> orbit;
      for (std::size_t a = 0; a < auts.size(); ++a) {
        Map conj(n);
        for (std::uint64_t x = 0; x < n; ++x) conj[x] = perms[a][p[inv_perms[a][x]]];
        orbit.insert(index.at(matrix_of_permutation(g, conj)));
      }
      for (std::size_t o : orbit) covered[o] = true;
      // auts is sorted, so the smallest index is the least matrix.
      classes.emplace_back(auts[*orbit.begin()], orbit.size());
    }
    std::sort(classes.begin(), classes.end());
    for (auto& [m, size] : classes) {
      out.push_back(CensusEntry{g, make_auto(g, m, limits), size});
    }
  }
  return out;
}

std::string census_line(const CensusEntry& entry) {
  std::string group = "[";
  for (std::size_t i = 0; i < entry.group.moduli().size(); ++i) {
    if (i) group += ',';
    group += std::to_string(entry.group.moduli()[i]);
  }
  group += "]";
  return "n=" + std::to_string(entry.group.order()) + " group=" + group +
         " phi=" + matrix_to_string(entry.phi.matrix());
}

}  // namespace qk
