#include "qk/abelian.hpp"

#include <cctype>
#include <charconv>

namespace qk {
namespace {

std::uint64_t mod(std::int64_t v, std::uint64_t d) {
  auto sd = static_cast<std::int64_t>(d);
  std::int64_t r = v % sd;
  return static_cast<std::uint64_t>(r < 0 ? r + sd : r);
}

[[noreturn]] void parse_fail(std::string_view what, std::string_view spec, std::size_t pos) {
  throw Error(ErrorKind::kParse, std::string(what) + " at position " + std::to_string(pos) +
                                     " in '" + std::string(spec) + "'");
}

}  // namespace

FinAbGroup::FinAbGroup(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
  for (auto d : moduli_) {
    if (d < 2) throw Error(ErrorKind::kInvalidArgument, "cyclic factor order must be >= 2");
    if (order_ > UINT64_MAX / d) throw Error(ErrorKind::kBoundExceeded, "group order overflows");
    order_ *= d;
  }
}

Coords FinAbGroup::coords(std::uint64_t index) const {
  Coords c(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    c[i] = index % moduli_[i];
    index /= moduli_[i];
  }
  return c;
}

std::uint64_t FinAbGroup::index(const Coords& c) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) idx = idx * moduli_[i] + c[i] % moduli_[i];
  return idx;
}

std::uint64_t FinAbGroup::add(std::uint64_t x, std::uint64_t y) const {
  std::uint64_t out = 0, scale = 1;
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    const auto d = moduli_[i];
    out += ((x % d + y % d) % d) * scale;
    scale *= d;
    x /= d;
    y /= d;
  }
  return out;
}

std::uint64_t FinAbGroup::neg(std::uint64_t x) const {
  std::uint64_t out = 0, scale = 1;
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    const auto d = moduli_[i];
    out += ((d - x % d) % d) * scale;
    scale *= d;
    x /= d;
  }
  return out;
}

std::uint64_t FinAbGroup::sub(std::uint64_t x, std::uint64_t y) const { return add(x, neg(y)); }

std::uint64_t FinAbGroup::generator(std::size_t j) const {
  Coords c(moduli_.size(), 0);
  c.at(j) = 1;
  return index(c);
}

std::string FinAbGroup::to_string() const {
  if (moduli_.empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += 'x';
    out += 'Z' + std::to_string(moduli_[i]);
  }
  return out;
}

FinAbGroup parse_group_spec(std::string_view spec) {
  std::vector<std::uint64_t> moduli;
  std::size_t pos = 0;
  if (spec.empty()) parse_fail("empty group spec", spec, 0);
  while (true) {
    if (pos >= spec.size() || spec[pos] != 'Z') parse_fail("expected 'Z'", spec, pos);
    ++pos;
    std::uint64_t d = 0;
    auto [ptr, ec] = std::from_chars(spec.data() + pos, spec.data() + spec.size(), d);
    if (ec != std::errc()) parse_fail("expected a cyclic order", spec, pos);
    pos = static_cast<std::size_t>(ptr - spec.data());
    if (d == 0) parse_fail("cyclic order must be positive", spec, pos);
    if (d > 1) moduli.push_back(d);
    if (pos == spec.size()) break;
    if (spec[pos] != 'x') parse_fail("expected 'x'", spec, pos);
    ++pos;
  }
  return FinAbGroup(std::move(moduli));
}

IntMatrix parse_matrix(std::string_view spec) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < spec.size() && std::isspace(static_cast<unsigned char>(spec[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= spec.size() || spec[pos] != c) {
      parse_fail(std::string("expected '") + c + "'", spec, pos);
    }
    ++pos;
  };
  auto peek = [&]() -> char {
    skip_ws();
    return pos < spec.size() ? spec[pos] : '\0';
  };
  auto parse_int = [&]() -> std::int64_t {
    skip_ws();
    std::int64_t v = 0;
    const char* begin = spec.data() + pos;
    if (pos < spec.size() && spec[pos] == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, spec.data() + spec.size(), v);
    if (ec != std::errc()) parse_fail("expected an integer", spec, pos);
    pos = static_cast<std::size_t>(ptr - spec.data());
    return v;
  };
  auto parse_row = [&]() {
    std::vector<std::int64_t> row;
    expect('[');
    if (peek() != ']') {
      row.push_back(parse_int());
      while (peek() == ',') {
        ++pos;
        row.push_back(parse_int());
      }
    }
    expect(']');
    return row;
  };

  IntMatrix m;
  expect('[');
  if (peek() == ']') {
    ++pos;
  } else if (peek() == '[') {
    m.push_back(parse_row());
    while (peek() == ',') {
      ++pos;
      m.push_back(parse_row());
    }
    expect(']');
  } else {
    // "[2]" is the 1x1 matrix.
    m.push_back({parse_int()});
    expect(']');
  }
  skip_ws();
  if (pos != spec.size()) parse_fail("trailing characters", spec, pos);
  for (const auto& row : m) {
    if (row.size() != m.size()) parse_fail("matrix is not square", spec, pos);
  }
  return m;
}

std::string matrix_to_string(const IntMatrix& m) {
  if (m.size() == 1 && m[0].size() == 1) return "[" + std::to_string(m[0][0]) + "]";
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(m[i][j]);
    }
    out += ']';
  }
  return out + "]";
}

std::optional<std::pair<std::size_t, std::size_t>> ill_defined_entry(const FinAbGroup& g,
                                                                     const IntMatrix& m) {
  const auto& d = g.moduli();
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      unsigned __int128 prod = static_cast<unsigned __int128>(mod(m[i][j], d[i])) * d[j];
      if (prod % d[i] != 0) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

std::uint64_t apply_matrix(const FinAbGroup& g, const IntMatrix& m, std::uint64_t x) {
  const auto& d = g.moduli();
  const Coords c = g.coords(x);
  Coords out(d.size(), 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    unsigned __int128 acc = 0;
    for (std::size_t j = 0; j < d.size(); ++j) {
      acc += static_cast<unsigned __int128>(mod(m[i][j], d[i])) * c[j];
    }
    out[i] = static_cast<std::uint64_t>(acc % d[i]);
  }
  return g.index(out);
}

std::optional<std::uint64_t> kernel_witness(const FinAbGroup& g, const IntMatrix& m) {
  for (std::uint64_t x = 1; x < g.order(); ++x) {
    if (apply_matrix(g, m, x) == 0) return x;
  }
  return std::nullopt;
}

IntMatrix identity_matrix(std::size_t k) {
  IntMatrix m(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
  return m;
}

IntMatrix reduce_matrix(const FinAbGroup& g, IntMatrix m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (auto& v : m[i]) v = static_cast<std::int64_t>(mod(v, g.moduli()[i]));
  }
  return m;
}

GroupAuto make_auto(const FinAbGroup& g, const IntMatrix& m, const Limits& limits) {
  if (m.size() != g.rank()) {
    throw Error(ErrorKind::kInvalidArgument, "matrix has " + std::to_string(m.size()) +
                                                 " rows, group has rank " +
                                                 std::to_string(g.rank()));
  }
  for (const auto& row : m) {
    if (row.size() != g.rank()) throw Error(ErrorKind::kInvalidArgument, "matrix is not square");
  }
  if (auto bad = ill_defined_entry(g, m)) {
    auto [i, j] = *bad;
    Witness w;
    w.bindings = {{"i", static_cast<Element>(i)}, {"j", static_cast<Element>(j)}};
    throw Error(ErrorKind::kIllDefined,
                "entry (" + std::to_string(i) + "," + std::to_string(j) + ") times " +
                    std::to_string(g.moduli()[j]) + " is nonzero mod " +
                    std::to_string(g.moduli()[i]),
                w);
  }
  if (g.order() > limits.bijectivity_scan) {
    throw Error(ErrorKind::kBoundExceeded, "group order " + std::to_string(g.order()) +
                                               " exceeds the bijectivity scan bound " +
                                               std::to_string(limits.bijectivity_scan));
  }
  IntMatrix reduced = reduce_matrix(g, m);
  if (auto k = kernel_witness(g, reduced)) {
    Witness w;
    w.bindings = {{"x", static_cast<Element>(*k)}};
    throw Error(ErrorKind::kNotBijective,
                "nonzero kernel element " + std::to_string(*k), w);
  }
  return GroupAuto(g, std::move(reduced));
}

Map GroupAuto::permutation() const {
  Map out(group_.order());
  for (std::uint64_t x = 0; x < group_.order(); ++x) out[x] = static_cast<Element>(apply(x));
  return out;
}

IntMatrix GroupAuto::identity_minus() const {
  IntMatrix m = identity_matrix(group_.rank());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] -= matrix_[i][j];
  }
  return reduce_matrix(group_, std::move(m));
}

bool GroupAuto::identity_minus_bijective() const {
  return !kernel_witness(group_, identity_minus()).has_value();
}

CayleyTable alexander(const FinAbGroup& g, const GroupAuto& phi, const Limits& limits) {
  if (!(phi.group() == g)) {
    throw Error(ErrorKind::kMismatch, "automorphism is defined on " + phi.group().to_string() +
                                          ", not " + g.to_string());
  }
  const std::uint64_t n = g.order();
  if (n > limits.table_order) {
    throw Error(ErrorKind::kBoundExceeded, "table order " + std::to_string(n) + " exceeds " +
                                               std::to_string(limits.table_order));
  }
  std::vector<std::uint64_t> phi_of(n), rest_of(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    phi_of[x] = phi.apply(x);
    rest_of[x] = g.sub(x, phi_of[x]);
  }
  std::vector<Element> entries(n * n);
#pragma omp parallel for schedule(static)
  for (std::int64_t x = 0; x < static_cast<std::int64_t>(n); ++x) {
    for (std::uint64_t y = 0; y < n; ++y) {
      entries[static_cast<std::uint64_t>(x) * n + y] =
          static_cast<Element>(g.add(phi_of[static_cast<std::uint64_t>(x)], rest_of[y]));
    }
  }
  return CayleyTable(n, std::move(entries));
}

GroupAuto halving_auto(const FinAbGroup& g) {
  IntMatrix m = identity_matrix(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const auto d = g.moduli()[i];
    if (d % 2 == 0) {
      throw Error(ErrorKind::kEvenOrder, g.to_string() + " has even order; 2 is not invertible");
    }
    m[i][i] = static_cast<std::int64_t>((d + 1) / 2);
  }
  return make_auto(g, m, Limits::uniform(g.order()));
}

CayleyTable midpoint(const FinAbGroup& g, const Limits& limits) {
  return alexander(g, halving_auto(g), limits);
}

CayleyTable cyclic_midpoint(std::uint64_t m, const Limits& limits) {
  if (m == 0) return midpoint(FinAbGroup(), limits);
  return midpoint(FinAbGroup({2 * m + 1}), limits);
}

}  // namespace qk
