#include "qk/kernels.hpp"
#include "qk/properties.hpp"
#include "qk/structure.hpp"

namespace qk {
namespace {

Witness bind(std::initializer_list<std::pair<const char*, Element>> items) {
  Witness w;
  for (const auto& [name, v] : items) w.bindings.emplace_back(name, v);
  return w;
}

// Inverse of every element under (+), assuming each row contains e.
Map inverses(const CayleyTable& add, Element e) {
  Map inv(add.order());
  for (Element a = 0; a < add.order(); ++a) {
    for (Element b = 0; b < add.order(); ++b) {
      if (add(a, b) == e) {
        inv[a] = b;
        break;
      }
    }
  }
  return inv;
}

}  // namespace

std::optional<std::pair<std::string, Witness>> abelian_group_violation(const CayleyTable& add,
                                                                       Element e) {
  const std::size_t n = add.order();
  if (e >= n) return std::make_pair(std::string("identity out of range"), bind({{"e", e}}));
  for (Element a = 0; a < n; ++a) {
    if (add(e, a) != a || add(a, e) != a) {
      return std::make_pair(std::string("identity: e+a == a == a+e"), bind({{"a", a}}));
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (add(a, b) != add(b, a)) {
        return std::make_pair(std::string("commutativity: a+b == b+a"), bind({{"a", a}, {"b", b}}));
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (Element b = 0; b < n && !has_inverse; ++b) has_inverse = add(a, b) == e;
    if (!has_inverse) return std::make_pair(std::string("inverse: a+b == e"), bind({{"a", a}}));
  }
  if (auto w = kernels::omp::find_associativity_violation(add)) {
    return std::make_pair(std::string("associativity: (a+b)+c == a+(b+c)"),
                          bind({{"a", (*w)[0]}, {"b", (*w)[1]}, {"c", (*w)[2]}}));
  }
  return std::nullopt;
}

BmtCertificate bmt_certify(const CayleyTable& x, Element basepoint) {
  if (x.is_empty()) throw Error(ErrorKind::kInvalidArgument, "empty magma has no basepoint");
  if (basepoint >= x.order()) {
    throw Error(ErrorKind::kInvalidArgument, "basepoint " + std::to_string(basepoint) +
                                                 " out of range");
  }
  if (auto latin = check_latin(x); !latin.holds) {
    throw Error(ErrorKind::kNotLatin, "left multiplication is not a permutation", latin.witness);
  }
  const std::size_t n = x.order();
  const Element e = basepoint;

  BmtCertificate cert;
  cert.base_table = x;
  cert.basepoint = e;
  cert.phi = x.right_map(e);
  auto fail = [&](std::string what, Witness w) {
    cert.verified = false;
    cert.failure = std::move(what);
    cert.failure_witness = std::move(w);
    return cert;
  };

  if (!is_permutation_map(cert.phi)) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = y + 1; z < n; ++z) {
        if (cert.phi[y] == cert.phi[z]) {
          return fail("R_e is a permutation", bind({{"y", y}, {"z", z}}));
        }
      }
    }
  }
  const Map r_inv = invert_permutation(cert.phi);
  const Map l_inv = invert_permutation(x.left_map(e));
  std::vector<Element> entries(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) entries[a * n + b] = x(r_inv[a], l_inv[b]);
  }
  cert.add = CayleyTable(n, std::move(entries));
  const CayleyTable& add = cert.add;

  if (auto bad = abelian_group_violation(add, e)) return fail(bad->first, bad->second);

  const Map& phi = cert.phi;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (phi[add(a, b)] != add(phi[a], phi[b])) {
        return fail("phi is additive", bind({{"a", a}, {"b", b}}));
      }
    }
  }
  const Map neg = inverses(add, e);
  Map rest(n);  // x (-) phi(x)
  for (Element a = 0; a < n; ++a) rest[a] = add(a, neg[phi[a]]);
  if (!is_permutation_map(rest)) {
    std::vector<Element> seen(n, static_cast<Element>(-1));
    for (Element a = 0; a < n; ++a) {
      if (seen[rest[a]] != static_cast<Element>(-1)) {
        return fail("id - phi is a permutation", bind({{"y", seen[rest[a]]}, {"z", a}}));
      }
      seen[rest[a]] = a;
    }
  }
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (x(i, j) != add(phi[i], rest[j])) {
        return fail("x*y == phi(x) + (y - phi(y))", bind({{"x", i}, {"y", j}}));
      }
    }
  }
  cert.verified = true;
  return cert;
}

BmtCertificate bmt_extract(const CayleyTable& x, Element basepoint) {
  BmtCertificate cert = bmt_certify(x, basepoint);
  if (!cert.verified) {
    throw Error(ErrorKind::kVerificationFailed,
                "not a medial Latin quandle: " + cert.failure + " fails at " +
                    cert.failure_witness.to_string(),
                cert.failure_witness);
  }
  return cert;
}

AlexanderPresentation alexander_presentation(const BmtCertificate& cert) {
  if (!cert.verified) {
    throw Error(ErrorKind::kVerificationFailed, "certificate is not verified");
  }
  const CayleyTable& add = cert.add;
  const Element e = cert.basepoint;
  GroupBasis basis = group_basis(add, e);
  FinAbGroup group(std::vector<std::uint64_t>(basis.factors.begin(), basis.factors.end()));

  // Element of the carrier with the given coordinates.
  const std::size_t n = add.order();
  Map carrier_of(n);
  for (std::uint64_t idx = 0; idx < group.order(); ++idx) {
    Coords c = group.coords(idx);
    Element acc = e;
    for (std::size_t j = 0; j < c.size(); ++j) {
      for (std::uint64_t m = 0; m < c[j]; ++m) acc = add(acc, basis.generators[j]);
    }
    carrier_of[idx] = acc;
  }
  Map relabel = invert_permutation(carrier_of);

  IntMatrix m(group.rank(), std::vector<std::int64_t>(group.rank(), 0));
  for (std::size_t j = 0; j < group.rank(); ++j) {
    Coords c = group.coords(relabel[cert.phi[basis.generators[j]]]);
    for (std::size_t i = 0; i < group.rank(); ++i) m[i][j] = static_cast<std::int64_t>(c[i]);
  }
  GroupAuto phi = make_auto(group, m, Limits::uniform(group.order()));
  return AlexanderPresentation{std::move(group), std::move(phi), std::move(relabel)};
}

}  // namespace qk
