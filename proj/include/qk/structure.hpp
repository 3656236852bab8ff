#ifndef QK_STRUCTURE_HPP_
#define QK_STRUCTURE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qk/abelian.hpp"
#include "qk/limits.hpp"
#include "qk/table.hpp"

namespace qk {

// Recovered affine structure of a medial Latin quandle X on its own carrier:
// a (+) b := R_e^{-1}(a) * L_e^{-1}(b), phi := R_e, and X(i, j) must equal
// phi(i) (+) (j (-) phi(j)). The translation part vanishes by idempotence, so
// only (+) and phi are stored.
struct BmtCertificate {
  CayleyTable base_table;
  Element basepoint = 0;
  CayleyTable add;  // empty when R_e is not a permutation
  Map phi;          // R_e
  bool verified = false;
  std::string failure;  // first failed invariant, empty when verified
  Witness failure_witness;
};

// Builds and checks the certificate. Throws kNotLatin (witness x y z as in
// check_latin) and kInvalidArgument for the empty table or a bad basepoint;
// any other failure is reported in the certificate.
BmtCertificate bmt_certify(const CayleyTable& x, Element basepoint = 0);

// As bmt_certify, but a failed check throws kVerificationFailed.
BmtCertificate bmt_extract(const CayleyTable& x, Element basepoint = 0);

// First violated abelian-group axiom of (carrier, add) with identity e.
std::optional<std::pair<std::string, Witness>> abelian_group_violation(const CayleyTable& add,
                                                                       Element e);

// Basis of a finite abelian group given by its table: generators[i] has order
// factors[i], the factors are the invariant factors (each divides the next),
// and the group is the internal direct sum of the cyclic subgroups.
struct GroupBasis {
  std::vector<std::uint64_t> factors;
  std::vector<Element> generators;
};

// Primary decomposition with greedy maximal-order basis extraction per prime,
// recombined by CRT. Throws kNotAGroup with a witness.
GroupBasis group_basis(const CayleyTable& add, Element e);
std::vector<std::uint64_t> invariant_factors(const CayleyTable& add, Element e);

// An Alexander presentation of a verified certificate: relabeling X by
// `relabel` (carrier element -> group index) gives exactly
// alexander(group, phi).
struct AlexanderPresentation {
  FinAbGroup group;
  GroupAuto phi;
  Map relabel;
};
AlexanderPresentation alexander_presentation(const BmtCertificate& cert);

// Invariant factors (each >= 3, odd) of the decomposition X = C_{d1} + ... .
struct Decomposition {
  std::vector<std::uint64_t> orders;
  // "C3 + C3 + C15"; "C1" for the trivial quandle.
  std::string to_string() const;
};

// Errors: kInvalidArgument (empty), kNotCommutative / kNotMedial with
// witnesses, kNotARack / kNotAQuandle when the input is a commutative medial
// magma that is not a quandle.
Decomposition decompose_mcq(const CayleyTable& x, const Limits& limits = Limits{});

// Group isomorphism a : G1 -> G2 with a o phi1 = phi2 o a (first in search
// order), as an index map. Throws kNotLatin if either id - phi is singular.
std::optional<Map> latin_alexander_isomorphic(const GroupAuto& phi1, const GroupAuto& phi2);

// All automorphism matrices of G (entries reduced), lexicographic order.
std::vector<IntMatrix> automorphisms(const FinAbGroup& g, const Limits& limits = Limits{});

// Invariant-factor lists of the abelian groups of order n, lexicographic.
std::vector<std::vector<std::uint64_t>> abelian_groups_of_order(std::uint64_t n);

struct CensusEntry {
  FinAbGroup group;
  GroupAuto phi;           // lexicographically least matrix in its class
  std::size_t class_size;  // number of automorphisms conjugate to phi
};

// One representative per isomorphism class of medial Latin quandles of
// order n. Throws kBoundExceeded when n > limits.auto_enumeration.
std::vector<CensusEntry> enumerate_medial_latin(std::uint64_t n, const Limits& limits = Limits{});

// "n=5 group=[5] phi=[2]"
std::string census_line(const CensusEntry& entry);

}  // namespace qk

#endif  // QK_STRUCTURE_HPP_
