#ifndef QK_LOC_LAURENT_HPP_
#define QK_LOC_LAURENT_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qk/dyadic.hpp"

namespace qk {

// Integer polynomial, ascending coefficients, no trailing zeros (zero is empty).
using Poly = std::vector<mpz_class>;

// Exact element poly(t) / (t^a (1-t)^b) of Z[t, 1/t, 1/(1-t)].
// Canonical: zero is (empty, 0, 0); otherwise poly(0) != 0 and poly(1) != 0,
// i.e. every factor t or (1-t) of the numerator has been moved into a or b.
class LocLaurent {
 public:
  LocLaurent() = default;
  LocLaurent(long value);  // NOLINT(google-explicit-constructor)
  LocLaurent(Poly poly, long a, long b);

  static LocLaurent t();
  static LocLaurent one_minus_t();

  const Poly& poly() const { return poly_; }
  long a() const { return a_; }
  long b() const { return b_; }
  bool is_zero() const { return poly_.empty(); }

  // Units are exactly +-t^k (1-t)^m, i.e. canonical poly == +-1.
  bool is_unit() const;
  // Throws Error(kNotAUnit) for non-units.
  LocLaurent inverse() const;

  // Image under the ring map t -> 1/2 (both t and 1-t go to the unit 1/2).
  Dyadic specialize_half() const;

  friend LocLaurent operator+(const LocLaurent& x, const LocLaurent& y);
  friend LocLaurent operator-(const LocLaurent& x, const LocLaurent& y);
  friend LocLaurent operator*(const LocLaurent& x, const LocLaurent& y);
  LocLaurent operator-() const;

  friend bool operator==(const LocLaurent& x, const LocLaurent& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.poly_ == y.poly_;
  }

  // "(poly) * t^(-a) * (1-t)^(-b)", factors with zero exponent omitted.
  std::string to_string() const;

 private:
  void normalize();

  Poly poly_;
  long a_ = 0;
  long b_ = 0;
};

std::string poly_to_string(const Poly& p);

}  // namespace qk

#endif  // QK_LOC_LAURENT_HPP_
