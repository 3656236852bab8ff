#ifndef QK_DYADIC_HPP_
#define QK_DYADIC_HPP_

#include <gmpxx.h>

#include <string>

namespace qk {

// Exact element num / 2^exp of Z[1/2]. Canonical: exp == 0 or num odd; zero
// is (0, 0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Dyadic(mpz_class value) : num_(std::move(value)) {}

  // num * 2^shift for any integer shift.
  static Dyadic scaled(mpz_class num, long shift);

  const mpz_class& num() const { return num_; }
  unsigned long exp() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  Dyadic halve() const;
  Dyadic twice() const;

  friend Dyadic operator+(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator-(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator*(const Dyadic& x, const Dyadic& y);
  Dyadic operator-() const;

  friend bool operator==(const Dyadic& x, const Dyadic& y) {
    return x.exp_ == y.exp_ && x.num_ == y.num_;
  }

  // "num" when exp == 0, otherwise "num/2^exp".
  std::string to_string() const;

 private:
  Dyadic(mpz_class num, unsigned long exp) : num_(std::move(num)), exp_(exp) { normalize(); }
  void normalize();

  mpz_class num_ = 0;
  unsigned long exp_ = 0;
};

}  // namespace qk

#endif  // QK_DYADIC_HPP_
