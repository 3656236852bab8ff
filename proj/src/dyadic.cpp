#include "qk/dyadic.hpp"

namespace qk {

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  unsigned long twos = mpz_scan1(num_.get_mpz_t(), 0);
  unsigned long shift = twos < exp_ ? twos : exp_;
  if (shift > 0) {
    mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
    exp_ -= shift;
  }
}

Dyadic Dyadic::scaled(mpz_class num, long shift) {
  if (shift >= 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(shift));
    return Dyadic(std::move(num), 0UL);
  }
  return Dyadic(std::move(num), static_cast<unsigned long>(-shift));
}

Dyadic Dyadic::halve() const {
  if (is_zero()) return *this;
  return Dyadic(num_, exp_ + 1);
}

Dyadic Dyadic::twice() const { return scaled(num_, 1L - static_cast<long>(exp_)); }

Dyadic operator+(const Dyadic& x, const Dyadic& y) {
  const unsigned long e = x.exp_ > y.exp_ ? x.exp_ : y.exp_;
  mpz_class a = x.num_, b = y.num_;
  mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), e - x.exp_);
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), e - y.exp_);
  return Dyadic(mpz_class(a + b), e);
}

Dyadic operator-(const Dyadic& x, const Dyadic& y) { return x + (-y); }

Dyadic operator*(const Dyadic& x, const Dyadic& y) {
  return Dyadic(mpz_class(x.num_ * y.num_), x.exp_ + y.exp_);
}

Dyadic Dyadic::operator-() const { return Dyadic(mpz_class(-num_), exp_); }

std::string Dyadic::to_string() const {
  if (exp_ == 0) return num_.get_str();
  return num_.get_str() + "/2^" + std::to_string(exp_);
}

}  // namespace qk
