#include "qk/loc_laurent.hpp"

#include <algorithm>

#include "qk/error.hpp"

namespace qk {
namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& x, const Poly& y) {
  if (x.empty() || y.empty()) return {};
  Poly out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  trim(out);
  return out;
}

Poly shift_up(const Poly& p, long k) {
  if (p.empty() || k == 0) return p;
  Poly out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

// p * (1-t)^k, k >= 0.
Poly times_one_minus_t(Poly p, long k) {
  for (long i = 0; i < k && !p.empty(); ++i) {
    Poly out(p.size() + 1, 0);
    for (std::size_t j = 0; j < p.size(); ++j) {
      out[j] += p[j];
      out[j + 1] -= p[j];
    }
    trim(out);
    p = std::move(out);
  }
  return p;
}

mpz_class value_at_one(const Poly& p) {
  mpz_class s = 0;
  for (const auto& c : p) s += c;
  return s;
}

}  // namespace

LocLaurent::LocLaurent(long value) {
  if (value != 0) poly_.push_back(mpz_class(value));
}

LocLaurent::LocLaurent(Poly poly, long a, long b) : poly_(std::move(poly)), a_(a), b_(b) {
  normalize();
}

LocLaurent LocLaurent::t() { return LocLaurent(Poly{0, 1}, 0, 0); }
LocLaurent LocLaurent::one_minus_t() { return LocLaurent(Poly{1, -1}, 0, 0); }

void LocLaurent::normalize() {
  trim(poly_);
  if (poly_.empty()) {
    a_ = b_ = 0;
    return;
  }
  // Factors of t.
  auto nz = std::find_if(poly_.begin(), poly_.end(), [](const mpz_class& c) { return c != 0; });
  long zeros = nz - poly_.begin();
  if (zeros > 0) {
    poly_.erase(poly_.begin(), nz);
    a_ -= zeros;
  }
  // Factors of (1-t): exact synthetic division while p(1) == 0.
  while (poly_.size() > 1 && value_at_one(poly_) == 0) {
    // p = (t - 1) r, then p = (1 - t)(-r).
    const std::size_t d = poly_.size() - 1;
    Poly r(d, 0);
    r[d - 1] = poly_[d];
    for (std::size_t k = d - 1; k >= 1; --k) r[k - 1] = poly_[k] + r[k];
    for (auto& c : r) c = -c;
    poly_ = std::move(r);
    b_ -= 1;
  }
}

bool LocLaurent::is_unit() const {
  return poly_.size() == 1 && (poly_[0] == 1 || poly_[0] == -1);
}

LocLaurent LocLaurent::inverse() const {
  if (!is_unit()) throw Error(ErrorKind::kNotAUnit, to_string() + " is not a unit");
  return LocLaurent(poly_, -a_, -b_);
}

Dyadic LocLaurent::specialize_half() const {
  if (poly_.empty()) return Dyadic();
  // poly(1/2) = (sum c_k 2^(d-k)) / 2^d, and 1/(t^a (1-t)^b) -> 2^(a+b).
  const long d = static_cast<long>(poly_.size()) - 1;
  mpz_class num = 0;
  for (long k = 0; k <= d; ++k) num = num * 2 + poly_[static_cast<std::size_t>(k)];
  return Dyadic::scaled(std::move(num), a_ + b_ - d);
}

LocLaurent operator+(const LocLaurent& x, const LocLaurent& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const long a = std::max(x.a_, y.a_);
  const long b = std::max(x.b_, y.b_);
  Poly px = times_one_minus_t(shift_up(x.poly_, a - x.a_), b - x.b_);
  Poly py = times_one_minus_t(shift_up(y.poly_, a - y.a_), b - y.b_);
  if (px.size() < py.size()) px.swap(py);
  for (std::size_t i = 0; i < py.size(); ++i) px[i] += py[i];
  return LocLaurent(std::move(px), a, b);
}

LocLaurent operator-(const LocLaurent& x, const LocLaurent& y) { return x + (-y); }

LocLaurent operator*(const LocLaurent& x, const LocLaurent& y) {
  if (x.is_zero() || y.is_zero()) return LocLaurent();
  return LocLaurent(mul(x.poly_, y.poly_), x.a_ + y.a_, x.b_ + y.b_);
}

LocLaurent LocLaurent::operator-() const {
  LocLaurent out = *this;
  for (auto& c : out.poly_) c = -c;
  return out;
}

std::string poly_to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    mpz_class mag = abs(p[k]);
    const bool negative = p[k] < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::string LocLaurent::to_string() const {
  if (is_zero()) return "0";
  std::string out = "(" + poly_to_string(poly_) + ")";
  if (a_ != 0) out += " * t^(" + std::to_string(-a_) + ")";
  if (b_ != 0) out += " * (1-t)^(" + std::to_string(-b_) + ")";
  return out;
}

}  // namespace qk
