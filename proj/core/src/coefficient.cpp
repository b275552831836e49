#include "indvar/coefficient.hpp"

#include <stdexcept>

#include "indvar/errors.hpp"

namespace indvar {

Coefficient Coefficient::rational(mpq_class v) {
  Coefficient c;
  v.canonicalize();
  c.q_ = std::move(v);
  return c;
}

Coefficient Coefficient::rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  mpq_class v(num, den);
  v.canonicalize();
  return rational(std::move(v));
}

Coefficient Coefficient::mod_p(std::uint64_t value, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("modulus must be a prime >= 2");
  Coefficient c;
  c.prime_ = p;
  c.r_ = value % p;
  return c;
}

bool Coefficient::is_zero() const {
  return is_rational() ? q_ == 0 : r_ == 0;
}

bool Coefficient::is_one() const {
  return is_rational() ? q_ == 1 : r_ == 1;
}

const mpq_class& Coefficient::rational_value() const {
  if (!is_rational()) throw FieldMismatchError("rational_value() on an F_p element");
  return q_;
}

std::uint64_t Coefficient::mod_p_value() const {
  if (is_rational()) throw FieldMismatchError("mod_p_value() on a rational");
  return r_;
}

void Coefficient::check_same_field(const Coefficient& o) const {
  if (prime_ != o.prime_)
    throw FieldMismatchError("mixed coefficient fields (Q vs F_p or distinct primes)");
}

Coefficient Coefficient::operator-() const {
  Coefficient c(*this);
  if (is_rational()) {
    c.q_ = -q_;
  } else {
    c.r_ = r_ == 0 ? 0 : prime_ - r_;
  }
  return c;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  check_same_field(o);
  if (is_rational()) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= prime_) r_ -= prime_;
  }
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  check_same_field(o);
  if (is_rational()) {
    q_ -= o.q_;
  } else {
    r_ = (r_ >= o.r_) ? r_ - o.r_ : r_ + prime_ - o.r_;
  }
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  check_same_field(o);
  if (is_rational()) {
    q_ *= o.q_;
  } else {
    r_ = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(r_) * o.r_) % prime_);
  }
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
  check_same_field(o);
  if (o.is_zero()) throw std::domain_error("division by zero coefficient");
  if (is_rational()) {
    q_ /= o.q_;
  } else {
    *this *= o.inverse();
  }
  return *this;
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero coefficient");
  if (is_rational()) return rational(1 / q_);
  return mod_p(mod_inverse(r_, prime_), prime_);
}

bool Coefficient::operator==(const Coefficient& o) const {
  if (prime_ != o.prime_) return false;
  return is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Coefficient::str() const {
  if (is_rational()) return q_.get_str();
  return std::to_string(r_);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on (a, p) with p prime and 0 < a < p.
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a % p);
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element not invertible mod p");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace indvar
