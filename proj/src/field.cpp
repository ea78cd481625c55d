#include "hopfpi/field.hpp"

#include <stdexcept>

namespace hopfpi {

bool is_small_prime(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31)) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::int64_t p) {
  if (!is_small_prime(p)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  }
  return {FieldKind::prime, p};
}

std::string FieldSpec::describe() const {
  return is_prime() ? "GF(" + std::to_string(p) + ")" : "Q";
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  a = mod_reduce(a, p);
  if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(p) + ")");
  // Extended Euclid on (a, p); p prime, so gcd is 1.
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return mod_reduce(old_s, p);
}

Scalar::Scalar(FieldSpec field, const Rat& value) : field_(field) {
  if (field_.is_prime()) {
    // Interpret a rational in GF(p): numerator * denominator^-1 mod p.
    std::int64_t num = mpz_fdiv_ui(value.get_num().get_mpz_t(), field_.p);
    std::int64_t den = mpz_fdiv_ui(value.get_den().get_mpz_t(), field_.p);
    r_ = mod_reduce(num * mod_inverse(den, field_.p), field_.p);
  } else {
    q_ = value;
    q_.canonicalize();
  }
}

Scalar::Scalar(FieldSpec field, std::int64_t value) : field_(field) {
  if (field_.is_prime()) {
    r_ = mod_reduce(value, field_.p);
  } else {
    q_ = Rat(static_cast<long>(value));
  }
}

Scalar Scalar::parse(FieldSpec field, const std::string& text) {
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
    throw std::invalid_argument("unparseable scalar: '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
    throw std::invalid_argument("zero denominator in scalar: '" + text + "'");
  }
  q.canonicalize();
  if (field.is_prime() && q.get_den() != 1) {
    throw std::invalid_argument("fractional literal '" + text + "' not allowed over " +
                                field.describe());
  }
  return Scalar(field, q);
}

bool Scalar::is_zero() const {
  return field_.is_prime() ? r_ == 0 : q_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_prime() ? r_ == 1 : q_ == 1;
}

bool Scalar::is_integer() const {
  return field_.is_prime() || q_.get_den() == 1;
}

std::int64_t Scalar::as_integer() const {
  if (field_.is_prime()) return r_;
  if (q_.get_den() != 1 || !q_.get_num().fits_slong_p()) {
    throw std::domain_error("scalar " + str() + " is not a machine integer");
  }
  return q_.get_num().get_si();
}

Scalar Scalar::negated() const {
  if (field_.is_prime()) return Scalar(field_, r_ == 0 ? 0 : field_.p - r_);
  return Scalar(field_, Rat(-q_));
}

std::string Scalar::str() const {
  return field_.is_prime() ? std::to_string(r_) : q_.get_str();
}

bool Scalar::operator==(const Scalar& other) const {
  if (!(field_ == other.field_)) return false;
  return field_.is_prime() ? r_ == other.r_ : q_ == other.q_;
}

}  // namespace hopfpi
