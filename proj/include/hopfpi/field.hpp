#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hopfpi {

/// Arbitrary-precision rational, always kept in canonical form
/// (coprime numerator/denominator, positive denominator).
using Rat = mpq_class;

enum class FieldKind { rationals, prime };

/// Coefficient field of a structure: either the rationals or GF(p)
/// for a prime p with p < 2^31 (so products of residues fit in int64).
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::int64_t p = 0;

  static FieldSpec rationals() { return {FieldKind::rationals, 0}; }

  /// Throws std::invalid_argument if p is not a prime in range.
  static FieldSpec prime_field(std::int64_t p);

  bool is_prime() const { return kind == FieldKind::prime; }
  bool operator==(const FieldSpec&) const = default;

  std::string describe() const;
};

bool is_small_prime(std::int64_t p);

/// Inverse of a mod p; a need not be reduced. Throws on a == 0 (mod p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

/// Reduce into [0, p).
inline std::int64_t mod_reduce(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

/// A single field element, used at API boundaries (parsing, printing,
/// entry access). Bulk arithmetic lives in Matrix, not here.
class Scalar {
 public:
  Scalar() = default;
  Scalar(FieldSpec field, const Rat& value);
  Scalar(FieldSpec field, std::int64_t value);

  /// Accepts "a", "-a" or "a/b" over the rationals, an integer over GF(p).
  static Scalar parse(FieldSpec field, const std::string& text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rationals payload; only valid when field().kind == rationals.
  const Rat& rat() const { return q_; }
  /// GF(p) residue in [0, p); only valid for prime fields.
  std::int64_t residue() const { return r_; }

  /// True when the value is an integer (residues always are).
  bool is_integer() const;
  std::int64_t as_integer() const;

  Scalar negated() const;

  std::string str() const;
  bool operator==(const Scalar& other) const;

 private:
  FieldSpec field_{};
  Rat q_{0};
  std::int64_t r_ = 0;
};

}  // namespace hopfpi
