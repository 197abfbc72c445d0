#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>

namespace envord {

/// Exact commutative coefficient ring: Z, Z/qZ (any q >= 2) or Q.
///
/// Rings are cheap to copy; two rings compare equal when they have the same
/// kind and modulus.
class Ring {
 public:
  enum class Kind { Integers, IntegersModQ, Rationals };

  static Ring integers();
  static Ring rationals();
  /// Throws DomainError when q < 2.
  static Ring integers_mod(const mpz_class& q);

  Kind kind() const noexcept { return kind_; }
  /// Zero unless kind() == IntegersModQ.
  const mpz_class& modulus() const noexcept;
  bool is_field_of_fractions() const noexcept { return kind_ == Kind::Rationals; }

  /// "Z", "Q" or "Zmod <q>".
  std::string descriptor() const;

  /// Canonical representative of `value` in this ring. Residues land in
  /// [0, q); fractions are put in lowest terms. Throws DomainError for a
  /// proper fraction outside Q.
  mpq_class canonical(const mpq_class& value) const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  Ring(Kind kind, std::shared_ptr<const mpz_class> modulus)
      : kind_(kind), modulus_(std::move(modulus)) {}

  Kind kind_;
  std::shared_ptr<const mpz_class> modulus_;
};

/// Parses "Z", "Q" or "Zmod <q>". Throws DomainError on anything else.
Ring make_ring(std::string_view descriptor);

/// Element of a Ring, always held in canonical form.
class Scalar {
 public:
  Scalar(Ring ring, long value);
  Scalar(Ring ring, const mpz_class& value);
  Scalar(Ring ring, const mpq_class& value);

  static Scalar zero(const Ring& ring) { return Scalar(ring, 0L); }
  static Scalar one(const Ring& ring) { return Scalar(ring, 1L); }

  const Ring& ring() const noexcept { return ring_; }
  const mpq_class& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  /// Structural equality of canonical forms. Throws RingMismatch.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Signed decimal, least nonnegative residue, or "a/b" ("a" when b = 1).
  std::string to_string() const;

 private:
  void require_same_ring(const Scalar& other) const;

  Ring ring_;
  mpq_class value_;
};

}  // namespace envord
