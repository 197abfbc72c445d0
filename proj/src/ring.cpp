#include "envord/ring.hpp"

#include <sstream>

#include "envord/error.hpp"

namespace envord {

namespace {

const mpz_class& zero_modulus() {
  static const mpz_class zero{0};
  return zero;
}

}  // namespace

Ring Ring::integers() { return Ring(Kind::Integers, nullptr); }

Ring Ring::rationals() { return Ring(Kind::Rationals, nullptr); }

Ring Ring::integers_mod(const mpz_class& q) {
  if (q < 2) throw DomainError("modulus must be at least 2, got " + q.get_str());
  return Ring(Kind::IntegersModQ, std::make_shared<const mpz_class>(q));
}

const mpz_class& Ring::modulus() const noexcept {
  return modulus_ ? *modulus_ : zero_modulus();
}

std::string Ring::descriptor() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::IntegersModQ:
      return "Zmod " + modulus_->get_str();
  }
  return {};
}

mpq_class Ring::canonical(const mpq_class& value) const {
  mpq_class v = value;
  v.canonicalize();
  if (kind_ == Kind::Rationals) return v;
  if (v.get_den() != 1)
    throw DomainError("fractional coefficient " + v.get_str() + " is not in " + descriptor());
  if (kind_ == Kind::Integers) return v;
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_num_mpz_t(), modulus_->get_mpz_t());
  return mpq_class(r);
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != Ring::Kind::IntegersModQ) return true;
  return a.modulus_ == b.modulus_ || *a.modulus_ == *b.modulus_;
}

Ring make_ring(std::string_view descriptor) {
  std::istringstream in{std::string(descriptor)};
  std::string head;
  in >> head;
  std::string extra;
  if (head == "Z" || head == "Q") {
    if (in >> extra) throw DomainError("trailing text in ring descriptor: " + extra);
    return head == "Z" ? Ring::integers() : Ring::rationals();
  }
  if (head == "Zmod") {
    std::string digits;
    if (!(in >> digits)) throw DomainError("Zmod requires a modulus");
    if (in >> extra) throw DomainError("trailing text in ring descriptor: " + extra);
    mpz_class q;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        q.set_str(digits, 10) != 0)
      throw DomainError("malformed modulus: " + digits);
    return Ring::integers_mod(q);
  }
  throw DomainError("unknown ring descriptor: '" + std::string(descriptor) + "'");
}

Scalar::Scalar(Ring ring, long value) : ring_(std::move(ring)), value_(ring_.canonical(mpq_class(value))) {}

Scalar::Scalar(Ring ring, const mpz_class& value)
    : ring_(std::move(ring)), value_(ring_.canonical(mpq_class(value))) {}

Scalar::Scalar(Ring ring, const mpq_class& value) : ring_(std::move(ring)), value_(ring_.canonical(value)) {}

void Scalar::require_same_ring(const Scalar& other) const {
  if (!(ring_ == other.ring_))
    throw RingMismatch("scalars from " + ring_.descriptor() + " and " + other.ring_.descriptor());
}

Scalar Scalar::operator-() const { return Scalar(ring_, mpq_class(-value_)); }

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_ring(other);
  value_ = ring_.canonical(value_ + other.value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_ring(other);
  value_ = ring_.canonical(value_ - other.value_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_ring(other);
  value_ = ring_.canonical(value_ * other.value_);
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_ring(b);
  return a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace envord
