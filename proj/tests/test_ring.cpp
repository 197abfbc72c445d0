#include <gtest/gtest.h>

#include <random>

#include "envord/error.hpp"
#include "envord/ring.hpp"

using namespace envord;

TEST(Ring, MakeRingDescriptors) {
  EXPECT_EQ(make_ring("Z").kind(), Ring::Kind::Integers);
  EXPECT_EQ(make_ring("Q").kind(), Ring::Kind::Rationals);
  const Ring z4 = make_ring("Zmod 4");
  EXPECT_EQ(z4.kind(), Ring::Kind::IntegersModQ);
  EXPECT_EQ(z4.modulus(), 4);
  EXPECT_EQ(z4.descriptor(), "Zmod 4");
  EXPECT_EQ(make_ring("Zmod   123456789012345678901234567890").modulus(),
            mpz_class("123456789012345678901234567890"));
}

TEST(Ring, MakeRingRejects) {
  EXPECT_THROW(make_ring("Zmod 1"), DomainError);
  EXPECT_THROW(make_ring("Zmod 0"), DomainError);
  EXPECT_THROW(make_ring("Zmod -3"), DomainError);
  EXPECT_THROW(make_ring("Zmod"), DomainError);
  EXPECT_THROW(make_ring("Zmod 4 5"), DomainError);
  EXPECT_THROW(make_ring("R"), DomainError);
  EXPECT_THROW(make_ring(""), DomainError);
  EXPECT_THROW(make_ring("Z Q"), DomainError);
}

TEST(Scalar, ArithmeticExamples) {
  const Ring z4 = make_ring("Zmod 4");
  EXPECT_EQ((Scalar(z4, 2L) + Scalar(z4, 3L)).to_string(), "1");
  EXPECT_TRUE((Scalar(z4, 2L) * Scalar(z4, 2L)).is_zero());
  const Ring q = Ring::rationals();
  EXPECT_EQ((Scalar(q, mpq_class(1, 2)) + Scalar(q, mpq_class(1, 3))).to_string(), "5/6");
  EXPECT_EQ((-Scalar(Ring::integers(), 7L)).to_string(), "-7");
  EXPECT_EQ((-Scalar(z4, 1L)).to_string(), "3");
}

TEST(Scalar, Equality) {
  const Ring z4 = make_ring("Zmod 4");
  EXPECT_TRUE(Scalar(z4, 4L) == Scalar(z4, 0L));
  EXPECT_TRUE(Scalar(Ring::rationals(), mpq_class(2, 4)) == Scalar(Ring::rationals(), mpq_class(1, 2)));
  EXPECT_FALSE(Scalar(Ring::integers(), 1L) == Scalar(Ring::integers(), 2L));
}

TEST(Scalar, RingMismatchThrows) {
  const Scalar a(Ring::integers(), 1L);
  const Scalar b(Ring::rationals(), 1L);
  EXPECT_THROW(a + b, RingMismatch);
  EXPECT_THROW(a * b, RingMismatch);
  EXPECT_THROW((void)(a == b), RingMismatch);
  EXPECT_THROW((void)(Scalar(make_ring("Zmod 4"), 1L) == Scalar(make_ring("Zmod 5"), 1L)), RingMismatch);
  EXPECT_NO_THROW((void)(Scalar(make_ring("Zmod 4"), 1L) == Scalar(Ring::integers_mod(4), 1L)));
}

TEST(Scalar, FractionsOutsideQRejected) {
  EXPECT_THROW(Scalar(Ring::integers(), mpq_class(1, 2)), DomainError);
  EXPECT_THROW(Scalar(make_ring("Zmod 3"), mpq_class(1, 2)), DomainError);
  EXPECT_NO_THROW(Scalar(Ring::integers(), mpq_class(4, 2)));
}

TEST(Scalar, Printing) {
  EXPECT_EQ(Scalar(Ring::integers(), -12L).to_string(), "-12");
  EXPECT_EQ(Scalar(make_ring("Zmod 7"), -1L).to_string(), "6");
  EXPECT_EQ(Scalar(Ring::rationals(), mpq_class(-6, 4)).to_string(), "-3/2");
  EXPECT_EQ(Scalar(Ring::rationals(), mpq_class(6, 3)).to_string(), "2");
}

TEST(Scalar, BigIntegersDoNotOverflow) {
  const Ring z = Ring::integers();
  Scalar x(z, 1L);
  for (int i = 0; i < 100; ++i) x *= Scalar(z, 10L);
  EXPECT_EQ(x.to_string(), "1" + std::string(100, '0'));
}

namespace {

void expect_ring_axioms(const Scalar& a, const Scalar& b, const Scalar& c) {
  const Scalar zero = Scalar::zero(a.ring());
  EXPECT_TRUE((a + b) + c == a + (b + c));
  EXPECT_TRUE((a * b) * c == a * (b * c));
  EXPECT_TRUE(a + b == b + a);
  EXPECT_TRUE(a * b == b * a);
  EXPECT_TRUE(a * (b + c) == a * b + a * c);
  EXPECT_TRUE(a + (-a) == zero);
  EXPECT_TRUE(a * Scalar::one(a.ring()) == a);
}

}  // namespace

TEST(Scalar, RingAxiomsExhaustiveModQ) {
  for (long q = 2; q <= 8; ++q) {
    const Ring r = Ring::integers_mod(q);
    for (long a = 0; a < q; ++a)
      for (long b = 0; b < q; ++b)
        for (long c = 0; c < q; ++c) expect_ring_axioms(Scalar(r, a), Scalar(r, b), Scalar(r, c));
  }
}

TEST(Scalar, RingAxiomsRandomZAndQ) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int i = 0; i < 1000; ++i) {
    const Ring z = Ring::integers();
    expect_ring_axioms(Scalar(z, num(rng)), Scalar(z, num(rng)), Scalar(z, num(rng)));
    const Ring q = Ring::rationals();
    expect_ring_axioms(Scalar(q, mpq_class(num(rng), den(rng))), Scalar(q, mpq_class(num(rng), den(rng))),
                       Scalar(q, mpq_class(num(rng), den(rng))));
  }
}

TEST(Scalar, CanonicalizationIsIdempotent) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 60);
  for (const Ring& r : {Ring::integers(), Ring::rationals(), Ring::integers_mod(6), Ring::integers_mod(97)}) {
    for (int i = 0; i < 300; ++i) {
      mpq_class raw = r.kind() == Ring::Kind::Rationals ? mpq_class(num(rng), den(rng)) : mpq_class(num(rng));
      const mpq_class once = r.canonical(raw);
      EXPECT_EQ(r.canonical(once), once);
      if (r.kind() == Ring::Kind::IntegersModQ) {
        EXPECT_GE(once, 0);
        EXPECT_LT(once, r.modulus());
      }
      if (r.kind() == Ring::Kind::Rationals) {
        EXPECT_GT(once.get_den(), 0);
      }
    }
  }
}
