#include <doctest.h>

#include "hj/galois.hpp"

using hj::GaloisField;

TEST_CASE("field axioms hold exhaustively at small orders") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    auto f = GaloisField::of_order(q);
    REQUIRE(f.order() == q);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (std::uint32_t c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("GF(4) arithmetic matches x^2 = x + 1") {
  auto f = GaloisField::of_order(4);
  // element 2 encodes x, element 3 encodes x+1
  CHECK(f.mul(2, 2) == 3);
  CHECK(f.mul(2, 3) == 1);
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(GaloisField::of_order(6), hj::Error);
  try {
    GaloisField::of_order(6);
  } catch (const hj::Error& e) {
    CHECK(e.code() == hj::Errc::UnsupportedOrder);
  }
  try {
    GaloisField::of_order(32);  // prime power, no built-in modulus
  } catch (const hj::Error& e) {
    CHECK(e.code() == hj::Errc::BadField);
  }
  // x^2 + 1 factors over GF(2)
  CHECK_THROWS_AS(GaloisField(2, 2, {1, 0, 1}), hj::Error);
  // 4 is not prime
  CHECK_THROWS_AS(GaloisField(4, 1, {0, 1}), hj::Error);
  auto f = GaloisField::of_order(5);
  CHECK_THROWS_AS(f.inv(0), hj::Error);
}

TEST_CASE("explicit modulus override") {
  // x^2 + x + 2 is irreducible over GF(5) as well
  GaloisField f(5, 2, {2, 1, 1});
  CHECK(f.order() == 25);
  for (std::uint32_t a = 1; a < 25; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}
