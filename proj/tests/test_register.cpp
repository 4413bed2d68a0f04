#include <catch2/catch_amalgamated.hpp>

#include "fockdigits/register.hpp"

#include "matchers.hpp"
#include "oracles.hpp"

using namespace fockdigits;

TEST_CASE("encode_digits produces little-endian zero-padded digits") {
  const RegisterSpec b2q3 = RegisterSpec::finite(2, 3);
  CHECK(encode_digits(5, b2q3).digits() == std::vector<Digit>{1, 0, 1});

  const RegisterSpec b7q4 = RegisterSpec::finite(7, 4);
  CHECK(encode_digits(0, b7q4).digits() == std::vector<Digit>{0, 0, 0, 0});

  const RegisterSpec b16q2 = RegisterSpec::finite(16, 2);
  CHECK(encode_digits(255, b16q2).digits() == std::vector<Digit>{15, 15});
}

TEST_CASE("encode_digits rejects values beyond capacity") {
  const RegisterSpec spec = RegisterSpec::finite(2, 3);
  CHECK_THROWS_MATCHES(encode_digits(8, spec), Error, kind_is(ErrorKind::OutOfRange));
}

TEST_CASE("decode_digits is the positional sum") {
  CHECK(decode_digits(DigitVector(2, {1, 0, 1})) == 5);
  CHECK(decode_digits(DigitVector(10, {})) == 0);
  CHECK(decode_digits(DigitVector(10, {9, 9})) == 99);
}

TEST_CASE("DigitVector rejects digits at or above the base") {
  CHECK_THROWS_MATCHES(DigitVector(10, {3, 10}), Error, kind_is(ErrorKind::InvalidDigit));
}

TEST_CASE("slot_count_for compares against integer powers") {
  CHECK(slot_count_for(5, 2) == 3);
  CHECK(slot_count_for(1, 10) == 1);
  CHECK(slot_count_for(1000, 10) == 4);
  CHECK(slot_count_for(999, 10) == 3);
  CHECK(slot_count_for(0, 7) == 1);  // single zero digit by convention

  for (Natural b : {2ull, 3ull, 10ull, 16ull}) {
    for (Natural n = 1; n <= 4096; ++n) {
      CAPTURE(n, b);
      REQUIRE(slot_count_for(n, b) == oracle::smallest_power_above(n, b));
    }
  }
}

TEST_CASE("capacity is b^q - 1 with checked overflow") {
  CHECK(RegisterSpec::finite(2, 3).capacity() == 7);
  CHECK(RegisterSpec::finite(10, 1).capacity() == 9);
  CHECK(RegisterSpec::finite(3, 2).capacity() == 8);
  CHECK_THROWS_MATCHES(RegisterSpec::finite(10, 30).capacity(), Error, kind_is(ErrorKind::Overflow));
}

TEST_CASE("round trip and digit bounds across whole registers") {
  for (const auto& [b, q] : std::vector<std::pair<Natural, std::size_t>>{
           {2, 6}, {3, 4}, {10, 3}, {16, 2}}) {
    const RegisterSpec spec = RegisterSpec::finite(b, q);
    for (Natural n = 0; n <= spec.capacity(); ++n) {
      CAPTURE(b, q, n);
      const DigitVector d = encode_digits(n, spec);
      REQUIRE(d.size() == q);
      for (Digit g : d.digits()) {
        REQUIRE(g < b);
      }
      REQUIRE(decode_digits(d) == n);
    }
  }
}

TEST_CASE("natural width matches slot_count_for and pads with zeros above") {
  for (Natural b : {2ull, 5ull, 10ull}) {
    const RegisterSpec spec = RegisterSpec::finite(b, 6);
    for (Natural n = 1; n <= spec.capacity(); n += 7) {
      const std::size_t width = slot_count_for(n, b);
      const DigitVector d = encode_digits(n, spec);
      CAPTURE(b, n);
      REQUIRE(d.digits()[width - 1] != 0);
      for (std::size_t l = width; l < d.size(); ++l) {
        REQUIRE(d.digits()[l] == 0);
      }
      REQUIRE(encode_digits(n, b).digits() ==
              oracle::repeated_division_digits(n, b));
    }
  }
}

TEST_CASE("the full register encodes as all max digits") {
  const RegisterSpec spec = RegisterSpec::finite(5, 4);
  const DigitVector d = encode_digits(spec.capacity(), spec);
  for (Digit g : d.digits()) {
    CHECK(g == spec.max_digit());
  }
}

TEST_CASE("truncated-infinite registers guard their top slots") {
  const RegisterSpec host = RegisterSpec::truncated_infinite(10, 4, 2);
  CHECK(host.capacity() == 9999);
  CHECK(host.usable_capacity() == 99);
  CHECK(host.guard_start() == 2);
  CHECK_NOTHROW(encode_digits(99, host));
  CHECK_THROWS_MATCHES(encode_digits(100, host), Error, kind_is(ErrorKind::GuardViolation));
}

TEST_CASE("register construction validates its parameters") {
  CHECK_THROWS_AS(RegisterSpec::finite(1, 3), Error);
  CHECK_THROWS_AS(RegisterSpec::finite(2, 0), Error);
  CHECK_THROWS_AS(RegisterSpec::truncated_infinite(2, 1, 1), Error);
  CHECK_THROWS_AS(RegisterSpec::truncated_infinite(2, 3, 3), Error);
  CHECK_THROWS_AS(RegisterSpec::truncated_infinite(2, 3, 0), Error);
}
