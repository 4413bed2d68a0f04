#include <catch2/catch_amalgamated.hpp>

#include "fockdigits/base_change.hpp"

#include "matchers.hpp"
#include "oracles.hpp"

using namespace fockdigits;

TEST_CASE("quotient chains by repeated division") {
  const QuotientChain five = quotient_chain(5, 2);
  CHECK(five.quotients == std::vector<Natural>{5, 2, 1, 0});
  CHECK(five.shifts == std::vector<Natural>{4, 2, 0});

  CHECK(quotient_chain(1, 10).quotients == std::vector<Natural>{1, 0});
  CHECK(quotient_chain(100, 10).quotients ==
        std::vector<Natural>{100, 10, 1, 0});
}

TEST_CASE("quotient chain structure: ends at zero, non-increasing, digit-bounded") {
  for (Natural b : {2ull, 3ull, 10ull}) {
    for (Natural n = 1; n <= 500; ++n) {
      const QuotientChain chain = quotient_chain(n, b);
      CAPTURE(b, n);
      REQUIRE(chain.quotients.front() == n);
      REQUIRE(chain.quotients.back() == 0);
      REQUIRE(chain.slot_count() == slot_count_for(n, b));
      for (std::size_t j = 0; j + 1 < chain.quotients.size(); ++j) {
        REQUIRE(chain.quotients[j] >= chain.quotients[j + 1]);
        const Natural digit = chain.quotients[j] - b * chain.quotients[j + 1];
        REQUIRE(digit < b);
        REQUIRE(chain.shifts[j] <= chain.quotients[j]);
      }
    }
  }
}

TEST_CASE("quotient chain residue route agrees with division") {
  for (Natural b : {2ull, 3ull, 10ull}) {
    for (Natural n : {1ull, 7ull, 63ull, 99ull, 512ull, 1000ull}) {
      if (checked_pow(b, slot_count_for(n, b)) > kResidueOrderCap) {
        continue;
      }
      CAPTURE(b, n);
      REQUIRE(quotient_chain(n, b, FloorRoute::Residues).quotients ==
              quotient_chain(n, b, FloorRoute::Division).quotients);
    }
  }
}

TEST_CASE("quotient chain rejects n = 0 and caps the residue route") {
  CHECK_THROWS_MATCHES(quotient_chain(0, 2), Error,
                       kind_is(ErrorKind::OutOfRange));
  CHECK_THROWS_MATCHES(quotient_chain(5000, 2, FloorRoute::Residues), Error,
                       kind_is(ErrorKind::Overflow));
}

TEST_CASE("classical digits on the frozen examples") {
  CHECK(digits_classical(5, 2).digits() == std::vector<Digit>{1, 0, 1});
  CHECK(digits_classical(9, 10).digits() == std::vector<Digit>{9});
  CHECK(digits_classical(255, 16).digits() == std::vector<Digit>{15, 15});
}

TEST_CASE("spectral digits on the frozen examples") {
  CHECK(digits_spectral(5, 2).digits() == std::vector<Digit>{1, 0, 1});
  CHECK(digits_spectral(9, 10).digits() == std::vector<Digit>{9});
  CHECK(digits_spectral(17, 3).digits() == std::vector<Digit>{2, 2, 1});
  CHECK(digits_spectral(17, 3, FloorRoute::Residues).digits() ==
        std::vector<Digit>{2, 2, 1});
}

TEST_CASE("quantum digits shift number states down to their occupation") {
  // W_0 = 2 M_1 = 4, so T_0^4 |5> lands on |1> and gamma_0 = 1.
  const QuotientChain chain = quotient_chain(5, 2);
  REQUIRE(chain.shifts[0] == 4);
  const RegisterSpec host = default_host_register(5);
  CHECK(shift_T0_power(chain.quotients[0], chain.shifts[0], host,
                       ShiftDirection::Subtract) == 1);

  CHECK(digits_quantum(5, 2).digits() == std::vector<Digit>{1, 0, 1});
  // Terminating quotient: W_2 = 0 leaves |M_2> = |1> untouched.
  CHECK(chain.shifts[2] == 0);
  CHECK(chain.quotients[2] == 1);

  CHECK(digits_quantum(17, 3).digits() == std::vector<Digit>{2, 2, 1});
}

TEST_CASE("quantum digits through the literal translator sum") {
  for (Natural n : {1ull, 5ull, 17ull, 42ull, 99ull}) {
    for (Natural b : {2ull, 3ull, 10ull}) {
      CAPTURE(n, b);
      REQUIRE(digits_quantum(n, b, TranslationRoute::OperatorSum) ==
              digits_quantum(n, b, TranslationRoute::Borrow));
    }
  }
}

TEST_CASE("a custom host register base still recovers the digits") {
  const RegisterSpec host = RegisterSpec::truncated_infinite(7, 4, 1);
  CHECK(digits_quantum(100, 2, host).digits() ==
        std::vector<Digit>{0, 0, 1, 0, 0, 1, 1});
}

TEST_CASE("n = 0 yields the single zero digit from every route") {
  CHECK(digits_classical(0, 7).digits() == std::vector<Digit>{0});
  CHECK(digits_spectral(0, 7).digits() == std::vector<Digit>{0});
  CHECK(digits_quantum(0, 7).digits() == std::vector<Digit>{0});
}

TEST_CASE("three-route agreement with reconstruction") {
  for (Natural b : {2ull, 3ull, 7ull, 10ull}) {
    for (Natural n = 1; n <= 300; ++n) {
      const DigitVector reference = encode_digits(n, b);
      CAPTURE(b, n);
      REQUIRE(digits_classical(n, b) == reference);
      REQUIRE(digits_spectral(n, b) == reference);
      REQUIRE(digits_quantum(n, b) == reference);
      REQUIRE(decode_digits(reference) == n);
      REQUIRE(reference.digits() == oracle::repeated_division_digits(n, b));
    }
  }
}
